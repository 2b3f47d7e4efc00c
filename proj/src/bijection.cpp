#include "biclosed/bijection.hpp"

#include <algorithm>
#include <numeric>

namespace biclosed {

int PositionVector::p() const {
    return n + 1 - std::accumulate(sizes.begin(), sizes.end(), 0) - t();
}

void PositionVector::validate() const {
    if (n < 0)
        throw InvalidArgument("position vector: n must be >= 0");
    if (sizes.size() != positions.size())
        throw InvalidArgument("position vector: sizes and positions differ in length");
    for (int k : sizes)
        if (k < 1)
            throw InvalidArgument("position vector: interval sizes must be positive");
    for (std::size_t j = 0; j < positions.size(); ++j) {
        if (j == 0) {
            if (positions[0] < 1)
                throw InvalidArgument("position vector: first position must be >= 1");
        } else if (positions[j] < positions[j - 1] + sizes[j - 1] + 1) {
            throw InvalidArgument("position vector: intervals must be separated by a gap");
        }
    }
    if (t() > 0 && positions.back() + sizes.back() - 1 > n)
        throw InvalidArgument("position vector: last interval exceeds n");
    if (p() < 0)
        throw InvalidArgument("position vector: negative singleton count");
}

LabelSequence interleave(const PositionVector& pv) {
    pv.validate();
    LabelSequence out;
    out.reserve(static_cast<std::size_t>(pv.t() + pv.p()));
    int emitted_b = 0;
    int occupied = 0; // chain slots taken by earlier intervals, k_l + 1 each
    for (int j = 0; j < pv.t(); ++j) {
        const int b_before = pv.positions[static_cast<std::size_t>(j)] - 1 - occupied;
        while (emitted_b < b_before)
            out.push_back({false, ++emitted_b});
        out.push_back({true, j + 1});
        occupied += pv.sizes[static_cast<std::size_t>(j)] + 1;
    }
    while (emitted_b < pv.p())
        out.push_back({false, ++emitted_b});
    return out;
}

PositionVector deinterleave(const LabelSequence& order, const std::vector<int>& sizes, int n) {
    const int t = static_cast<int>(sizes.size());
    const int total_k = std::accumulate(sizes.begin(), sizes.end(), 0);
    const int p = n + 1 - total_k - t;
    if (p < 0)
        throw InvalidArgument("deinterleave: sizes do not fit inside n");
    if (order.size() != static_cast<std::size_t>(t + p))
        throw InvalidArgument("deinterleave: expected " + std::to_string(t + p) + " labels");

    PositionVector pv{n, sizes, {}};
    int next_a = 1;
    int next_b = 1;
    int seen_b = 0;
    int occupied = 0;
    for (const ChainLabel& label : order) {
        if (label.interval) {
            if (label.index != next_a)
                throw InvalidArgument("deinterleave: interval labels out of order");
            ++next_a;
            pv.positions.push_back(seen_b + 1 + occupied);
            occupied += sizes[static_cast<std::size_t>(label.index) - 1] + 1;
        } else {
            if (label.index != next_b)
                throw InvalidArgument("deinterleave: gap labels out of order");
            ++next_b;
            ++seen_b;
        }
    }
    if (next_a != t + 1 || next_b != p + 1)
        throw InvalidArgument("deinterleave: label families incomplete");
    pv.validate();
    return pv;
}

std::string label_sequence_string(const LabelSequence& order) {
    std::string out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0)
            out += '<';
        out += order[i].interval ? 'A' : 'B';
        out += std::to_string(order[i].index);
    }
    return out;
}

RootSet op_to_pairs(const OpTable& f) {
    require_quasitrivial(f);
    const int n = f.size() - 1;
    if (n > RootSet::max_rank)
        throw InvalidArgument("op_to_pairs: table size exceeds supported rank");
    RootSet c(n);
    for (int a = 1; a <= f.size(); ++a)
        for (int b = a + 1; b <= f.size(); ++b) {
            if (f.at(a, b) == b && f.at(b, a) == b)
                c.insert({a, b});
            else if (f.at(a, b) == a && f.at(b, a) == a)
                c.insert({b, a});
            else if (f.at(a, b) == b && f.at(b, a) == a) {
                c.insert({a, b});
                c.insert({b, a});
            }
        }
    return c;
}

OpTable pairs_to_op(const RootSet& c) {
    const int m = c.rank() + 1;
    OpTable f = OpTable::filled(m);
    for (int a = 1; a <= m; ++a)
        f.set(a, a, a);
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b) {
            const bool up = c.contains({a, b});
            const bool down = c.contains({b, a});
            if (up && down) {
                f.set(a, b, b);
                f.set(b, a, a);
            } else if (up) {
                f.set(a, b, b);
                f.set(b, a, b);
            } else if (down) {
                f.set(a, b, a);
                f.set(b, a, a);
            } else {
                f.set(a, b, a);
                f.set(b, a, b);
            }
        }
    return f;
}

bool associative_via_biclosed(const OpTable& f) {
    return is_biclosed(op_to_pairs(f));
}

SemigroupStructure analyze_semigroup(const OpTable& f) {
    SemigroupStructure s;
    s.preorder = to_preorder(f);
    const int n = f.size() - 1;

    // Chain labels straight from the block order; block of size k+1 is the
    // interval A_j of length k, singleton blocks are gaps.
    LabelSequence order;
    std::vector<int> sizes;
    std::vector<int> interval_projection;
    int next_a = 0;
    int next_b = 0;
    for (const PreorderBlock& block : s.preorder.blocks) {
        if (block.elements.size() >= 2) {
            order.push_back({true, ++next_a});
            sizes.push_back(static_cast<int>(block.elements.size()) - 1);
            interval_projection.push_back(*block.projection);
        } else {
            order.push_back({false, ++next_b});
        }
    }
    s.positions = deinterleave(order, sizes, n);

    std::vector<int> d1, d2;
    for (int j = 0; j < s.positions.t(); ++j) {
        const int i = s.positions.positions[static_cast<std::size_t>(j)];
        const int k = s.positions.sizes[static_cast<std::size_t>(j)];
        for (int q = i; q <= i + k - 1; ++q)
            (interval_projection[static_cast<std::size_t>(j)] == 1 ? d1 : d2).push_back(q);
    }
    s.delta1 = SimpleSubset(std::move(d1));
    s.delta2 = SimpleSubset(std::move(d2));

    std::vector<int> chain;
    chain.reserve(static_cast<std::size_t>(f.size()));
    for (const PreorderBlock& block : s.preorder.blocks)
        chain.insert(chain.end(), block.elements.begin(), block.elements.end());
    s.w = Permutation(std::move(chain));
    return s;
}

RootSet semigroup_to_biclosed(const OpTable& f) {
    const SemigroupStructure s = analyze_semigroup(f);
    return build_psi(s.w, s.delta1, s.delta2, f.size() - 1);
}

OpTable biclosed_to_semigroup(const RootSet& c) {
    if (auto v = find_biclosed_violation(c)) {
        const std::string where = v->in_complement ? "complement misses (" : "set misses (";
        throw NotBiclosed("input is not biclosed: " + where + std::to_string(v->sum.a) + "," +
                          std::to_string(v->sum.b) + ") = (" + std::to_string(v->x.a) + "," +
                          std::to_string(v->x.b) + ") + (" + std::to_string(v->y.a) + "," +
                          std::to_string(v->y.b) + ")");
    }
    OpTable f = pairs_to_op(c);
    to_preorder(f); // validates; cannot fail on biclosed input
    return f;
}

CanonicalBiclosed classify(const RootSet& c) {
    const OpTable f = biclosed_to_semigroup(c);
    const SemigroupStructure s = analyze_semigroup(f);
    return {s.w, s.delta1, s.delta2};
}

bool is_parabolic(const RootSet& c) {
    return classify(c).delta1.empty();
}

bool is_horocyclic(const RootSet& c) {
    return classify(c).delta2.empty();
}

namespace {

// All orthogonal (d1, d2) pairs of subsets of {1..rank}.
std::vector<std::pair<SimpleSubset, SimpleSubset>> orthogonal_pairs(int rank) {
    std::vector<std::pair<SimpleSubset, SimpleSubset>> out;
    const int subsets = 1 << rank;
    for (int m1 = 0; m1 < subsets; ++m1)
        for (int m2 = 0; m2 < subsets; ++m2) {
            std::vector<int> v1, v2;
            for (int i = 1; i <= rank; ++i) {
                if (m1 & (1 << (i - 1)))
                    v1.push_back(i);
                if (m2 & (1 << (i - 1)))
                    v2.push_back(i);
            }
            SimpleSubset d1(std::move(v1)), d2(std::move(v2));
            if (orthogonal(d1, d2))
                out.emplace_back(std::move(d1), std::move(d2));
        }
    return out;
}

} // namespace

OpTable biclosed_to_semigroup_interleaving(const RootSet& c) {
    if (find_biclosed_violation(c))
        throw NotBiclosed("input is not biclosed");
    const int n = c.rank();
    const int m = n + 1;

    for (const auto& [d1, d2] : orthogonal_pairs(n))
        for (const Permutation& w : symmetric_group(m)) {
            if (build_psi(w, d1, d2, n) != c)
                continue;

            // Interval structure of this presentation. Orthogonality keeps
            // every maximal run of d1 and d2 apart, so runs of the union
            // inherit a single projection label.
            SimpleSubset all(d1);
            all.indices.insert(all.indices.end(), d2.indices.begin(), d2.indices.end());
            all = SimpleSubset(std::move(all.indices));

            // block id per chain slot 1..m; -1 marks a singleton slot
            std::vector<int> slot_interval(static_cast<std::size_t>(m) + 1, -1);
            std::vector<int> projection;
            const auto runs = all.intervals();
            for (std::size_t j = 0; j < runs.size(); ++j) {
                const auto [start, len] = runs[j];
                for (int q = start; q <= start + len; ++q)
                    slot_interval[static_cast<std::size_t>(q)] = static_cast<int>(j);
                projection.push_back(d1.contains(start) ? 1 : 2);
            }

            // Class index per element, classes ordered by chain slot.
            std::vector<int> class_of(static_cast<std::size_t>(m) + 1, 0);
            std::vector<int> class_projection; // 0 = singleton
            int next_class = 0;
            for (int slot = 1; slot <= m; ++slot) {
                const int iv = slot_interval[static_cast<std::size_t>(slot)];
                if (iv >= 0 && slot > 1 && slot_interval[static_cast<std::size_t>(slot) - 1] == iv) {
                    class_of[static_cast<std::size_t>(w.apply(slot))] = next_class - 1;
                    continue;
                }
                class_of[static_cast<std::size_t>(w.apply(slot))] = next_class++;
                class_projection.push_back(iv >= 0 ? projection[static_cast<std::size_t>(iv)] : 0);
            }

            OpTable f = OpTable::filled(m);
            for (int x = 1; x <= m; ++x)
                for (int y = 1; y <= m; ++y) {
                    const int cx = class_of[static_cast<std::size_t>(x)];
                    const int cy = class_of[static_cast<std::size_t>(y)];
                    if (cx != cy)
                        f.set(x, y, cx > cy ? x : y);
                    else if (x == y)
                        f.set(x, y, x);
                    else
                        f.set(x, y, class_projection[static_cast<std::size_t>(cx)] == 1 ? x : y);
                }
            return f;
        }
    throw CrossCheckFailure("no presentation found for a biclosed set"); // unreachable
}

} // namespace biclosed
