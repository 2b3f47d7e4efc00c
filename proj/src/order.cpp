#include "biclosed/order.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "biclosed/format.hpp"

namespace biclosed {

PairRestriction restriction(const OpTable& f, int a, int b) {
    if (a == b)
        throw InvalidArgument("restriction: need two distinct elements");
    if (a > b)
        std::swap(a, b);
    const bool up = f.at(a, b) == b && f.at(b, a) == b;     // max
    const bool both = f.at(a, b) == b && f.at(b, a) == a;   // second projection
    const bool down = f.at(a, b) == a && f.at(b, a) == a;   // min
    unsigned state = 0;
    if (up || both)
        state |= 1;
    if (down || both)
        state |= 2;
    return static_cast<PairRestriction>(state);
}

bool leq_restriction(const OpTable& f, const OpTable& g, int a, int b) {
    const auto sf = static_cast<unsigned>(restriction(f, a, b));
    const auto sg = static_cast<unsigned>(restriction(g, a, b));
    return (sf & ~sg) == 0;
}

bool leq_op(const OpTable& f, const OpTable& g) {
    if (f.size() != g.size())
        throw InvalidArgument("leq_op: table sizes differ");
    for (int a = 1; a <= f.size(); ++a)
        for (int b = a + 1; b <= f.size(); ++b)
            if (!leq_restriction(f, g, a, b))
                return false;
    return true;
}

bool leq_set(const RootSet& c, const RootSet& d) {
    return c.subset_of(d);
}

PosetView::PosetView(std::vector<RootSet> sets) : sets_(std::move(sets)) {
    std::sort(sets_.begin(), sets_.end(), lex_less);
    const int n = size();
    ops_.reserve(static_cast<std::size_t>(n));
    for (const RootSet& c : sets_)
        ops_.push_back(biclosed_to_semigroup(c));

    // Linear extension: containment implies cardinality order.
    by_cardinality_.resize(static_cast<std::size_t>(n));
    std::iota(by_cardinality_.begin(), by_cardinality_.end(), 0);
    std::stable_sort(by_cardinality_.begin(), by_cardinality_.end(), [&](int x, int y) {
        return sets_[static_cast<std::size_t>(x)].size() < sets_[static_cast<std::size_t>(y)].size();
    });
    topo_rank_.resize(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p)
        topo_rank_[static_cast<std::size_t>(by_cardinality_[static_cast<std::size_t>(p)])] = p;

    words_ = (static_cast<std::size_t>(n) + 63) / 64;
    down_.assign(static_cast<std::size_t>(n), std::vector<std::uint64_t>(words_, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (sets_[static_cast<std::size_t>(j)].subset_of(sets_[static_cast<std::size_t>(i)])) {
                const int p = topo_rank_[static_cast<std::size_t>(j)];
                down_[static_cast<std::size_t>(i)][static_cast<std::size_t>(p) / 64] |=
                    std::uint64_t{1} << (p % 64);
            }
}

bool PosetView::leq(int i, int j) const {
    const int p = topo_rank_[static_cast<std::size_t>(i)];
    return (down_[static_cast<std::size_t>(j)][static_cast<std::size_t>(p) / 64] >> (p % 64)) & 1;
}

std::vector<std::pair<int, int>> PosetView::hasse_edges() const {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) {
            if (i == j || !leq(i, j))
                continue;
            bool cover = true;
            for (int k = 0; k < size() && cover; ++k)
                cover = k == i || k == j || !(leq(i, k) && leq(k, j));
            if (cover)
                edges.emplace_back(i, j);
        }
    std::sort(edges.begin(), edges.end());
    return edges;
}

int PosetView::extreme_bound(int i, int j, bool lower) const {
    // Bound candidates: common down-set (meet) or common up-set (join).
    // The up-set is derived by testing leq against each candidate.
    std::vector<std::uint64_t> common(words_, 0);
    if (lower) {
        for (std::size_t w = 0; w < words_; ++w)
            common[w] = down_[static_cast<std::size_t>(i)][w] & down_[static_cast<std::size_t>(j)][w];
    } else {
        for (int k = 0; k < size(); ++k)
            if (leq(i, k) && leq(j, k)) {
                const int p = topo_rank_[static_cast<std::size_t>(k)];
                common[static_cast<std::size_t>(p) / 64] |= std::uint64_t{1} << (p % 64);
            }
    }

    // Meet: the topmost candidate in the linear extension, which must then
    // dominate every other candidate. Join: dual.
    int pos = -1;
    if (lower) {
        for (std::size_t w = words_; w-- > 0;)
            if (common[w]) {
                pos = static_cast<int>(w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(common[w])));
                break;
            }
    } else {
        for (std::size_t w = 0; w < words_; ++w)
            if (common[w]) {
                pos = static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(common[w])));
                break;
            }
    }
    if (pos < 0)
        throw LatticeViolation(std::string(lower ? "meet" : "join") + ": no common bound");

    const int z = by_cardinality_[static_cast<std::size_t>(pos)];
    for (int k = 0; k < size(); ++k) {
        const int p = topo_rank_[static_cast<std::size_t>(k)];
        if (!((common[static_cast<std::size_t>(p) / 64] >> (p % 64)) & 1))
            continue;
        if (lower ? !leq(k, z) : !leq(z, k))
            throw LatticeViolation(std::string(lower ? "meet" : "join") + ": bound of " +
                                   std::to_string(i) + "," + std::to_string(j) + " is not unique");
    }
    return z;
}

int PosetView::meet(int i, int j) const {
    return extreme_bound(i, j, true);
}

int PosetView::join(int i, int j) const {
    return extreme_bound(i, j, false);
}

bool PosetView::is_lattice(std::string* why) const {
    for (int i = 0; i < size(); ++i)
        for (int j = i; j < size(); ++j) {
            try {
                meet(i, j);
                join(i, j);
            } catch (const LatticeViolation& e) {
                if (why)
                    *why = e.what();
                return false;
            }
        }
    return true;
}

std::string PosetView::to_dot() const {
    std::string out = "digraph biclosed_poset {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int i = 0; i < size(); ++i) {
        const RootSet& c = sets_[static_cast<std::size_t>(i)];
        out += "  n" + std::to_string(i) + " [label=\"" + canonical_string(c) + "\\n" +
               block_string(to_preorder(ops_[static_cast<std::size_t>(i)])) + "\"];\n";
    }
    for (auto [lo, hi] : hasse_edges())
        out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
    out += "}\n";
    return out;
}

} // namespace biclosed
