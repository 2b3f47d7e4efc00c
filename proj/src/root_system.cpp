#include "biclosed/root_system.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>
#include <numeric>

namespace biclosed {

std::optional<Root> root_sum(Root x, Root y, int rank) {
    const int m = rank + 1;
    auto valid = [m](Root r) { return r.a >= 1 && r.a <= m && r.b >= 1 && r.b <= m && r.a != r.b; };
    if (!valid(x) || !valid(y))
        throw InvalidArgument("root_sum: root out of range for rank " + std::to_string(rank));
    if (x.b == y.a && x.a != y.b)
        return Root{x.a, y.b};
    if (y.b == x.a && y.a != x.b)
        return Root{y.a, x.b};
    return std::nullopt;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int m = static_cast<int>(images_.size());
    if (m < 1)
        throw InvalidArgument("permutation: empty image list");
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (int v : images_) {
        if (v < 1 || v > m || seen[static_cast<std::size_t>(v) - 1])
            throw InvalidArgument("permutation: images are not a bijection on 1.." + std::to_string(m));
        seen[static_cast<std::size_t>(v) - 1] = true;
    }
}

Permutation Permutation::identity(int degree) {
    if (degree < 1)
        throw InvalidArgument("permutation: degree must be positive");
    std::vector<int> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& inner) const {
    if (degree() != inner.degree())
        throw InvalidArgument("permutation: degree mismatch in composition");
    std::vector<int> img(images_.size());
    for (int x = 1; x <= degree(); ++x)
        img[static_cast<std::size_t>(x) - 1] = apply(inner.apply(x));
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(images_.size());
    for (int x = 1; x <= degree(); ++x)
        img[static_cast<std::size_t>(apply(x)) - 1] = x;
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int x = 1; x <= degree(); ++x)
        if (apply(x) != x)
            return false;
    return true;
}

std::string Permutation::cycles() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 1; start <= degree(); ++start) {
        if (seen[static_cast<std::size_t>(start) - 1] || apply(start) == start)
            continue;
        out += '(';
        int x = start;
        bool first = true;
        while (!seen[static_cast<std::size_t>(x) - 1]) {
            seen[static_cast<std::size_t>(x) - 1] = true;
            if (!first)
                out += ',';
            out += std::to_string(x);
            first = false;
            x = apply(x);
        }
        out += ')';
    }
    return out.empty() ? "id" : out;
}

Permutation Permutation::from_cycles(const std::string& text, int degree) {
    if (degree < 1)
        throw InvalidArgument("permutation: degree must be positive");
    std::vector<int> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 1);

    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    };
    skip_ws();
    if (pos < text.size() && text.compare(pos, 2, "id") == 0) {
        pos += 2;
        skip_ws();
        if (pos != text.size())
            throw InvalidArgument("permutation: trailing text after 'id'");
        return Permutation(std::move(img));
    }
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    bool any = false;
    while (pos < text.size()) {
        skip_ws();
        if (pos == text.size())
            break;
        if (text[pos] != '(')
            throw InvalidArgument("permutation: expected '(' in cycle notation");
        ++pos;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            std::size_t end = pos;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])))
                ++end;
            if (end == pos)
                throw InvalidArgument("permutation: expected index in cycle notation");
            int v = std::stoi(text.substr(pos, end - pos));
            pos = end;
            if (v < 1 || v > degree)
                throw InvalidArgument("permutation: cycle entry " + std::to_string(v) +
                                      " out of range 1.." + std::to_string(degree));
            if (used[static_cast<std::size_t>(v) - 1])
                throw InvalidArgument("permutation: index " + std::to_string(v) + " repeated across cycles");
            used[static_cast<std::size_t>(v) - 1] = true;
            cycle.push_back(v);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            throw InvalidArgument("permutation: expected ',' or ')' in cycle notation");
        }
        for (std::size_t i = 0; i < cycle.size(); ++i)
            img[static_cast<std::size_t>(cycle[i]) - 1] = cycle[(i + 1) % cycle.size()];
        any = true;
    }
    if (!any)
        throw InvalidArgument("permutation: empty cycle text");
    return Permutation(std::move(img));
}

std::vector<Permutation> symmetric_group(int degree) {
    if (degree < 1)
        throw InvalidArgument("symmetric_group: degree must be positive");
    std::vector<int> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

SimpleSubset::SimpleSubset(std::initializer_list<int> init) : SimpleSubset(std::vector<int>(init)) {}

SimpleSubset::SimpleSubset(std::vector<int> idx) : indices(std::move(idx)) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    for (int i : indices)
        if (i < 1)
            throw InvalidArgument("simple subset: indices must be >= 1");
}

bool SimpleSubset::contains(int i) const {
    return std::binary_search(indices.begin(), indices.end(), i);
}

std::vector<std::pair<int, int>> SimpleSubset::intervals() const {
    std::vector<std::pair<int, int>> out;
    std::size_t i = 0;
    while (i < indices.size()) {
        int start = indices[i];
        int len = 1;
        while (i + 1 < indices.size() && indices[i + 1] == indices[i] + 1) {
            ++i;
            ++len;
        }
        out.emplace_back(start, len);
        ++i;
    }
    return out;
}

bool orthogonal(const SimpleSubset& d1, const SimpleSubset& d2) {
    for (int i : d1.indices)
        for (int j : d2.indices)
            if (std::abs(i - j) < 2)
                return false;
    return true;
}

int pair_slot(int rank, int a, int b) {
    return (a - 1) * rank + (b - 1) - (b > a ? 1 : 0);
}

Root slot_pair(int rank, int slot) {
    const int a = slot / rank + 1;
    int off = slot % rank;
    const int b = off + 1 >= a ? off + 2 : off + 1;
    return {a, b};
}

RootSet::RootSet(int rank) : n_(rank) {
    if (rank < 0 || rank > max_rank)
        throw InvalidArgument("root set: rank must be in 0.." + std::to_string(max_rank));
}

RootSet RootSet::from_mask(int rank, std::uint64_t mask) {
    RootSet c(rank);
    const std::uint64_t full = rank == 0 ? 0 : (~std::uint64_t{0} >> (64 - rank * (rank + 1)));
    if ((mask & ~full) != 0)
        throw InvalidArgument("root set: mask has bits outside the universe");
    c.bits_ = mask;
    return c;
}

RootSet RootSet::from_roots(int rank, const std::vector<Root>& roots) {
    RootSet c(rank);
    for (Root r : roots)
        c.insert(r);
    return c;
}

RootSet RootSet::standard_positive(int rank) {
    RootSet c(rank);
    for (int a = 1; a <= rank; ++a)
        for (int b = a + 1; b <= rank + 1; ++b)
            c.insert({a, b});
    return c;
}

RootSet RootSet::full(int rank) {
    RootSet c(rank);
    if (rank > 0)
        c.bits_ = ~std::uint64_t{0} >> (64 - rank * (rank + 1));
    return c;
}

void RootSet::check_root(Root r) const {
    if (r.a < 1 || r.a > n_ + 1 || r.b < 1 || r.b > n_ + 1 || r.a == r.b)
        throw InvalidArgument("root set: invalid root (" + std::to_string(r.a) + "," +
                              std::to_string(r.b) + ") for rank " + std::to_string(n_));
}

bool RootSet::contains(Root r) const {
    check_root(r);
    return (bits_ >> pair_slot(n_, r.a, r.b)) & 1;
}

void RootSet::insert(Root r) {
    check_root(r);
    bits_ |= std::uint64_t{1} << pair_slot(n_, r.a, r.b);
}

void RootSet::erase(Root r) {
    check_root(r);
    bits_ &= ~(std::uint64_t{1} << pair_slot(n_, r.a, r.b));
}

std::size_t RootSet::size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
}

std::vector<Root> RootSet::roots() const {
    std::vector<Root> out;
    out.reserve(size());
    for (int slot = 0; slot < universe_size(); ++slot)
        if ((bits_ >> slot) & 1)
            out.push_back(slot_pair(n_, slot));
    return out;
}

RootSet RootSet::complement() const {
    return from_mask(n_, full(n_).bits_ & ~bits_);
}

RootSet RootSet::negated() const {
    RootSet out(n_);
    for (Root r : roots())
        out.insert(biclosed::negated(r));
    return out;
}

bool RootSet::subset_of(const RootSet& other) const {
    if (n_ != other.n_)
        throw InvalidArgument("root set: rank mismatch in containment test");
    return (bits_ & ~other.bits_) == 0;
}

bool lex_less(const RootSet& x, const RootSet& y) {
    const auto rx = x.roots();
    const auto ry = y.roots();
    return std::lexicographical_compare(rx.begin(), rx.end(), ry.begin(), ry.end());
}

namespace {

std::optional<ClosureViolation> closure_violation_in(const RootSet& c) {
    const int m = c.rank() + 1;
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b) {
            if (b == a || !c.contains({a, b}))
                continue;
            for (int d = 1; d <= m; ++d) {
                if (d == a || d == b)
                    continue;
                if (c.contains({b, d}) && !c.contains({a, d}))
                    return ClosureViolation{{a, b}, {b, d}, {a, d}, false};
            }
        }
    return std::nullopt;
}

} // namespace

std::optional<ClosureViolation> find_closure_violation(const RootSet& c) {
    return closure_violation_in(c);
}

bool is_closed(const RootSet& c) {
    return !find_closure_violation(c).has_value();
}

std::optional<ClosureViolation> find_biclosed_violation(const RootSet& c) {
    if (auto v = closure_violation_in(c))
        return v;
    if (auto v = closure_violation_in(c.complement())) {
        v->in_complement = true;
        return v;
    }
    return std::nullopt;
}

bool is_biclosed(const RootSet& c) {
    return !find_biclosed_violation(c).has_value();
}

RootSet span_subsystem(const SimpleSubset& d, int rank) {
    for (int i : d.indices)
        if (i > rank)
            throw InvalidArgument("span: index " + std::to_string(i) + " above rank " + std::to_string(rank));
    RootSet out(rank);
    for (auto [start, len] : d.intervals())
        for (int a = start; a <= start + len; ++a)
            for (int b = start; b <= start + len; ++b)
                if (a != b)
                    out.insert({a, b});
    return out;
}

RootSet build_psi(const Permutation& w, const SimpleSubset& d1, const SimpleSubset& d2, int rank) {
    if (!orthogonal(d1, d2))
        throw InvalidArgument("build_psi: the simple subsets are not orthogonal");
    if (w.degree() != rank + 1)
        throw InvalidArgument("build_psi: permutation degree does not match rank");
    const std::uint64_t positive = RootSet::standard_positive(rank).mask();
    const std::uint64_t s1 = span_subsystem(d1, rank).mask();
    const std::uint64_t s2 = span_subsystem(d2, rank).mask();
    return act_set(w, RootSet::from_mask(rank, (positive & ~s1) | s2));
}

Root act_root(const Permutation& w, Root r) {
    return {w.apply(r.a), w.apply(r.b)};
}

RootSet act_set(const Permutation& w, const RootSet& c) {
    if (w.degree() != c.rank() + 1)
        throw InvalidArgument("act_set: permutation degree does not match rank");
    RootSet out(c.rank());
    for (Root r : c.roots())
        out.insert(act_root(w, r));
    return out;
}

bool is_positive_system(const RootSet& c) {
    const RootSet neg = c.negated();
    if ((c.mask() & neg.mask()) != 0)
        return false;
    if ((c.mask() | neg.mask()) != RootSet::full(c.rank()).mask())
        return false;
    return is_biclosed(c);
}

std::vector<Permutation> stabilizer(const RootSet& c) {
    if (auto v = find_biclosed_violation(c))
        throw NotBiclosed("stabilizer: input is not biclosed");
    std::vector<Permutation> out;
    for (const Permutation& w : symmetric_group(c.rank() + 1))
        if (act_set(w, c) == c)
            out.push_back(w);
    return out;
}

std::vector<Permutation> conjugated_parabolic_subgroup(const Permutation& w,
                                                       const SimpleSubset& gens) {
    const int m = w.degree();
    std::vector<Permutation> generators;
    for (int i : gens.indices) {
        if (i + 1 > m)
            throw InvalidArgument("parabolic subgroup: generator index out of range");
        std::vector<int> img(static_cast<std::size_t>(m));
        std::iota(img.begin(), img.end(), 1);
        std::swap(img[static_cast<std::size_t>(i) - 1], img[static_cast<std::size_t>(i)]);
        generators.emplace_back(std::move(img));
    }
    // Closure of the generating set, then conjugation by w.
    std::vector<Permutation> group{Permutation::identity(m)};
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < group.size(); ++i)
            for (const Permutation& g : generators) {
                Permutation h = group[i].compose(g);
                if (std::find(group.begin(), group.end(), h) == group.end()) {
                    group.push_back(std::move(h));
                    grew = true;
                }
            }
    }
    const Permutation winv = w.inverse();
    std::vector<Permutation> out;
    out.reserve(group.size());
    for (const Permutation& u : group)
        out.push_back(w.compose(u).compose(winv));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace biclosed
