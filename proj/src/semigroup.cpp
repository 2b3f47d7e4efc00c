#include "biclosed/semigroup.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace biclosed {

OpTable::OpTable(int m, std::vector<int> cells) : m_(m), cells_(std::move(cells)) {
    if (m < 1)
        throw InvalidArgument("op table: size must be >= 1");
    if (cells_.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(m))
        throw InvalidArgument("op table: expected " + std::to_string(m * m) + " cells");
    for (int v : cells_)
        if (v < 1 || v > m)
            throw InvalidArgument("op table: entry " + std::to_string(v) + " outside 1.." + std::to_string(m));
}

OpTable OpTable::filled(int m, int fill) {
    if (m < 1)
        throw InvalidArgument("op table: size must be >= 1");
    return OpTable(m, std::vector<int>(static_cast<std::size_t>(m) * m, fill));
}

OpTable OpTable::projection_first(int m) {
    OpTable f = filled(m);
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b)
            f.set(a, b, a);
    return f;
}

OpTable OpTable::projection_second(int m) {
    OpTable f = filled(m);
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b)
            f.set(a, b, b);
    return f;
}

std::size_t OpTable::index(int a, int b) const {
    if (a < 1 || a > m_ || b < 1 || b > m_)
        throw InvalidArgument("op table: index out of range");
    return static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(b - 1);
}

void OpTable::set(int a, int b, int value) {
    if (value < 1 || value > m_)
        throw InvalidArgument("op table: entry out of range");
    cells_[index(a, b)] = value;
}

bool is_quasitrivial(const OpTable& f) {
    for (int a = 1; a <= f.size(); ++a)
        for (int b = 1; b <= f.size(); ++b) {
            const int v = f.at(a, b);
            if (v != a && v != b)
                return false;
        }
    return true;
}

void require_quasitrivial(const OpTable& f) {
    for (int a = 1; a <= f.size(); ++a)
        for (int b = 1; b <= f.size(); ++b) {
            const int v = f.at(a, b);
            if (v != a && v != b)
                throw NotQuasitrivial("table is not quasitrivial: F(" + std::to_string(a) + "," +
                                      std::to_string(b) + ") = " + std::to_string(v));
        }
}

std::optional<std::array<int, 3>> find_associativity_violation(const OpTable& f) {
    const int m = f.size();
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b)
            for (int c = 1; c <= m; ++c)
                if (f.at(f.at(a, b), c) != f.at(a, f.at(b, c)))
                    return std::array<int, 3>{a, b, c};
    return std::nullopt;
}

bool is_associative(const OpTable& f) {
    require_quasitrivial(f);
    return !find_associativity_violation(f).has_value();
}

void PreorderDecomposition::validate() const {
    if (m < 1)
        throw InvalidArgument("preorder: m must be >= 1");
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    std::size_t covered = 0;
    for (const PreorderBlock& block : blocks) {
        if (block.elements.empty())
            throw InvalidArgument("preorder: empty block");
        if (!std::is_sorted(block.elements.begin(), block.elements.end()))
            throw InvalidArgument("preorder: block elements must ascend");
        for (int x : block.elements) {
            if (x < 1 || x > m || seen[static_cast<std::size_t>(x) - 1])
                throw InvalidArgument("preorder: blocks must partition 1.." + std::to_string(m));
            seen[static_cast<std::size_t>(x) - 1] = true;
            ++covered;
        }
        if (block.elements.size() >= 2) {
            if (!block.projection || (*block.projection != 1 && *block.projection != 2))
                throw InvalidArgument("preorder: block of size >= 2 needs projection 1 or 2");
        } else if (block.projection) {
            throw InvalidArgument("preorder: singleton block must not carry a projection");
        }
    }
    if (covered != static_cast<std::size_t>(m))
        throw InvalidArgument("preorder: blocks must cover 1.." + std::to_string(m));
}

PreorderDecomposition to_preorder(const OpTable& f) {
    require_quasitrivial(f);
    const int m = f.size();

    // x <= y (x != y) iff y wins at least once; with quasitriviality this is
    // total, so a single transitivity sweep certifies the preorder.
    auto leq = [&](int x, int y) {
        return x == y || f.at(x, y) == y || f.at(y, x) == y;
    };
    for (int x = 1; x <= m; ++x)
        for (int y = 1; y <= m; ++y)
            for (int z = 1; z <= m; ++z)
                if (leq(x, y) && leq(y, z) && !leq(x, z))
                    throw NotAssociative("relation extracted from the table is not transitive at (" +
                                         std::to_string(x) + "," + std::to_string(y) + "," +
                                         std::to_string(z) + ")");

    auto equivalent = [&](int x, int y) { return leq(x, y) && leq(y, x); };

    std::vector<PreorderBlock> blocks;
    std::vector<bool> assigned(static_cast<std::size_t>(m), false);
    for (int x = 1; x <= m; ++x) {
        if (assigned[static_cast<std::size_t>(x) - 1])
            continue;
        PreorderBlock block;
        for (int y = x; y <= m; ++y)
            if (equivalent(x, y)) {
                block.elements.push_back(y);
                assigned[static_cast<std::size_t>(y) - 1] = true;
            }
        if (block.elements.size() >= 2) {
            // The class must be uniformly one projection.
            const int a0 = block.elements[0];
            const int b0 = block.elements[1];
            const int proj = f.at(a0, b0) == a0 ? 1 : 2;
            for (int a : block.elements)
                for (int b : block.elements)
                    if (a != b && f.at(a, b) != (proj == 1 ? a : b))
                        throw NotAssociative("class containing " + std::to_string(a0) +
                                             " mixes projections at (" + std::to_string(a) + "," +
                                             std::to_string(b) + ")");
            block.projection = proj;
        }
        blocks.push_back(std::move(block));
    }

    // Ascending by the strict relation; representatives are comparable
    // because the relation is total.
    std::sort(blocks.begin(), blocks.end(), [&](const PreorderBlock& x, const PreorderBlock& y) {
        const int rx = x.elements[0];
        const int ry = y.elements[0];
        if (equivalent(rx, ry))
            return false;
        return leq(rx, ry);
    });

    PreorderDecomposition p{m, std::move(blocks)};
    p.validate();
    return p;
}

OpTable from_preorder(const PreorderDecomposition& p) {
    p.validate();
    std::vector<int> block_of(static_cast<std::size_t>(p.m) + 1, 0);
    for (std::size_t i = 0; i < p.blocks.size(); ++i)
        for (int x : p.blocks[i].elements)
            block_of[static_cast<std::size_t>(x)] = static_cast<int>(i);

    OpTable f = OpTable::filled(p.m);
    for (int a = 1; a <= p.m; ++a)
        for (int b = 1; b <= p.m; ++b) {
            const int ba = block_of[static_cast<std::size_t>(a)];
            const int bb = block_of[static_cast<std::size_t>(b)];
            if (ba != bb)
                f.set(a, b, ba > bb ? a : b);
            else if (p.blocks[static_cast<std::size_t>(ba)].projection.value_or(1) == 1)
                f.set(a, b, a);
            else
                f.set(a, b, b);
        }
    return f;
}

bool is_commutative(const OpTable& f) {
    for (int a = 1; a <= f.size(); ++a)
        for (int b = a + 1; b <= f.size(); ++b)
            if (f.at(a, b) != f.at(b, a))
                return false;
    return true;
}

bool is_anticommutative(const OpTable& f) {
    for (int a = 1; a <= f.size(); ++a)
        for (int b = 1; b <= f.size(); ++b)
            if (a != b && f.at(a, b) == f.at(b, a))
                return false;
    return true;
}

std::optional<int> identity_element(const OpTable& f) {
    for (int e = 1; e <= f.size(); ++e) {
        bool ok = true;
        for (int x = 1; x <= f.size() && ok; ++x)
            ok = f.at(e, x) == x && f.at(x, e) == x;
        if (ok)
            return e;
    }
    return std::nullopt;
}

std::optional<int> zero_element(const OpTable& f) {
    for (int z = 1; z <= f.size(); ++z) {
        bool ok = true;
        for (int x = 1; x <= f.size() && ok; ++x)
            ok = f.at(z, x) == z && f.at(x, z) == z;
        if (ok)
            return z;
    }
    return std::nullopt;
}

OpTable act_op(const Permutation& sigma, const OpTable& f) {
    if (sigma.degree() != f.size())
        throw InvalidArgument("act_op: permutation degree does not match table size");
    const Permutation inv = sigma.inverse();
    OpTable out = OpTable::filled(f.size());
    for (int a = 1; a <= f.size(); ++a)
        for (int b = 1; b <= f.size(); ++b)
            out.set(a, b, sigma.apply(f.at(inv.apply(a), inv.apply(b))));
    return out;
}

std::string block_string(const PreorderDecomposition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        if (i > 0)
            out += '<';
        const PreorderBlock& block = p.blocks[i];
        if (block.elements.size() == 1) {
            out += std::to_string(block.elements[0]);
            continue;
        }
        out += '{';
        for (std::size_t j = 0; j < block.elements.size(); ++j) {
            if (j > 0)
                out += ',';
            out += std::to_string(block.elements[j]);
        }
        out += "}^" + std::to_string(*block.projection);
    }
    return out;
}

} // namespace biclosed
