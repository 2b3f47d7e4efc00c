#include "biclosed/format.hpp"

namespace biclosed {

std::string root_string(Root r) {
    const bool positive = r.a < r.b;
    const int lo = positive ? r.a : r.b;
    const int hi = positive ? r.b : r.a;
    std::string out;
    for (int i = lo; i < hi; ++i) {
        out += positive ? (i == lo ? "" : "+") : "-";
        out += "a" + std::to_string(i);
    }
    return out;
}

std::string root_set_string(const RootSet& c) {
    std::string out = "{";
    bool first = true;
    for (Root r : c.roots()) {
        if (!first)
            out += ',';
        out += root_string(r);
        first = false;
    }
    return out + "}";
}

std::string simple_subset_string(const SimpleSubset& d) {
    std::string out = "{";
    for (std::size_t i = 0; i < d.indices.size(); ++i) {
        if (i > 0)
            out += ',';
        out += "a" + std::to_string(d.indices[i]);
    }
    return out + "}";
}

std::string canonical_string(const CanonicalBiclosed& cb) {
    std::string out;
    if (!cb.w.is_identity())
        out += cb.w.cycles();
    out += "Phi+_{" + simple_subset_string(cb.delta1) + "," + simple_subset_string(cb.delta2) + "}";
    return out;
}

std::string canonical_string(const RootSet& c) {
    return canonical_string(classify(c));
}

} // namespace biclosed
