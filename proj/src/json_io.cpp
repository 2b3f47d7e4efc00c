#include "biclosed/json_io.hpp"

namespace biclosed {

using nlohmann::json;

namespace {

int require_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw InvalidArgument(std::string("expected an integer for ") + what);
    return j.get<int>();
}

const json& require_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InvalidArgument(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

} // namespace

json to_json(const RootSet& c) {
    json roots = json::array();
    for (Root r : c.roots())
        roots.push_back(json::array({r.a, r.b}));
    return json{{"n", c.rank()}, {"roots", std::move(roots)}};
}

RootSet root_set_from_json(const json& j) {
    const int n = require_int(require_field(j, "n"), "n");
    RootSet c(n);
    const json& roots = require_field(j, "roots");
    if (!roots.is_array())
        throw InvalidArgument("\"roots\" must be an array of pairs");
    for (const json& entry : roots) {
        if (!entry.is_array() || entry.size() != 2)
            throw InvalidArgument("each root must be a pair [a,b]");
        c.insert({require_int(entry[0], "root index"), require_int(entry[1], "root index")});
    }
    return c;
}

json to_json(const Permutation& w) {
    return json{{"images", w.images()}};
}

Permutation permutation_from_json(const json& j) {
    const json& images = require_field(j, "images");
    if (!images.is_array() || images.empty())
        throw InvalidArgument("\"images\" must be a nonempty array");
    std::vector<int> img;
    img.reserve(images.size());
    for (const json& v : images)
        img.push_back(require_int(v, "image"));
    return Permutation(std::move(img));
}

json to_json(const OpTable& f) {
    json rows = json::array();
    for (int a = 1; a <= f.size(); ++a) {
        json row = json::array();
        for (int b = 1; b <= f.size(); ++b)
            row.push_back(f.at(a, b));
        rows.push_back(std::move(row));
    }
    return json{{"m", f.size()}, {"table", std::move(rows)}};
}

OpTable op_table_from_json(const json& j) {
    const int m = require_int(require_field(j, "m"), "m");
    if (m < 1)
        throw InvalidArgument("\"m\" must be >= 1");
    const json& rows = require_field(j, "table");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(m))
        throw InvalidArgument("\"table\" must have m rows");
    std::vector<int> cells;
    cells.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
    for (const json& row : rows) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(m))
            throw InvalidArgument("each table row must have m entries");
        for (const json& v : row)
            cells.push_back(require_int(v, "table entry"));
    }
    return OpTable(m, std::move(cells));
}

json to_json(const PreorderDecomposition& p) {
    json blocks = json::array();
    for (const PreorderBlock& block : p.blocks) {
        json b{{"elements", block.elements}};
        b["projection"] = block.projection ? json(*block.projection) : json(nullptr);
        blocks.push_back(std::move(b));
    }
    return json{{"m", p.m}, {"blocks", std::move(blocks)}};
}

PreorderDecomposition preorder_from_json(const json& j) {
    PreorderDecomposition p;
    p.m = require_int(require_field(j, "m"), "m");
    const json& blocks = require_field(j, "blocks");
    if (!blocks.is_array())
        throw InvalidArgument("\"blocks\" must be an array");
    for (const json& b : blocks) {
        PreorderBlock block;
        const json& elements = require_field(b, "elements");
        if (!elements.is_array())
            throw InvalidArgument("block \"elements\" must be an array");
        for (const json& v : elements)
            block.elements.push_back(require_int(v, "block element"));
        if (b.contains("projection") && !b.at("projection").is_null())
            block.projection = require_int(b.at("projection"), "projection");
        p.blocks.push_back(std::move(block));
    }
    p.validate();
    return p;
}

json to_json(const CanonicalBiclosed& cb) {
    return json{{"w", json{{"cycles", cb.w.cycles()}, {"images", cb.w.images()}}},
                {"delta1", cb.delta1.indices},
                {"delta2", cb.delta2.indices}};
}

json to_json(const EnumerationReport& rep) {
    json methods = json::array();
    for (const MethodCount& mc : rep.methods)
        methods.push_back(json{{"method", mc.method}, {"count", mc.count}, {"seconds", mc.seconds}});
    return json{{"n", rep.n},
                {"methods", std::move(methods)},
                {"total", rep.total},
                {"positive_systems", rep.positive_systems},
                {"parabolic", rep.parabolic},
                {"horocyclic", rep.horocyclic},
                {"commutative", rep.commutative},
                {"anticommutative", rep.anticommutative},
                {"with_identity", rep.with_identity},
                {"with_zero", rep.with_zero}};
}

Permutation parse_permutation(const std::string& text, int degree) {
    std::size_t pos = text.find_first_not_of(" \t");
    if (pos == std::string::npos)
        throw InvalidArgument("permutation: empty text");
    if (text[pos] == '{')
        return permutation_from_json(json::parse(text));
    if (text[pos] == '[') {
        const json arr = json::parse(text);
        return permutation_from_json(json{{"images", arr}});
    }
    return Permutation::from_cycles(text, degree);
}

} // namespace biclosed
