#ifndef BICLOSED_JSON_IO_HPP
#define BICLOSED_JSON_IO_HPP

#include <json.hpp>

#include "biclosed/bijection.hpp"
#include "biclosed/enumeration.hpp"
#include "biclosed/root_system.hpp"
#include "biclosed/semigroup.hpp"

namespace biclosed {

// Wire schemas:
//   root set     {"n": 2, "roots": [[1,2],[1,3]]}        pairs sorted lexicographically
//   permutation  {"images": [2,1,3]}                      1-based
//   op table     {"m": 3, "table": [[1,2,3],...]}         row-major, table[a][b] = F(a,b)
//   preorder     {"m": 3, "blocks": [{"elements": [1,2], "projection": 2}, ...]}
//                least block first; singletons carry "projection": null
//   canonical    {"w": {"cycles": "(2,3)", "images": [1,3,2]}, "delta1": [1], "delta2": []}

nlohmann::json to_json(const RootSet& c);
RootSet root_set_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Permutation& w);
Permutation permutation_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OpTable& f);
OpTable op_table_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PreorderDecomposition& p);
PreorderDecomposition preorder_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CanonicalBiclosed& cb);

nlohmann::json to_json(const EnumerationReport& rep);

// Accepts cycle notation ("(2,3)", "id"), a bare image list ("[2,1,3]"),
// or the permutation JSON object.
Permutation parse_permutation(const std::string& text, int degree);

} // namespace biclosed

#endif
