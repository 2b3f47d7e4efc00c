// Exercises the shared-library surface the way a foreign-language binding
// would: JSON in, JSON out, status codes, thread-local error text.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "biclosed.h"

namespace {

std::string take(char* raw) {
    std::string out = raw ? raw : "";
    bc_string_free(raw);
    return out;
}

bc_root_set* parse_set(const char* text) {
    bc_root_set* out = nullptr;
    REQUIRE(bc_root_set_parse_json(text, &out) == BC_OK);
    return out;
}

bc_op_table* parse_table(const char* text) {
    bc_op_table* out = nullptr;
    REQUIRE(bc_op_table_parse_json(text, &out) == BC_OK);
    return out;
}

} // namespace

TEST_SUITE_BEGIN("c_api");

TEST_CASE("abi and status names") {
    CHECK(bc_abi_version() == BC_ABI_VERSION);
    CHECK(std::strcmp(bc_status_name(BC_OK), "ok") == 0);
    CHECK(std::strcmp(bc_status_name(BC_ERR_NOT_BICLOSED), "not_biclosed") == 0);
}

TEST_CASE("root set parse, predicates, serialize") {
    bc_root_set* set = parse_set(R"({"n":2,"roots":[[1,2],[1,3],[2,3]]})");
    CHECK(bc_root_set_rank(set) == 2);
    CHECK(bc_root_set_count(set) == 3);

    int flag = 0;
    CHECK(bc_root_set_is_closed(set, &flag) == BC_OK);
    CHECK(flag == 1);
    CHECK(bc_root_set_is_biclosed(set, &flag) == BC_OK);
    CHECK(flag == 1);
    CHECK(bc_root_set_is_positive_system(set, &flag) == BC_OK);
    CHECK(flag == 1);

    char* json_text = nullptr;
    CHECK(bc_root_set_to_json(set, &json_text) == BC_OK);
    CHECK(take(json_text) == R"({"n":2,"roots":[[1,2],[1,3],[2,3]]})");

    char* pretty = nullptr;
    CHECK(bc_root_set_pretty(set, &pretty) == BC_OK);
    CHECK(take(pretty) == "{a1,a1+a2,a2}");

    bc_root_set_free(set);
}

TEST_CASE("parse failures set the error text") {
    bc_root_set* set = nullptr;
    CHECK(bc_root_set_parse_json("not json", &set) == BC_ERR_PARSE);
    CHECK(std::strlen(bc_last_error()) > 0);
    CHECK(bc_root_set_parse_json(R"({"n":2,"roots":[[1,1]]})", &set) == BC_ERR_INVALID_ARGUMENT);
    CHECK(bc_root_set_parse_json(nullptr, &set) == BC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("conversion round trip with witnesses") {
    bc_root_set* positive = parse_set(R"({"n":2,"roots":[[1,2],[1,3],[2,3]]})");
    bc_op_table* table = nullptr;
    REQUIRE(bc_biclosed_to_table(positive, &table) == BC_OK);

    char* table_json = nullptr;
    CHECK(bc_op_table_to_json(table, &table_json) == BC_OK);
    CHECK(take(table_json) == R"({"m":3,"table":[[1,2,3],[2,2,3],[3,3,3]]})");

    char* blocks = nullptr;
    CHECK(bc_op_table_block_string(table, &blocks) == BC_OK);
    CHECK(take(blocks) == "1<2<3");

    bc_root_set* back = nullptr;
    REQUIRE(bc_table_to_biclosed(table, &back) == BC_OK);
    char* back_json = nullptr;
    CHECK(bc_root_set_to_json(back, &back_json) == BC_OK);
    CHECK(take(back_json) == R"({"n":2,"roots":[[1,2],[1,3],[2,3]]})");

    bc_root_set_free(back);
    bc_op_table_free(table);
    bc_root_set_free(positive);

    SUBCASE("non-biclosed input names the missing sum") {
        bc_root_set* bad = parse_set(R"({"n":2,"roots":[[1,3]]})");
        bc_op_table* out = nullptr;
        CHECK(bc_biclosed_to_table(bad, &out) == BC_ERR_NOT_BICLOSED);
        const std::string message = bc_last_error();
        CHECK(message.find("(1,3)") != std::string::npos);
        bc_root_set_free(bad);
    }

    SUBCASE("non-associative table is rejected with a witness") {
        bc_op_table* bad =
            parse_table(R"({"m":3,"table":[[1,2,1],[1,2,3],[1,3,3]]})");
        int flag = -1;
        CHECK(bc_op_table_is_associative(bad, &flag) == BC_OK);
        CHECK(flag == 0);
        CHECK(bc_op_table_is_associative_via_biclosed(bad, &flag) == BC_OK);
        CHECK(flag == 0);
        bc_root_set* out = nullptr;
        CHECK(bc_table_to_biclosed(bad, &out) == BC_ERR_NOT_ASSOCIATIVE);
        CHECK(std::strlen(bc_last_error()) > 0);
        bc_op_table_free(bad);
    }

    SUBCASE("non-quasitrivial table is its own error") {
        bc_op_table* bad = parse_table(R"({"m":3,"table":[[1,3,3],[2,2,3],[3,3,3]]})");
        int flag = -1;
        CHECK(bc_op_table_is_quasitrivial(bad, &flag) == BC_OK);
        CHECK(flag == 0);
        CHECK(bc_op_table_is_associative(bad, &flag) == BC_ERR_NOT_QUASITRIVIAL);
        bc_op_table_free(bad);
    }
}

TEST_CASE("classification and stabilizer") {
    bc_root_set* set = parse_set(R"({"n":2,"roots":[[1,2],[3,2]]})");
    char* canonical = nullptr;
    CHECK(bc_root_set_classify_json(set, &canonical) == BC_OK);
    const std::string text = take(canonical);
    CHECK(text.find("\"cycles\":\"(2,3)\"") != std::string::npos);
    CHECK(text.find("\"delta1\":[1]") != std::string::npos);

    char* canonical_str = nullptr;
    CHECK(bc_root_set_canonical_string(set, &canonical_str) == BC_OK);
    CHECK(take(canonical_str) == "(2,3)Phi+_{{a1},{}}");

    int flag = -1;
    CHECK(bc_root_set_is_horocyclic(set, &flag) == BC_OK);
    CHECK(flag == 1);
    CHECK(bc_root_set_is_parabolic(set, &flag) == BC_OK);
    CHECK(flag == 0);

    // stabilizer of (2,3)Phi+_{{a1},{}} is the conjugate {id, (1,3)}
    char* stab = nullptr;
    CHECK(bc_root_set_stabilizer_json(set, &stab) == BC_OK);
    const std::string stab_text = take(stab);
    CHECK(stab_text.find("(1,3)") != std::string::npos);
    CHECK(stab_text.find("(1,2)") == std::string::npos);
    bc_root_set_free(set);
}

TEST_CASE("preorder surface and order comparisons") {
    bc_op_table* table = nullptr;
    REQUIRE(bc_preorder_parse_json(
                R"({"m":3,"blocks":[{"elements":[1,2],"projection":2},{"elements":[3],"projection":null}]})",
                &table) == BC_OK);
    char* blocks = nullptr;
    CHECK(bc_op_table_block_string(table, &blocks) == BC_OK);
    CHECK(take(blocks) == "{1,2}^2<3");

    char* round = nullptr;
    CHECK(bc_op_table_preorder_json(table, &round) == BC_OK);
    CHECK(take(round).find("\"projection\":2") != std::string::npos);

    bc_op_table* bottom = parse_table(R"({"m":3,"table":[[1,1,1],[2,2,2],[3,3,3]]})");
    int flag = -1;
    CHECK(bc_op_table_leq(bottom, table, &flag) == BC_OK);
    CHECK(flag == 1);
    CHECK(bc_op_table_leq(table, bottom, &flag) == BC_OK);
    CHECK(flag == 0);
    bc_op_table_free(bottom);
    bc_op_table_free(table);

    bc_root_set* small = parse_set(R"({"n":2,"roots":[[1,2]]})");
    bc_root_set* large = parse_set(R"({"n":2,"roots":[[1,2],[1,3]]})");
    CHECK(bc_root_set_leq(small, large, &flag) == BC_OK);
    CHECK(flag == 1);
    CHECK(bc_root_set_leq(large, small, &flag) == BC_OK);
    CHECK(flag == 0);
    bc_root_set_free(large);
    bc_root_set_free(small);

    bc_op_table* bad = nullptr;
    CHECK(bc_preorder_parse_json(R"({"m":2,"blocks":[{"elements":[1,2]}]})", &bad) ==
          BC_ERR_INVALID_ARGUMENT); // size-2 block without a projection
}

TEST_CASE("action and equivariance") {
    bc_root_set* positive = parse_set(R"({"n":2,"roots":[[1,2],[1,3],[2,3]]})");
    bc_permutation* w = nullptr;
    REQUIRE(bc_permutation_parse("(1,2)", 3, &w) == BC_OK);

    bc_root_set* moved = nullptr;
    REQUIRE(bc_act_root_set(w, positive, &moved) == BC_OK);
    char* moved_json = nullptr;
    CHECK(bc_root_set_to_json(moved, &moved_json) == BC_OK);
    CHECK(take(moved_json) == R"({"n":2,"roots":[[1,3],[2,1],[2,3]]})");

    bc_op_table* before = nullptr;
    REQUIRE(bc_biclosed_to_table(positive, &before) == BC_OK);
    bc_op_table* acted = nullptr;
    REQUIRE(bc_act_op_table(w, before, &acted) == BC_OK);
    bc_op_table* after = nullptr;
    REQUIRE(bc_biclosed_to_table(moved, &after) == BC_OK);
    char* a = nullptr;
    char* b = nullptr;
    CHECK(bc_op_table_to_json(acted, &a) == BC_OK);
    CHECK(bc_op_table_to_json(after, &b) == BC_OK);
    CHECK(take(a) == take(b));

    bc_op_table_free(after);
    bc_op_table_free(acted);
    bc_op_table_free(before);
    bc_root_set_free(moved);
    bc_permutation_free(w);
    bc_root_set_free(positive);
}

TEST_CASE("enumeration lists") {
    bc_list* list = nullptr;
    REQUIRE(bc_enumerate_biclosed(2, BC_ENUM_BRUTE_FORCE, 1, 0, &list) == BC_OK);
    CHECK(bc_list_count(list) == 20);
    bc_root_set* first = nullptr;
    REQUIRE(bc_list_root_set_at(list, 0, &first) == BC_OK);
    CHECK(bc_root_set_count(first) == 0); // the empty set sorts first
    bc_root_set_free(first);
    bc_root_set* oob = nullptr;
    CHECK(bc_list_root_set_at(list, 20, &oob) == BC_ERR_INVALID_ARGUMENT);
    bc_list_free(list);

    bc_list* tables = nullptr;
    REQUIRE(bc_enumerate_semigroups(4, &tables) == BC_OK);
    CHECK(bc_list_count(tables) == 138);
    bc_list_free(tables);

    CHECK(bc_enumerate_biclosed(5, BC_ENUM_BRUTE_FORCE, 1, 0, &list) == BC_ERR_RANK_TOO_LARGE);

    char* report = nullptr;
    REQUIRE(bc_enumeration_report_json(1, 1, 0, &report) == BC_OK);
    const std::string text = take(report);
    CHECK(text.find("\"total\":4") != std::string::npos);
    CHECK(text.find("\"positive_systems\":2") != std::string::npos);
}

TEST_CASE("poset surface") {
    char* dot = nullptr;
    REQUIRE(bc_poset_dot(1, 1, &dot) == BC_OK);
    const std::string text = take(dot);
    CHECK(text.find("digraph") != std::string::npos);
    CHECK(text.find("n0 ->") != std::string::npos);

    char* report = nullptr;
    CHECK(bc_poset_check_isomorphism(2, 1, &report) == BC_OK);
    CHECK(take(report).find("\"agree\":true") != std::string::npos);
    CHECK(bc_poset_check_lattice(2, 1, &report) == BC_OK);
    CHECK(take(report).find("\"lattice\":true") != std::string::npos);
}

TEST_CASE("verification surface") {
    char* report = nullptr;
    REQUIRE(bc_verify_json(1, 1, &report) == BC_OK);
    const std::string text = take(report);
    CHECK(text.find("\"all_passed\":true") != std::string::npos);
    CHECK(bc_verify_json(7, 1, &report) == BC_ERR_RANK_TOO_LARGE);
}

TEST_SUITE_END();
