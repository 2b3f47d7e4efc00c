#include "biclosed.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "biclosed/bijection.hpp"
#include "biclosed/enumeration.hpp"
#include "biclosed/errors.hpp"
#include "biclosed/format.hpp"
#include "biclosed/json_io.hpp"
#include "biclosed/order.hpp"
#include "biclosed/verify.hpp"

using namespace biclosed;

struct bc_root_set {
    RootSet value;
};

struct bc_op_table {
    OpTable value;
};

struct bc_permutation {
    Permutation value;
};

struct bc_list {
    std::vector<RootSet> sets;
    std::vector<OpTable> tables;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) {
    g_last_error = message;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Maps the library's exceptions onto status codes, recording the message.
template <typename Fn>
bc_status guarded(Fn fn) {
    try {
        fn();
        return BC_OK;
    } catch (const NotBiclosed& e) {
        set_error(e.what());
        return BC_ERR_NOT_BICLOSED;
    } catch (const NotAssociative& e) {
        set_error(e.what());
        return BC_ERR_NOT_ASSOCIATIVE;
    } catch (const NotQuasitrivial& e) {
        set_error(e.what());
        return BC_ERR_NOT_QUASITRIVIAL;
    } catch (const RankTooLarge& e) {
        set_error(e.what());
        return BC_ERR_RANK_TOO_LARGE;
    } catch (const LatticeViolation& e) {
        set_error(e.what());
        return BC_ERR_LATTICE;
    } catch (const CrossCheckFailure& e) {
        set_error(e.what());
        return BC_ERR_CROSS_CHECK;
    } catch (const InvalidArgument& e) {
        set_error(e.what());
        return BC_ERR_INVALID_ARGUMENT;
    } catch (const nlohmann::json::exception& e) {
        set_error(e.what());
        return BC_ERR_PARSE;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return BC_ERR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return BC_ERR_INTERNAL;
    }
}

bc_status require(const void* p) {
    if (p)
        return BC_OK;
    set_error("null handle");
    return BC_ERR_INVALID_ARGUMENT;
}

PosetView poset_for(int n, int jobs) {
    return PosetView(enum_biclosed_bruteforce(n, jobs));
}

} // namespace

extern "C" {

unsigned bc_abi_version(void) {
    return BC_ABI_VERSION;
}

const char* bc_status_name(bc_status status) {
    switch (status) {
    case BC_OK: return "ok";
    case BC_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case BC_ERR_PARSE: return "parse_error";
    case BC_ERR_NOT_BICLOSED: return "not_biclosed";
    case BC_ERR_NOT_ASSOCIATIVE: return "not_associative";
    case BC_ERR_NOT_QUASITRIVIAL: return "not_quasitrivial";
    case BC_ERR_RANK_TOO_LARGE: return "rank_too_large";
    case BC_ERR_CROSS_CHECK: return "cross_check_failure";
    case BC_ERR_LATTICE: return "lattice_violation";
    case BC_ERR_ORDER: return "order_violation";
    case BC_ERR_VERIFY_FAILED: return "verify_failed";
    case BC_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* bc_last_error(void) {
    return g_last_error.c_str();
}

void bc_string_free(char* text) {
    delete[] text;
}

/* ---- root sets ---- */

bc_status bc_root_set_parse_json(const char* json_text, bc_root_set** out) {
    if (auto st = require(json_text); st != BC_OK)
        return st;
    if (auto st = require(out); st != BC_OK)
        return st;
    return guarded([&] { *out = new bc_root_set{root_set_from_json(nlohmann::json::parse(json_text))}; });
}

bc_status bc_root_set_to_json(const bc_root_set* set, char** out) {
    if (auto st = require(set); st != BC_OK)
        return st;
    return guarded([&] { *out = dup_string(to_json(set->value).dump()); });
}

void bc_root_set_free(bc_root_set* set) {
    delete set;
}

int bc_root_set_rank(const bc_root_set* set) {
    return set ? set->value.rank() : -1;
}

size_t bc_root_set_count(const bc_root_set* set) {
    return set ? set->value.size() : 0;
}

bc_status bc_root_set_is_closed(const bc_root_set* set, int* out) {
    if (auto st = require(set); st != BC_OK)
        return st;
    return guarded([&] { *out = is_closed(set->value) ? 1 : 0; });
}

bc_status bc_root_set_is_biclosed(const bc_root_set* set, int* out) {
    if (auto st = require(set); st != BC_OK)
        return st;
    return guarded([&] { *out = is_biclosed(set->value) ? 1 : 0; });
}

bc_status bc_root_set_is_positive_system(const bc_root_set* set, int* out) {
    if (auto st = require(set); st != BC_OK)
        return st;
    return guarded([&] { *out = is_positive_system(set->value) ? 1 : 0; });
}

bc_status bc_root_set_is_parabolic(const bc_root_set* set, int* out) {
    if (auto st = require(set); st != BC_OK)
        return st;
    return guarded([&] { *out = is_parabolic(set->value) ? 1 : 0; });
}

bc_status bc_root_set_is_horocyclic(const bc_root_set* set, int* out) {
    if (auto st = require(set); st != BC_OK)
        return st;
    return guarded([&] { *out = is_horocyclic(set->value) ? 1 : 0; });
}

bc_status bc_root_set_leq(const bc_root_set* a, const bc_root_set* b, int* out) {
    if (auto st = require(a); st != BC_OK)
        return st;
    if (auto st = require(b); st != BC_OK)
        return st;
    return guarded([&] { *out = leq_set(a->value, b->value) ? 1 : 0; });
}

bc_status bc_root_set_classify_json(const bc_root_set* set, char** out) {
    if (auto st = require(set); st != BC_OK)
        return st;
    return guarded([&] { *out = dup_string(to_json(classify(set->value)).dump()); });
}

bc_status bc_root_set_canonical_string(const bc_root_set* set, char** out) {
    if (auto st = require(set); st != BC_OK)
        return st;
    return guarded([&] { *out = dup_string(canonical_string(set->value)); });
}

bc_status bc_root_set_pretty(const bc_root_set* set, char** out) {
    if (auto st = require(set); st != BC_OK)
        return st;
    return guarded([&] { *out = dup_string(root_set_string(set->value)); });
}

bc_status bc_root_set_stabilizer_json(const bc_root_set* set, char** out) {
    if (auto st = require(set); st != BC_OK)
        return st;
    return guarded([&] {
        nlohmann::json arr = nlohmann::json::array();
        for (const Permutation& w : stabilizer(set->value)) {
            nlohmann::json entry = to_json(w);
            entry["cycles"] = w.cycles();
            arr.push_back(std::move(entry));
        }
        *out = dup_string(arr.dump());
    });
}

/* ---- operation tables ---- */

bc_status bc_op_table_parse_json(const char* json_text, bc_op_table** out) {
    if (auto st = require(json_text); st != BC_OK)
        return st;
    if (auto st = require(out); st != BC_OK)
        return st;
    return guarded([&] { *out = new bc_op_table{op_table_from_json(nlohmann::json::parse(json_text))}; });
}

bc_status bc_op_table_to_json(const bc_op_table* table, char** out) {
    if (auto st = require(table); st != BC_OK)
        return st;
    return guarded([&] { *out = dup_string(to_json(table->value).dump()); });
}

void bc_op_table_free(bc_op_table* table) {
    delete table;
}

int bc_op_table_size(const bc_op_table* table) {
    return table ? table->value.size() : -1;
}

bc_status bc_op_table_is_quasitrivial(const bc_op_table* table, int* out) {
    if (auto st = require(table); st != BC_OK)
        return st;
    return guarded([&] { *out = is_quasitrivial(table->value) ? 1 : 0; });
}

bc_status bc_op_table_is_associative(const bc_op_table* table, int* out) {
    if (auto st = require(table); st != BC_OK)
        return st;
    return guarded([&] { *out = is_associative(table->value) ? 1 : 0; });
}

bc_status bc_op_table_is_associative_via_biclosed(const bc_op_table* table, int* out) {
    if (auto st = require(table); st != BC_OK)
        return st;
    return guarded([&] { *out = associative_via_biclosed(table->value) ? 1 : 0; });
}

bc_status bc_op_table_is_commutative(const bc_op_table* table, int* out) {
    if (auto st = require(table); st != BC_OK)
        return st;
    return guarded([&] { *out = is_commutative(table->value) ? 1 : 0; });
}

bc_status bc_op_table_is_anticommutative(const bc_op_table* table, int* out) {
    if (auto st = require(table); st != BC_OK)
        return st;
    return guarded([&] { *out = is_anticommutative(table->value) ? 1 : 0; });
}

bc_status bc_op_table_identity(const bc_op_table* table, int* out) {
    if (auto st = require(table); st != BC_OK)
        return st;
    return guarded([&] { *out = identity_element(table->value).value_or(0); });
}

bc_status bc_op_table_zero(const bc_op_table* table, int* out) {
    if (auto st = require(table); st != BC_OK)
        return st;
    return guarded([&] { *out = zero_element(table->value).value_or(0); });
}

bc_status bc_op_table_leq(const bc_op_table* a, const bc_op_table* b, int* out) {
    if (auto st = require(a); st != BC_OK)
        return st;
    if (auto st = require(b); st != BC_OK)
        return st;
    return guarded([&] { *out = leq_op(a->value, b->value) ? 1 : 0; });
}

bc_status bc_op_table_preorder_json(const bc_op_table* table, char** out) {
    if (auto st = require(table); st != BC_OK)
        return st;
    return guarded([&] { *out = dup_string(to_json(to_preorder(table->value)).dump()); });
}

bc_status bc_op_table_block_string(const bc_op_table* table, char** out) {
    if (auto st = require(table); st != BC_OK)
        return st;
    return guarded([&] { *out = dup_string(block_string(to_preorder(table->value))); });
}

bc_status bc_preorder_parse_json(const char* json_text, bc_op_table** out) {
    if (auto st = require(json_text); st != BC_OK)
        return st;
    if (auto st = require(out); st != BC_OK)
        return st;
    return guarded([&] {
        *out = new bc_op_table{from_preorder(preorder_from_json(nlohmann::json::parse(json_text)))};
    });
}

/* ---- permutations ---- */

bc_status bc_permutation_parse(const char* text, int degree, bc_permutation** out) {
    if (auto st = require(text); st != BC_OK)
        return st;
    if (auto st = require(out); st != BC_OK)
        return st;
    return guarded([&] { *out = new bc_permutation{parse_permutation(text, degree)}; });
}

bc_status bc_permutation_to_json(const bc_permutation* w, char** out) {
    if (auto st = require(w); st != BC_OK)
        return st;
    return guarded([&] {
        nlohmann::json j = to_json(w->value);
        j["cycles"] = w->value.cycles();
        *out = dup_string(j.dump());
    });
}

bc_status bc_permutation_cycles(const bc_permutation* w, char** out) {
    if (auto st = require(w); st != BC_OK)
        return st;
    return guarded([&] { *out = dup_string(w->value.cycles()); });
}

void bc_permutation_free(bc_permutation* w) {
    delete w;
}

/* ---- the correspondence ---- */

bc_status bc_biclosed_to_table(const bc_root_set* set, bc_op_table** out) {
    if (auto st = require(set); st != BC_OK)
        return st;
    return guarded([&] { *out = new bc_op_table{biclosed_to_semigroup(set->value)}; });
}

bc_status bc_table_to_biclosed(const bc_op_table* table, bc_root_set** out) {
    if (auto st = require(table); st != BC_OK)
        return st;
    return guarded([&] { *out = new bc_root_set{semigroup_to_biclosed(table->value)}; });
}

bc_status bc_table_to_pairs(const bc_op_table* table, bc_root_set** out) {
    if (auto st = require(table); st != BC_OK)
        return st;
    return guarded([&] { *out = new bc_root_set{op_to_pairs(table->value)}; });
}

bc_status bc_pairs_to_table(const bc_root_set* set, bc_op_table** out) {
    if (auto st = require(set); st != BC_OK)
        return st;
    return guarded([&] { *out = new bc_op_table{pairs_to_op(set->value)}; });
}

bc_status bc_act_root_set(const bc_permutation* w, const bc_root_set* set, bc_root_set** out) {
    if (auto st = require(w); st != BC_OK)
        return st;
    if (auto st = require(set); st != BC_OK)
        return st;
    return guarded([&] { *out = new bc_root_set{act_set(w->value, set->value)}; });
}

bc_status bc_act_op_table(const bc_permutation* w, const bc_op_table* table, bc_op_table** out) {
    if (auto st = require(w); st != BC_OK)
        return st;
    if (auto st = require(table); st != BC_OK)
        return st;
    return guarded([&] { *out = new bc_op_table{act_op(w->value, table->value)}; });
}

/* ---- enumeration ---- */

bc_status bc_enumerate_biclosed(int n, bc_enum_method method, int jobs, int force_large,
                                bc_list** out) {
    if (auto st = require(out); st != BC_OK)
        return st;
    return guarded([&] {
        auto list = std::make_unique<bc_list>();
        switch (method) {
        case BC_ENUM_BRUTE_FORCE:
            list->sets = enum_biclosed_bruteforce(n, jobs, force_large != 0);
            break;
        case BC_ENUM_VIA_SEMIGROUPS: {
            for (const OpTable& f : enum_semigroups(n + 1))
                list->sets.push_back(semigroup_to_biclosed(f));
            std::sort(list->sets.begin(), list->sets.end(), lex_less);
            break;
        }
        case BC_ENUM_AUTO:
        case BC_ENUM_CLASSIFIED:
        default:
            list->sets = enum_biclosed_classified(n);
            break;
        }
        *out = list.release();
    });
}

bc_status bc_enumerate_semigroups(int m, bc_list** out) {
    if (auto st = require(out); st != BC_OK)
        return st;
    return guarded([&] {
        auto list = std::make_unique<bc_list>();
        list->tables = enum_semigroups(m);
        *out = list.release();
    });
}

size_t bc_list_count(const bc_list* list) {
    if (!list)
        return 0;
    return list->sets.empty() ? list->tables.size() : list->sets.size();
}

bc_status bc_list_root_set_at(const bc_list* list, size_t index, bc_root_set** out) {
    if (auto st = require(list); st != BC_OK)
        return st;
    if (index >= list->sets.size()) {
        set_error("list index out of range");
        return BC_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { *out = new bc_root_set{list->sets[index]}; });
}

bc_status bc_list_op_table_at(const bc_list* list, size_t index, bc_op_table** out) {
    if (auto st = require(list); st != BC_OK)
        return st;
    if (index >= list->tables.size()) {
        set_error("list index out of range");
        return BC_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { *out = new bc_op_table{list->tables[index]}; });
}

void bc_list_free(bc_list* list) {
    delete list;
}

bc_status bc_enumeration_report_json(int n, int jobs, int force_large, char** out) {
    if (auto st = require(out); st != BC_OK)
        return st;
    return guarded([&] { *out = dup_string(to_json(make_report(n, jobs, force_large != 0)).dump()); });
}

/* ---- poset ---- */

bc_status bc_poset_dot(int n, int jobs, char** out) {
    if (auto st = require(out); st != BC_OK)
        return st;
    return guarded([&] { *out = dup_string(poset_for(n, jobs).to_dot()); });
}

bc_status bc_poset_check_isomorphism(int n, int jobs, char** report_json) {
    if (auto st = require(report_json); st != BC_OK)
        return st;
    bool ok = false;
    std::uint64_t pairs = 0;
    const bc_status st = guarded([&] {
        const PosetView poset = poset_for(n, jobs);
        ok = true;
        for (int i = 0; i < poset.size(); ++i)
            for (int j = 0; j < poset.size(); ++j) {
                ok = ok && poset.leq(i, j) == leq_op(poset.ops()[static_cast<std::size_t>(i)],
                                                     poset.ops()[static_cast<std::size_t>(j)]);
                ++pairs;
            }
        *report_json = dup_string(nlohmann::json{{"n", n}, {"pairs", pairs}, {"agree", ok}}.dump());
    });
    if (st != BC_OK)
        return st;
    if (!ok) {
        set_error("containment order and table order disagree");
        return BC_ERR_ORDER;
    }
    return BC_OK;
}

bc_status bc_poset_check_lattice(int n, int jobs, char** report_json) {
    if (auto st = require(report_json); st != BC_OK)
        return st;
    bool ok = false;
    std::string why;
    const bc_status st = guarded([&] {
        const PosetView poset = poset_for(n, jobs);
        ok = poset.is_lattice(&why);
        *report_json = dup_string(
            nlohmann::json{{"n", n}, {"elements", poset.size()}, {"lattice", ok}, {"detail", why}}.dump());
    });
    if (st != BC_OK)
        return st;
    if (!ok) {
        set_error(why.empty() ? "lattice check failed" : why);
        return BC_ERR_LATTICE;
    }
    return BC_OK;
}

/* ---- verification ---- */

bc_status bc_verify_json(int n, int jobs, char** report_json) {
    if (auto st = require(report_json); st != BC_OK)
        return st;
    bool all = false;
    const bc_status st = guarded([&] {
        const VerificationReport report = run_verification(n, jobs);
        all = report.all_passed;
        nlohmann::json j = to_json(report);
        j["lines"] = format_report_lines(report);
        *report_json = dup_string(j.dump());
    });
    if (st != BC_OK)
        return st;
    if (!all) {
        set_error("one or more verification criteria failed");
        return BC_ERR_VERIFY_FAILED;
    }
    return BC_OK;
}

} /* extern "C" */
