/*
 * C interface to the biclosed/quasitrivial correspondence library.
 *
 * Every function that can fail returns a bc_status code; BC_OK is zero.
 * On failure, bc_last_error() returns a thread-local message naming the
 * witnessing pair or triple where one exists. Objects are opaque handles
 * released with their bc_*_free function; strings returned through char**
 * out-parameters are released with bc_string_free.
 *
 * Structured data crosses the boundary as JSON:
 *   root set     {"n": 2, "roots": [[1,2],[1,3]]}
 *   op table     {"m": 3, "table": [[1,2,3],[2,2,3],[3,3,3]]}
 *   permutation  {"images": [2,1,3]}    (parsers also accept "(1,2)" cycles)
 *   preorder     {"m": 3, "blocks": [{"elements":[1,2],"projection":2},...]}
 */

#ifndef BICLOSED_H
#define BICLOSED_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define BC_ABI_VERSION 1u

typedef struct bc_root_set bc_root_set;
typedef struct bc_op_table bc_op_table;
typedef struct bc_permutation bc_permutation;
typedef struct bc_list bc_list;

typedef enum bc_status {
    BC_OK = 0,
    BC_ERR_INVALID_ARGUMENT = 1,
    BC_ERR_PARSE = 2,
    BC_ERR_NOT_BICLOSED = 3,
    BC_ERR_NOT_ASSOCIATIVE = 4,
    BC_ERR_NOT_QUASITRIVIAL = 5,
    BC_ERR_RANK_TOO_LARGE = 6,
    BC_ERR_CROSS_CHECK = 7,
    BC_ERR_LATTICE = 8,
    BC_ERR_ORDER = 9,
    BC_ERR_VERIFY_FAILED = 10,
    BC_ERR_INTERNAL = 11
} bc_status;

typedef enum bc_enum_method {
    BC_ENUM_AUTO = 0,        /* classified construction */
    BC_ENUM_BRUTE_FORCE = 1, /* subset scan; rank <= 4, 5 with force */
    BC_ENUM_CLASSIFIED = 2,
    BC_ENUM_VIA_SEMIGROUPS = 3
} bc_enum_method;

unsigned bc_abi_version(void);
const char* bc_status_name(bc_status status);
const char* bc_last_error(void);
void bc_string_free(char* text);

/* ---- root sets ---- */

bc_status bc_root_set_parse_json(const char* json_text, bc_root_set** out);
bc_status bc_root_set_to_json(const bc_root_set* set, char** out);
void bc_root_set_free(bc_root_set* set);
int bc_root_set_rank(const bc_root_set* set);
size_t bc_root_set_count(const bc_root_set* set);

bc_status bc_root_set_is_closed(const bc_root_set* set, int* out);
bc_status bc_root_set_is_biclosed(const bc_root_set* set, int* out);
bc_status bc_root_set_is_positive_system(const bc_root_set* set, int* out);
bc_status bc_root_set_is_parabolic(const bc_root_set* set, int* out);
bc_status bc_root_set_is_horocyclic(const bc_root_set* set, int* out);
bc_status bc_root_set_leq(const bc_root_set* a, const bc_root_set* b, int* out);

/* canonical presentation {"w": {...}, "delta1": [...], "delta2": [...]} */
bc_status bc_root_set_classify_json(const bc_root_set* set, char** out);
/* "(2,3)Phi+_{{a1},{}}" */
bc_status bc_root_set_canonical_string(const bc_root_set* set, char** out);
/* "{a1,-a2}" */
bc_status bc_root_set_pretty(const bc_root_set* set, char** out);
/* JSON array of permutation objects fixing the set */
bc_status bc_root_set_stabilizer_json(const bc_root_set* set, char** out);

/* ---- operation tables ---- */

bc_status bc_op_table_parse_json(const char* json_text, bc_op_table** out);
bc_status bc_op_table_to_json(const bc_op_table* table, char** out);
void bc_op_table_free(bc_op_table* table);
int bc_op_table_size(const bc_op_table* table);

bc_status bc_op_table_is_quasitrivial(const bc_op_table* table, int* out);
bc_status bc_op_table_is_associative(const bc_op_table* table, int* out);
bc_status bc_op_table_is_associative_via_biclosed(const bc_op_table* table, int* out);
bc_status bc_op_table_is_commutative(const bc_op_table* table, int* out);
bc_status bc_op_table_is_anticommutative(const bc_op_table* table, int* out);
/* 0 when no such element exists */
bc_status bc_op_table_identity(const bc_op_table* table, int* out);
bc_status bc_op_table_zero(const bc_op_table* table, int* out);
bc_status bc_op_table_leq(const bc_op_table* a, const bc_op_table* b, int* out);

bc_status bc_op_table_preorder_json(const bc_op_table* table, char** out);
bc_status bc_op_table_block_string(const bc_op_table* table, char** out);
bc_status bc_preorder_parse_json(const char* json_text, bc_op_table** out);

/* ---- permutations ---- */

/* text: cycle notation "(1,2)(3,4)", "id", "[2,1,3]", or {"images": [...]} */
bc_status bc_permutation_parse(const char* text, int degree, bc_permutation** out);
bc_status bc_permutation_to_json(const bc_permutation* w, char** out);
bc_status bc_permutation_cycles(const bc_permutation* w, char** out);
void bc_permutation_free(bc_permutation* w);

/* ---- the correspondence ---- */

bc_status bc_biclosed_to_table(const bc_root_set* set, bc_op_table** out);
bc_status bc_table_to_biclosed(const bc_op_table* table, bc_root_set** out);
/* pairwise dictionary, no biclosedness/associativity requirement */
bc_status bc_table_to_pairs(const bc_op_table* table, bc_root_set** out);
bc_status bc_pairs_to_table(const bc_root_set* set, bc_op_table** out);

bc_status bc_act_root_set(const bc_permutation* w, const bc_root_set* set, bc_root_set** out);
bc_status bc_act_op_table(const bc_permutation* w, const bc_op_table* table, bc_op_table** out);

/* ---- enumeration ---- */

bc_status bc_enumerate_biclosed(int n, bc_enum_method method, int jobs, int force_large,
                                bc_list** out);
bc_status bc_enumerate_semigroups(int m, bc_list** out);
size_t bc_list_count(const bc_list* list);
/* items are copies; free them individually */
bc_status bc_list_root_set_at(const bc_list* list, size_t index, bc_root_set** out);
bc_status bc_list_op_table_at(const bc_list* list, size_t index, bc_op_table** out);
void bc_list_free(bc_list* list);

bc_status bc_enumeration_report_json(int n, int jobs, int force_large, char** out);

/* ---- poset over all biclosed sets of one rank ---- */

bc_status bc_poset_dot(int n, int jobs, char** out);
bc_status bc_poset_check_isomorphism(int n, int jobs, char** report_json);
bc_status bc_poset_check_lattice(int n, int jobs, char** report_json);

/* ---- verification battery ---- */

/* BC_OK when every criterion passes; BC_ERR_VERIFY_FAILED otherwise (the
 * report is produced either way). */
bc_status bc_verify_json(int n, int jobs, char** report_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BICLOSED_H */
