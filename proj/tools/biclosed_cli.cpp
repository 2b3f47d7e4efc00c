// Command-line front end; talks to the library exclusively through the C
// interface in biclosed.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "biclosed.h"

namespace {

using nlohmann::json;

struct RootSetDeleter {
    void operator()(bc_root_set* p) const { bc_root_set_free(p); }
};
struct OpTableDeleter {
    void operator()(bc_op_table* p) const { bc_op_table_free(p); }
};
struct PermDeleter {
    void operator()(bc_permutation* p) const { bc_permutation_free(p); }
};
struct ListDeleter {
    void operator()(bc_list* p) const { bc_list_free(p); }
};

using RootSetPtr = std::unique_ptr<bc_root_set, RootSetDeleter>;
using OpTablePtr = std::unique_ptr<bc_op_table, OpTableDeleter>;
using PermPtr = std::unique_ptr<bc_permutation, PermDeleter>;
using ListPtr = std::unique_ptr<bc_list, ListDeleter>;

int exit_code_for(bc_status status) {
    switch (status) {
    case BC_OK: return 0;
    case BC_ERR_INVALID_ARGUMENT:
    case BC_ERR_PARSE: return 2;
    case BC_ERR_RANK_TOO_LARGE: return 3;
    case BC_ERR_NOT_BICLOSED: return 4;
    case BC_ERR_NOT_ASSOCIATIVE:
    case BC_ERR_NOT_QUASITRIVIAL: return 5;
    case BC_ERR_CROSS_CHECK: return 6;
    case BC_ERR_LATTICE:
    case BC_ERR_ORDER: return 7;
    case BC_ERR_VERIFY_FAILED:
    case BC_ERR_INTERNAL: return 1;
    }
    return 1;
}

// Every failure leaves one structured JSON object on the diagnostic stream.
[[noreturn]] void fail(bc_status status) {
    std::cerr << json{{"error", bc_status_name(status)}, {"message", bc_last_error()}}.dump()
              << std::endl;
    std::exit(exit_code_for(status));
}

[[noreturn]] void fail_config(const std::string& message) {
    std::cerr << json{{"error", "invalid_config"}, {"message", message}}.dump() << std::endl;
    std::exit(2);
}

void expect(bc_status status) {
    if (status != BC_OK)
        fail(status);
}

std::string take_string(char* raw) {
    std::string out = raw ? raw : "";
    bc_string_free(raw);
    return out;
}

// --input PATH ("-" = stdin) or --json TEXT
struct InputSource {
    std::string path;
    std::string inline_json;

    std::string read() const {
        if (!inline_json.empty())
            return inline_json;
        if (path.empty())
            fail_config("provide --input PATH or --json TEXT");
        if (path == "-") {
            std::ostringstream buf;
            buf << std::cin.rdbuf();
            return buf.str();
        }
        std::ifstream in(path);
        if (!in)
            fail_config("cannot open " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
};

struct OutputSink {
    std::string path;
    std::ofstream file;

    std::ostream& stream() {
        if (path.empty())
            return std::cout;
        if (!file.is_open()) {
            file.open(path);
            if (!file)
                fail_config("cannot open " + path + " for writing");
        }
        return file;
    }
};

enum class InputKind { root_set, op_table };

// Peeks at the parsed object to decide which schema it uses.
InputKind detect_kind(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail_config(std::string("input is not valid JSON: ") + e.what());
    }
    if (j.contains("roots"))
        return InputKind::root_set;
    if (j.contains("table"))
        return InputKind::op_table;
    fail_config("input must be a root set ({\"n\",\"roots\"}) or a table ({\"m\",\"table\"})");
}

RootSetPtr parse_root_set(const std::string& text) {
    bc_root_set* raw = nullptr;
    expect(bc_root_set_parse_json(text.c_str(), &raw));
    return RootSetPtr(raw);
}

OpTablePtr parse_op_table(const std::string& text) {
    bc_op_table* raw = nullptr;
    expect(bc_op_table_parse_json(text.c_str(), &raw));
    return OpTablePtr(raw);
}

std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

// One paired table row: presentation and member list on the left, block
// structure on the right.
std::string csv_row(const bc_root_set* set, const bc_op_table* table) {
    char* canonical = nullptr;
    char* pretty = nullptr;
    char* blocks = nullptr;
    expect(bc_root_set_canonical_string(set, &canonical));
    expect(bc_root_set_pretty(set, &pretty));
    expect(bc_op_table_block_string(table, &blocks));
    const std::string row = csv_quote(take_string(canonical) + " = " + take_string(pretty)) + "," +
                            csv_quote(take_string(blocks));
    return row;
}

int cmd_enumerate(const std::string& object, int n, int m, const std::string& method_name,
                  const std::string& format, int jobs, bool force_large, bool report,
                  OutputSink& sink) {
    if (report) {
        char* raw = nullptr;
        expect(bc_enumeration_report_json(n, jobs, force_large ? 1 : 0, &raw));
        sink.stream() << json::parse(take_string(raw)).dump(2) << "\n";
        return 0;
    }

    bc_enum_method method = BC_ENUM_AUTO;
    if (method_name == "brute")
        method = BC_ENUM_BRUTE_FORCE;
    else if (method_name == "classified")
        method = BC_ENUM_CLASSIFIED;
    else if (method_name == "semigroups")
        method = BC_ENUM_VIA_SEMIGROUPS;
    else if (method_name != "auto")
        fail_config("unknown method " + method_name);

    ListPtr list;
    const bool biclosed_objects = object == "biclosed";
    if (biclosed_objects) {
        bc_list* raw = nullptr;
        expect(bc_enumerate_biclosed(n, method, jobs, force_large ? 1 : 0, &raw));
        list.reset(raw);
    } else if (object == "semigroup") {
        bc_list* raw = nullptr;
        expect(bc_enumerate_semigroups(m, &raw));
        list.reset(raw);
    } else {
        fail_config("--object must be biclosed or semigroup");
    }

    std::ostream& out = sink.stream();
    const size_t count = bc_list_count(list.get());

    if (format == "csv") {
        out << "Biclosed set,Quasitrivial semigroup structure\n";
        for (size_t i = 0; i < count; ++i) {
            RootSetPtr set;
            OpTablePtr table;
            if (biclosed_objects) {
                bc_root_set* rs = nullptr;
                expect(bc_list_root_set_at(list.get(), i, &rs));
                set.reset(rs);
                bc_op_table* ot = nullptr;
                expect(bc_biclosed_to_table(set.get(), &ot));
                table.reset(ot);
            } else {
                bc_op_table* ot = nullptr;
                expect(bc_list_op_table_at(list.get(), i, &ot));
                table.reset(ot);
                bc_root_set* rs = nullptr;
                expect(bc_table_to_biclosed(table.get(), &rs));
                set.reset(rs);
            }
            out << csv_row(set.get(), table.get()) << "\n";
        }
        return 0;
    }

    if (format != "jsonl" && format != "json")
        fail_config("--format must be jsonl, json, or csv");
    json array = json::array();
    for (size_t i = 0; i < count; ++i) {
        char* raw = nullptr;
        if (biclosed_objects) {
            bc_root_set* rs = nullptr;
            expect(bc_list_root_set_at(list.get(), i, &rs));
            RootSetPtr set(rs);
            expect(bc_root_set_to_json(set.get(), &raw));
        } else {
            bc_op_table* ot = nullptr;
            expect(bc_list_op_table_at(list.get(), i, &ot));
            OpTablePtr table(ot);
            expect(bc_op_table_to_json(table.get(), &raw));
        }
        if (format == "jsonl")
            out << take_string(raw) << "\n";
        else
            array.push_back(json::parse(take_string(raw)));
    }
    if (format == "json")
        out << array.dump(2) << "\n";
    return 0;
}

int cmd_convert(const InputSource& input, OutputSink& sink) {
    const std::string text = input.read();
    json result;
    if (detect_kind(text) == InputKind::root_set) {
        RootSetPtr set = parse_root_set(text);
        bc_op_table* ot = nullptr;
        expect(bc_biclosed_to_table(set.get(), &ot));
        OpTablePtr table(ot);

        char* table_json = nullptr;
        expect(bc_op_table_to_json(table.get(), &table_json));
        char* canonical = nullptr;
        expect(bc_root_set_classify_json(set.get(), &canonical));
        char* canonical_str = nullptr;
        expect(bc_root_set_canonical_string(set.get(), &canonical_str));
        char* preorder = nullptr;
        expect(bc_op_table_preorder_json(table.get(), &preorder));
        char* blocks = nullptr;
        expect(bc_op_table_block_string(table.get(), &blocks));

        result = json{{"result", json::parse(take_string(table_json))},
                      {"canonical", json::parse(take_string(canonical))},
                      {"canonical_string", take_string(canonical_str)},
                      {"preorder", json::parse(take_string(preorder))},
                      {"blocks", take_string(blocks)}};
    } else {
        OpTablePtr table = parse_op_table(text);
        bc_root_set* rs = nullptr;
        expect(bc_table_to_biclosed(table.get(), &rs));
        RootSetPtr set(rs);

        char* set_json = nullptr;
        expect(bc_root_set_to_json(set.get(), &set_json));
        char* canonical = nullptr;
        expect(bc_root_set_classify_json(set.get(), &canonical));
        char* canonical_str = nullptr;
        expect(bc_root_set_canonical_string(set.get(), &canonical_str));
        char* preorder = nullptr;
        expect(bc_op_table_preorder_json(table.get(), &preorder));
        char* blocks = nullptr;
        expect(bc_op_table_block_string(table.get(), &blocks));

        result = json{{"result", json::parse(take_string(set_json))},
                      {"canonical", json::parse(take_string(canonical))},
                      {"canonical_string", take_string(canonical_str)},
                      {"preorder", json::parse(take_string(preorder))},
                      {"blocks", take_string(blocks)}};
    }
    sink.stream() << result.dump(2) << "\n";
    return 0;
}

int cmd_check(const InputSource& input, const std::string& via, OutputSink& sink) {
    OpTablePtr table = parse_op_table(input.read());
    int quasi = 0;
    expect(bc_op_table_is_quasitrivial(table.get(), &quasi));
    if (!quasi)
        fail_config("check requires a quasitrivial table");

    json result{{"via", via}};
    int direct = -1, oracle = -1;
    if (via == "direct" || via == "both") {
        expect(bc_op_table_is_associative(table.get(), &direct));
        result["associative"] = direct == 1;
    }
    if (via == "biclosed" || via == "both") {
        expect(bc_op_table_is_associative_via_biclosed(table.get(), &oracle));
        result["associative"] = oracle == 1;
    }
    if (via == "both") {
        result["agree"] = direct == oracle;
        if (direct != oracle) {
            std::cerr << json{{"error", "cross_check_failure"},
                              {"message", "direct and biclosed associativity checks disagree"}}
                             .dump()
                      << std::endl;
            return 6;
        }
    } else if (via != "direct" && via != "biclosed") {
        fail_config("--via must be direct, biclosed, or both");
    }
    sink.stream() << result.dump(2) << "\n";
    return 0;
}

int cmd_classify(const InputSource& input, bool with_stabilizer, OutputSink& sink) {
    RootSetPtr set = parse_root_set(input.read());
    char* canonical = nullptr;
    expect(bc_root_set_classify_json(set.get(), &canonical));
    char* canonical_str = nullptr;
    expect(bc_root_set_canonical_string(set.get(), &canonical_str));
    int parabolic = 0, horocyclic = 0;
    expect(bc_root_set_is_parabolic(set.get(), &parabolic));
    expect(bc_root_set_is_horocyclic(set.get(), &horocyclic));

    json result = json::parse(take_string(canonical));
    result["canonical_string"] = take_string(canonical_str);
    result["parabolic"] = parabolic == 1;
    result["horocyclic"] = horocyclic == 1;
    if (with_stabilizer) {
        char* stab = nullptr;
        expect(bc_root_set_stabilizer_json(set.get(), &stab));
        result["stabilizer"] = json::parse(take_string(stab));
    }
    sink.stream() << result.dump(2) << "\n";
    return 0;
}

int cmd_act(const InputSource& input, const std::string& perm_text, bool verify_equivariance,
            OutputSink& sink) {
    const std::string text = input.read();
    json result;
    if (detect_kind(text) == InputKind::root_set) {
        RootSetPtr set = parse_root_set(text);
        bc_permutation* wp = nullptr;
        expect(bc_permutation_parse(perm_text.c_str(), bc_root_set_rank(set.get()) + 1, &wp));
        PermPtr w(wp);

        bc_root_set* moved_raw = nullptr;
        expect(bc_act_root_set(w.get(), set.get(), &moved_raw));
        RootSetPtr moved(moved_raw);
        char* moved_json = nullptr;
        expect(bc_root_set_to_json(moved.get(), &moved_json));
        char* perm_json = nullptr;
        expect(bc_permutation_to_json(w.get(), &perm_json));
        result = json{{"permutation", json::parse(take_string(perm_json))},
                      {"result", json::parse(take_string(moved_json))}};

        if (verify_equivariance) {
            // both orders: convert then act vs act then convert
            bc_op_table* before_raw = nullptr;
            expect(bc_biclosed_to_table(set.get(), &before_raw));
            OpTablePtr before(before_raw);
            bc_op_table* acted_raw = nullptr;
            expect(bc_act_op_table(w.get(), before.get(), &acted_raw));
            OpTablePtr acted(acted_raw);
            bc_op_table* after_raw = nullptr;
            expect(bc_biclosed_to_table(moved.get(), &after_raw));
            OpTablePtr after(after_raw);

            char* a = nullptr;
            char* b = nullptr;
            expect(bc_op_table_to_json(acted.get(), &a));
            expect(bc_op_table_to_json(after.get(), &b));
            const bool agree = take_string(a) == take_string(b);
            result["equivariant"] = agree;
            if (!agree) {
                std::cerr << json{{"error", "cross_check_failure"},
                                  {"message", "action and conversion do not commute"}}
                                 .dump()
                          << std::endl;
                return 6;
            }
        }
    } else {
        OpTablePtr table = parse_op_table(text);
        bc_permutation* wp = nullptr;
        expect(bc_permutation_parse(perm_text.c_str(), bc_op_table_size(table.get()), &wp));
        PermPtr w(wp);

        bc_op_table* moved_raw = nullptr;
        expect(bc_act_op_table(w.get(), table.get(), &moved_raw));
        OpTablePtr moved(moved_raw);
        char* moved_json = nullptr;
        expect(bc_op_table_to_json(moved.get(), &moved_json));
        char* perm_json = nullptr;
        expect(bc_permutation_to_json(w.get(), &perm_json));
        result = json{{"permutation", json::parse(take_string(perm_json))},
                      {"result", json::parse(take_string(moved_json))}};

        if (verify_equivariance) {
            bc_root_set* before_raw = nullptr;
            expect(bc_table_to_biclosed(table.get(), &before_raw));
            RootSetPtr before(before_raw);
            bc_root_set* acted_raw = nullptr;
            expect(bc_act_root_set(w.get(), before.get(), &acted_raw));
            RootSetPtr acted(acted_raw);
            bc_root_set* after_raw = nullptr;
            expect(bc_table_to_biclosed(moved.get(), &after_raw));
            RootSetPtr after(after_raw);

            char* a = nullptr;
            char* b = nullptr;
            expect(bc_root_set_to_json(acted.get(), &a));
            expect(bc_root_set_to_json(after.get(), &b));
            const bool agree = take_string(a) == take_string(b);
            result["equivariant"] = agree;
            if (!agree) {
                std::cerr << json{{"error", "cross_check_failure"},
                                  {"message", "action and conversion do not commute"}}
                                 .dump()
                          << std::endl;
                return 6;
            }
        }
    }
    sink.stream() << result.dump(2) << "\n";
    return 0;
}

int cmd_poset(int n, bool check_isomorphism, bool check_lattice, int jobs, OutputSink& sink) {
    if (!check_isomorphism && !check_lattice) {
        char* dot = nullptr;
        expect(bc_poset_dot(n, jobs, &dot));
        sink.stream() << take_string(dot);
        return 0;
    }
    json report = json::object();
    if (check_isomorphism) {
        char* raw = nullptr;
        const bc_status st = bc_poset_check_isomorphism(n, jobs, &raw);
        if (st != BC_OK && st != BC_ERR_ORDER)
            fail(st);
        report["isomorphism"] = json::parse(take_string(raw));
        if (st == BC_ERR_ORDER) {
            sink.stream() << report.dump(2) << "\n";
            std::cerr << json{{"error", "order_violation"}, {"message", bc_last_error()}}.dump()
                      << std::endl;
            return 7;
        }
    }
    if (check_lattice) {
        char* raw = nullptr;
        const bc_status st = bc_poset_check_lattice(n, jobs, &raw);
        if (st != BC_OK && st != BC_ERR_LATTICE)
            fail(st);
        report["lattice"] = json::parse(take_string(raw));
        if (st == BC_ERR_LATTICE) {
            sink.stream() << report.dump(2) << "\n";
            std::cerr << json{{"error", "lattice_violation"}, {"message", bc_last_error()}}.dump()
                      << std::endl;
            return 7;
        }
    }
    sink.stream() << report.dump(2) << "\n";
    return 0;
}

int cmd_verify(int n, int jobs, bool force_large, OutputSink& sink) {
    if (n < 1 || n > 4 || (n == 4 && !force_large)) {
        std::cerr << json{{"error", "rank_too_large"},
                          {"message", "verify supports --n 1..3, or 4 with --force-large"}}
                         .dump()
                  << std::endl;
        return 3;
    }
    char* raw = nullptr;
    const bc_status st = bc_verify_json(n, jobs, &raw);
    if (st != BC_OK && st != BC_ERR_VERIFY_FAILED)
        fail(st);
    const json report = json::parse(take_string(raw));
    sink.stream() << report.dump(2) << "\n";
    if (st == BC_ERR_VERIFY_FAILED) {
        std::string first;
        for (const json& c : report.at("criteria"))
            if (!c.at("passed").get<bool>()) {
                first = "criterion " + std::to_string(c.at("id").get<int>()) + " (" +
                        c.at("name").get<std::string>() + ") failed";
                break;
            }
        std::cerr << json{{"error", "verify_failed"}, {"message", first}}.dump() << std::endl;
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"biclosed sets of type-A root systems and quasitrivial semigroup structures"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    OutputSink sink;
    InputSource input;
    int jobs = 1;
    bool force_large = false;
    app.add_option("--output", sink.path, "write results to a file instead of stdout");
    app.add_option("--jobs", jobs, "worker threads for enumeration (0 = hardware)");
    app.add_flag("--force-large", force_large, "allow the largest supported ranks");

    auto* enumerate = app.add_subcommand("enumerate", "list biclosed sets or semigroup tables");
    std::string object = "biclosed", method = "auto", format = "jsonl";
    int n = 2, m = 3;
    bool report = false;
    enumerate->add_option("--object", object, "biclosed | semigroup")->capture_default_str();
    enumerate->add_option("--n", n, "root-system rank")->capture_default_str();
    enumerate->add_option("--m", m, "underlying set size")->capture_default_str();
    enumerate->add_option("--method", method, "auto | brute | classified | semigroups");
    enumerate->add_option("--format", format, "jsonl | json | csv")->capture_default_str();
    enumerate->add_flag("--report", report, "emit the cross-validated enumeration report instead");

    auto* convert = app.add_subcommand("convert", "map a biclosed set to its table or back");
    convert->add_option("--input", input.path, "JSON file, or - for stdin");
    convert->add_option("--json", input.inline_json, "inline JSON");

    auto* check = app.add_subcommand("check", "test associativity of a quasitrivial table");
    std::string via = "both";
    check->add_option("--input", input.path, "JSON file, or - for stdin");
    check->add_option("--json", input.inline_json, "inline JSON");
    check->add_option("--via", via, "direct | biclosed | both")->capture_default_str();

    auto* classify = app.add_subcommand("classify", "canonical presentation of a biclosed set");
    bool with_stabilizer = false;
    classify->add_option("--input", input.path, "JSON file, or - for stdin");
    classify->add_option("--json", input.inline_json, "inline JSON");
    classify->add_flag("--stabilizer", with_stabilizer, "include the stabilizer subgroup");

    auto* act = app.add_subcommand("act", "apply a permutation to a set or table");
    std::string perm_text;
    bool verify_equivariance = false;
    act->add_option("--perm", perm_text, "cycles \"(1,2)\" or images \"[2,1,3]\"")->required();
    act->add_option("--input", input.path, "JSON file, or - for stdin");
    act->add_option("--json", input.inline_json, "inline JSON");
    act->add_flag("--verify-equivariance", verify_equivariance,
                  "check that acting commutes with the correspondence");

    auto* poset = app.add_subcommand("poset", "containment order on all biclosed sets of a rank");
    int poset_n = 1;
    bool check_isomorphism = false, check_lattice = false;
    poset->add_option("--n", poset_n, "root-system rank")->capture_default_str();
    poset->add_flag("--check-isomorphism", check_isomorphism,
                    "verify containment matches the table order");
    poset->add_flag("--check-lattice", check_lattice, "verify unique meets and joins");

    auto* verify = app.add_subcommand("verify", "run the verification battery");
    int verify_n = 3;
    verify->add_option("--n", verify_n, "maximum rank (1..3, 4 with --force-large)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        std::cerr << json{{"error", "invalid_config"}, {"message", e.what()}}.dump() << std::endl;
        return 2;
    }

    try {
        if (enumerate->parsed())
            return cmd_enumerate(object, n, m, method, format, jobs, force_large, report, sink);
        if (convert->parsed())
            return cmd_convert(input, sink);
        if (check->parsed())
            return cmd_check(input, via, sink);
        if (classify->parsed())
            return cmd_classify(input, with_stabilizer, sink);
        if (act->parsed())
            return cmd_act(input, perm_text, verify_equivariance, sink);
        if (poset->parsed())
            return cmd_poset(poset_n, check_isomorphism, check_lattice, jobs, sink);
        if (verify->parsed())
            return cmd_verify(verify_n, jobs, force_large, sink);
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "internal_error"}, {"message", e.what()}}.dump() << std::endl;
        return 1;
    }
    return 2;
}
