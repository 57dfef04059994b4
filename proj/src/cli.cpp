#include "cochad/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "cochad/basis.hpp"
#include "cochad/cocycle.hpp"
#include "cochad/equations.hpp"
#include "cochad/error.hpp"
#include "cochad/ideal.hpp"
#include "cochad/search.hpp"
#include "cochad/tables.hpp"

namespace cochad {

namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string group;
    std::string group_file;
    int t = 0;
    bool count_only = false;
    unsigned threads = 1;
    std::string output;
    std::string format = "text";

    std::string fix;
    std::vector<std::string> filters;
    std::vector<int> dist;
    std::vector<int> col;
    bool experimental_d_dist = false;
    bool matrix = false;
    bool stats = false;

    std::vector<int> cob;

    std::string kind;
    std::string syntax = "plain";

    int which = 0;
};

/// COCHAD_BUDGET, when set, is the log2 size limit for enumeration and the
/// free-coordinate limit for search.
std::optional<int> env_budget() {
    const char* v = std::getenv("COCHAD_BUDGET");
    if (!v || !*v) return std::nullopt;
    char* end = nullptr;
    const long b = std::strtol(v, &end, 10);
    if (*end != '\0' || b < 0 || b > 62) throw UsageError("COCHAD_BUDGET must be an integer in 0..62");
    return static_cast<int>(b);
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::vector<std::string> matrix_rows(const SignMatrix& m) {
    std::vector<std::string> rows;
    std::istringstream in(m.to_text());
    std::string line;
    while (std::getline(in, line)) rows.push_back(line);
    return rows;
}

void require_family_args(const Options& o, const char* sub) {
    if (o.group.empty()) throw UsageError(std::string(sub) + ": --group is required");
    if (o.t <= 0) throw UsageError(std::string(sub) + ": --t must be a positive integer");
}

GroupTable resolve_group(const Options& o, const char* sub) {
    if (!o.group_file.empty()) {
        if (!o.group.empty()) throw UsageError(std::string(sub) + ": --group and --group-file are mutually exclusive");
        std::ifstream in(o.group_file);
        if (!in) throw UsageError(std::string(sub) + ": cannot read --group-file " + o.group_file);
        std::stringstream ss;
        ss << in.rdbuf();
        return load_custom_group(ss.str());
    }
    require_family_args(o, sub);
    return make_group(parse_family(o.group), o.t);
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    const GroupTable g = resolve_group(o, "enumerate");
    EnumerationOptions eo;
    eo.threads = o.threads;
    if (auto b = env_budget()) eo.budget_log2 = *b;
    const EnumerationResult r = enumerate_hadamard_cocycles(g, o.count_only, eo);
    if (o.format == "json") {
        json j{{"group", std::string(family_name(g.family()))}, {"order", g.order()}, {"dim", r.dim}, {"count", r.count}};
        if (g.family() != Family::Custom) j["t"] = g.t();
        if (!o.count_only) {
            j["cocycles"] = json::array();
            for (const auto& c : r.cocycles) j["cocycles"].push_back(matrix_rows(c.to_matrix()));
        }
        out << j.dump() << '\n';
    } else {
        for (const auto& c : r.cocycles) out << c.to_matrix().to_text() << '\n';
        out << "count=" << r.count << '\n';
    }
    return r.count > 0 ? kOk : kNegative;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
    require_family_args(o, "search");
    const Family family = parse_family(o.group);
    SearchFilters f;
    for (const auto& name : o.filters) {
        if (name == "symmetry") f.symmetry = true;
        else if (name == "parity") f.parity = true;
        else throw UsageError("search: unknown --filter '" + name + "' (expected symmetry or parity)");
    }
    if (!o.dist.empty()) f.dist_target = o.dist;
    if (!o.col.empty()) f.col_target = o.col;
    f.experimental_d_dist = o.experimental_d_dist;

    const BasisDescriptor b = family_basis(family, o.t);
    const FixMask mask = FixMask::parse(b, o.fix);
    SearchOptions so;
    so.threads = o.threads;
    if (auto budget = env_budget()) so.budget_free = *budget;
    const SolutionSet r = search(b, mask, f, o.count_only, so);

    const std::string fam(family_name(family));
    if (o.format == "json") {
        if (o.count_only) {
            out << json{{"family", fam}, {"t", o.t}, {"order", b.order()}, {"count", r.count}}.dump() << '\n';
        } else {
            json arr = json::array();
            for (const auto& x : r.solutions)
                arr.push_back({{"family", fam}, {"t", o.t}, {"cob", support_from_coordinates(b, x)}, {"order", b.order()}});
            out << arr.dump() << '\n';
        }
    } else {
        for (const auto& x : r.solutions) {
            out << "family=" << fam << " t=" << o.t << " cob={" << join(support_from_coordinates(b, x)) << "}\n";
            if (o.matrix) out << assemble_matrix(b, x).to_text();
        }
        out << "count=" << r.count << '\n';
    }
    if (o.stats)
        err << "nodes=" << r.stats.nodes << " verified=" << r.stats.verified << " rejected=" << r.stats.rejected
            << " seconds=" << r.stats.seconds << '\n';
    return r.count > 0 ? kOk : kNegative;
}

int cmd_verify(const Options& o, std::ostream& out) {
    require_family_args(o, "verify");
    if (o.cob.empty()) throw UsageError("verify: --cob is required");
    const Family family = parse_family(o.group);
    const VerifyResult r = verify_support(family, o.t, o.cob);
    if (o.format == "json") {
        out << json{{"family", std::string(family_name(family))}, {"t", o.t}, {"cob", o.cob},
                    {"order", r.matrix.size()}, {"hadamard", r.hadamard}, {"matrix", matrix_rows(r.matrix)}}
                   .dump()
            << '\n';
    } else {
        out << (r.hadamard ? "HADAMARD" : "NOT HADAMARD") << " order=" << r.matrix.size() << '\n';
        out << r.matrix.to_text();
    }
    return r.hadamard ? kOk : kNegative;
}

int cmd_emit(const Options& o, std::ostream& out) {
    const Syntax syntax = parse_syntax(o.syntax);
    if (o.kind == "ig") {
        const GroupTable g = resolve_group(o, "emit-ideal");
        out << render(emit_IG(g), syntax, "IG");
    } else if (o.kind == "jg") {
        if (!o.group_file.empty()) throw UsageError("emit-ideal: --kind jg needs a built-in --group, not --group-file");
        require_family_args(o, "emit-ideal");
        const BasisDescriptor b = family_basis(parse_family(o.group), o.t);
        out << render(emit_JG(b, build_system(b)), syntax, "JG");
    } else {
        throw UsageError("emit-ideal: --kind must be ig or jg");
    }
    return kOk;
}

int cmd_tables(const Options& o, std::ostream& out) {
    const auto checks = check_table(o.which);
    std::size_t passed = 0;
    for (const auto& c : checks) {
        out << "table=" << o.which << " t=" << c.t << " order=" << c.order << " method=" << c.method << ' '
            << (c.pass ? "PASS" : "FAIL") << '\n';
        passed += c.pass;
    }
    out << "passed=" << passed << '/' << checks.size() << '\n';
    return passed == checks.size() ? kOk : kNegative;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cocyclic Hadamard matrices: enumeration, masked search, verification and ideal export", "cochad"};
    app.require_subcommand(1);
    Options o;

    auto add_group = [&](CLI::App* sub, bool allow_file) {
        sub->add_option("--group", o.group, "Group family: z (Z_t x Z_2^2) or d (D_4t)")->check(CLI::IsMember({"z", "d"}));
        sub->add_option("--t", o.t, "Group parameter t (order 4t)");
        if (allow_file) sub->add_option("--group-file", o.group_file, "Group table file ('order n' then n rows)");
        sub->add_option("--output", o.output, "Write results to this file instead of standard output");
    };

    auto* enumerate = app.add_subcommand("enumerate", "Count or list all Hadamard cocycles over the group");
    add_group(enumerate, true);
    enumerate->add_flag("--count-only", o.count_only, "Only report the count");
    enumerate->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    enumerate->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* search = app.add_subcommand("search", "Masked search over coboundary coordinates");
    add_group(search, false);
    search->add_option("--fix", o.fix, "Comma-separated i=0 / i=1 over coboundary indices; others are free");
    search->add_option("--filter", o.filters, "Pruning filters: symmetry, parity")->delimiter(',');
    search->add_option("--dist", o.dist, "Distribution target")->delimiter(',');
    search->add_option("--col", o.col, "Column-count target (z family)")->delimiter(',');
    search->add_flag("--experimental-d-dist", o.experimental_d_dist, "Allow the dihedral distribution filter");
    search->add_flag("--count-only", o.count_only, "Only report the count");
    search->add_flag("--matrix", o.matrix, "Dump each solution matrix");
    search->add_flag("--stats", o.stats, "Print search statistics to standard error");
    search->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    search->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "Assemble and test the matrix of a coboundary support");
    add_group(verify, false);
    verify->add_option("--cob", o.cob, "Coboundary indices, e.g. 2,5,6")->delimiter(',');
    verify->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* emit = app.add_subcommand("emit-ideal", "Write the ideal generators for a computer-algebra system");
    add_group(emit, true);
    emit->add_option("--kind", o.kind, "ig (full table ideal) or jg (coordinate ideal)")
        ->required()
        ->check(CLI::IsMember({"ig", "jg"}));
    emit->add_option("--syntax", o.syntax, "plain or singular")->check(CLI::IsMember({"plain", "singular"}));

    auto* tables = app.add_subcommand("tables", "Verify every stored support of a table");
    tables->add_option("--which", o.which, "2 (Z_t x Z_2^2) or 3 (D_4t)")->required()->check(CLI::IsMember({2, 3}));
    tables->add_option("--output", o.output, "Write results to this file instead of standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    std::ostringstream payload;
    int code = kOk;
    try {
        if (*enumerate) code = cmd_enumerate(o, payload);
        else if (*search) code = cmd_search(o, payload, err);
        else if (*verify) code = cmd_verify(o, payload);
        else if (*emit) code = cmd_emit(o, payload);
        else if (*tables) code = cmd_tables(o, payload);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidParameter& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceLimit& e) {
        err << "error: " << e.what() << '\n';
        return kResource;
    }

    if (!o.output.empty()) {
        std::ofstream file(o.output, std::ios::binary);
        if (!file) {
            err << "error: cannot write --output " << o.output << '\n';
            return kUsage;
        }
        file << payload.str();
    } else {
        out << payload.str();
    }
    return code;
}

}  // namespace cochad
