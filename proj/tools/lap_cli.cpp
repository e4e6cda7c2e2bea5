#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "lap/io.hpp"
#include "lap/suite.hpp"

using namespace lap;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

ArthurParameter load_param(const std::string& path) { return parameter_from_json(read_json_file(path)); }
MoeglinDatum load_datum(const std::string& path) { return datum_from_json(read_json_file(path)); }

void check_epsilon(int eps) {
    if (eps != 1 && eps != -1) throw InputError("--epsilon must be 1 or -1");
}

std::string verdict_word(bool v) { return v ? "Nonzero" : "Zero"; }

std::string trace_text(const Verdict& v) {
    std::ostringstream os;
    for (const auto& e : v.trace) {
        os << std::string(2 * e.depth, ' ') << step_name(e.step) << " (" << step_rule(e.step) << ")";
        if (!e.rho.empty()) os << " [" << e.rho << "]";
        os << " {";
        for (size_t k = 0; k < e.blocks.size(); ++k) os << (k ? "," : "") << e.blocks[k];
        os << "}";
        if (!e.detail.empty()) os << " : " << e.detail;
        if (e.result) os << " -> " << verdict_word(*e.result);
        os << "\n";
    }
    return os.str();
}

int cmd_validate(const std::string& path) {
    ArthurParameter p = load_param(path);
    json out{{"valid", true}, {"summary", p.summary()}, {"dimension", p.dimension()}, {"good_parity", is_good_parity(p)}};
    print(out);
    return 0;
}

int cmd_decompose(const std::string& path) {
    ArthurParameter p = load_param(path);
    json out = to_json(decompose(p));
    json m = json::object();
    for (const auto& s : p.summands) {
        json rows = json::array();
        for (const auto& r : multisegment_matrix(s)) {
            json row = json::array();
            for (const auto& q : r) row.push_back(q.str());
            rows.push_back(row);
        }
        m[s.rho + "x" + s.x.str() + "xS" + std::to_string(s.a) + "xS" + std::to_string(s.b)] = rows;
    }
    out["multisegments"] = m;
    print(out);
    return 0;
}

int cmd_packet_data(const std::string& path, bool nonzero_only) {
    print(packet_data_json(load_param(path), nonzero_only));
    return 0;
}

int cmd_apply_op(const std::string& path, const std::string& op, const std::string& rho, int i, int j,
                 std::optional<int> split_twice, bool list) {
    ArthurParameter p = load_param(path);
    if (list) {
        print(raising_json(p));
        return 0;
    }
    ArthurParameter out;
    if (op == "dual")
        out = dual(p);
    else if (op == "ui")
        out = apply_ui(p, rho, i, j);
    else if (op == "ui-inverse" && split_twice)
        out = apply_ui_inverse_split(p, rho, i, HalfInt::from_twice(*split_twice));
    else if (op == "ui-inverse")
        out = apply_ui_inverse(p, rho, i, j);
    else if (op == "dual-minus")
        out = apply_dual_minus(p, rho, i);
    else if (op == "dual-ui-dual")
        out = apply_dual_ui_dual(p, rho, i, j);
    else
        throw InputError("--op must be one of dual, ui, ui-inverse, dual-minus, dual-ui-dual");
    print(to_json(out));
    return 0;
}

int cmd_psi_graph(const std::vector<std::string>& paths, const std::string& out_path, bool filter, bool as_json) {
    std::vector<ArthurParameter> seeds;
    std::vector<std::pair<ArthurParameter, std::string>> named;
    for (const auto& path : paths) {
        json j = read_json_file(path);
        ArthurParameter p = parameter_from_json(j);
        seeds.push_back(p);
        named.push_back({p, name_of(j)});
    }
    PsiGraph g = filter ? closure_graph(seeds, seeds) : closure_graph(seeds);
    std::vector<std::string> names;
    for (const auto& n : g.nodes) {
        std::string nm;
        for (const auto& [p, s] : named)
            if (p.same_as(n) && !s.empty()) nm = s;
        names.push_back(nm.empty() ? n.summary() : nm);
    }
    std::string text;
    if (as_json) {
        json j = to_json(g);
        j["names"] = names;
        auto ext = psi_extrema(g);
        j["max"] = names[ext.max];
        j["min"] = names[ext.min];
        text = j.dump(2) + "\n";
    } else {
        text = emit_dot(g, names);
    }
    for (const auto& w : g.warnings) std::cerr << "warning: " << w << "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw InputError("cannot write " + out_path);
        f << text;
    }
    return 0;
}

int cmd_xu_check(const std::string& path, bool explain, bool as_json) {
    MoeglinDatum d = load_datum(path);
    XuOptions opt;
    opt.record = explain;
    Verdict v = nonvanishing(d, opt);
    if (as_json) {
        print(to_json(v, explain));
    } else {
        std::cout << verdict_word(v.nonzero) << "\n";
        if (explain) std::cout << trace_text(v);
    }
    return 0;
}

int cmd_adams_report(const std::string& path, int eps, std::optional<int> alpha_max, bool as_json) {
    check_epsilon(eps);
    if (alpha_max && (*alpha_max < 1 || *alpha_max % 2 == 0)) throw InputError("--alpha-max must be odd and positive");
    MoeglinDatum d = load_datum(path);
    AdamsReport r = adams_chain(d, eps, alpha_max);
    if (as_json) {
        print(to_json(r));
        return 0;
    }
    std::cout << "epsilon " << eps << ", start alpha " << r.start << "\n";
    std::cout << "alpha  verdict  obstructions\n";
    for (const auto& row : r.rows) {
        std::cout << std::setw(5) << row.alpha << "  " << std::setw(7) << verdict_word(row.nonzero) << "  ";
        for (size_t k = 0; k < row.obstruction_hits.size(); ++k) std::cout << (k ? "; " : "") << row.obstruction_hits[k];
        std::cout << "\n";
    }
    for (int a : r.closure_violations) std::cout << "closure violation at alpha " << a << "\n";
    std::cout << "d = " << r.d << "\n";
    return 0;
}

int cmd_adams_d(const std::string& path, int eps) {
    check_epsilon(eps);
    std::cout << compute_d(load_datum(path), eps) << "\n";
    return 0;
}

int cmd_obstructions(const std::string& path) {
    print(obstructions_json(load_param(path)));
    return 0;
}

int cmd_verify_monotonicity(const std::string& path, int eps) {
    check_epsilon(eps);
    print(to_json(verify_monotonicity(pairs_from_json(read_json_file(path)), eps)));
    return 0;
}

int cmd_conservation(int known, int n) {
    if (known % 2 != 0 || n % 2 != 0) throw InputError("--known and --n must be even");
    print(conservation_json(known, n));
    return 0;
}

int cmd_fixtures(const std::string& dir, bool quick) {
    SuiteOptions opt;
    opt.fixture_dir = dir;
    if (quick) opt.corpus_dim = 9;
    auto results = run_acceptance(opt);
    for (const auto& r : results) std::cout << format_result(r) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local Arthur packet combinatorics"};
    app.require_subcommand(1);

    std::string path, rho = kChiV, op, out_path, fixture_dir = LAP_FIXTURE_DIR;
    std::vector<std::string> paths;
    bool explain = false, as_json = false, filter = false, list = false, nonzero_only = false, quick = false;
    int eps = 0, i = -1, j = -1, known = 0, n = 0;
    std::optional<int> alpha_max, split_twice;

    auto* validate_cmd = app.add_subcommand("validate", "Validate a parameter file");
    validate_cmd->add_option("param", path)->required();

    auto* decompose_cmd = app.add_subcommand("decompose", "Split a parameter into nu>0, non-self-dual and good-parity parts");
    decompose_cmd->add_option("param", path)->required();

    auto* packet_cmd = app.add_subcommand("packet-data", "Enumerate Moeglin data with verdicts");
    packet_cmd->add_option("param", path)->required();
    packet_cmd->add_flag("--nonzero", nonzero_only, "Only list nonzero data");

    auto* apply_cmd = app.add_subcommand("apply-op", "Apply a raising operator or its inverse");
    apply_cmd->add_option("param", path)->required();
    apply_cmd->add_option("--op", op, "dual, ui, ui-inverse, dual-minus, dual-ui-dual");
    apply_cmd->add_option("--rho", rho);
    apply_cmd->add_option("-i", i, "summand index (file order)");
    apply_cmd->add_option("-j", j, "second summand index (file order)");
    apply_cmd->add_option("--split-twice", split_twice, "twice the B of the upper piece for a 3' inverse");
    apply_cmd->add_flag("--list", list, "List raising moves instead");

    auto* graph_cmd = app.add_subcommand("psi-graph", "Closure graph of raising operators as DOT");
    graph_cmd->add_option("params", paths)->required();
    graph_cmd->add_option("-o,--output", out_path);
    graph_cmd->add_flag("--filter", filter, "Keep only the given parameters as nodes");
    graph_cmd->add_flag("--json", as_json);

    auto* xu_cmd = app.add_subcommand("xu-check", "Nonvanishing verdict for a datum");
    xu_cmd->add_option("datum", path)->required();
    xu_cmd->add_flag("--explain", explain, "Print the reduction trace");
    xu_cmd->add_flag("--json", as_json);

    auto* report_cmd = app.add_subcommand("adams-report", "Lift chain over alpha");
    report_cmd->add_option("datum", path)->required();
    report_cmd->add_option("--epsilon", eps)->required();
    report_cmd->add_option("--alpha-max", alpha_max);
    report_cmd->add_flag("--json", as_json);

    auto* d_cmd = app.add_subcommand("adams-d", "The invariant d of a datum");
    d_cmd->add_option("datum", path)->required();
    d_cmd->add_option("--epsilon", eps)->required();

    auto* obs_cmd = app.add_subcommand("obstructions", "Predicted zeros from removable blocks");
    obs_cmd->add_option("param", path)->required();

    auto* mono_cmd = app.add_subcommand("verify-monotonicity", "Compare chains across operator pairs");
    mono_cmd->add_option("pairs", path)->required();
    mono_cmd->add_option("--epsilon", eps)->required();

    auto* cons_cmd = app.add_subcommand("conservation", "Other first occurrence index from one");
    cons_cmd->add_option("--known", known)->required();
    cons_cmd->add_option("--n", n)->required();

    auto* fix_cmd = app.add_subcommand("fixtures", "Run the acceptance suite on the shipped fixtures");
    fix_cmd->add_option("--dir", fixture_dir);
    fix_cmd->add_flag("--quick", quick, "Smaller corpus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*validate_cmd) return cmd_validate(path);
        if (*decompose_cmd) return cmd_decompose(path);
        if (*packet_cmd) return cmd_packet_data(path, nonzero_only);
        if (*apply_cmd) return cmd_apply_op(path, op, rho, i, j, split_twice, list);
        if (*graph_cmd) return cmd_psi_graph(paths, out_path, filter, as_json);
        if (*xu_cmd) return cmd_xu_check(path, explain, as_json);
        if (*report_cmd) return cmd_adams_report(path, eps, alpha_max, as_json);
        if (*d_cmd) return cmd_adams_d(path, eps);
        if (*obs_cmd) return cmd_obstructions(path);
        if (*mono_cmd) return cmd_verify_monotonicity(path, eps);
        if (*cons_cmd) return cmd_conservation(known, n);
        if (*fix_cmd) return cmd_fixtures(fixture_dir, quick);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "invalid " << e.what() << "\n";
        return 1;
    } catch (const UnpairedSummand& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return 1;
    } catch (const DatumError& e) {
        std::cerr << "invalid datum: " << e.what() << "\n";
        return 1;
    } catch (const PairMismatch& e) {
        std::cerr << "pair mismatch: " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
