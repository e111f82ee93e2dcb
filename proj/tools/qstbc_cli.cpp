// Command-line front end: table reproduction, certified search, code
// inspection, norm checking, encoding and Monte Carlo simulation.
//
// Exit codes: 0 success/certified, 2 flagged discrepancy or uncertified
// result, 1 usage or domain error.

#include "qstbc/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace {

using namespace qstbc;

RingElem parse_ring(long d, const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) {
        throw CLI::ValidationError("expected integral-basis coordinates \"a,b\", got \"" + s + "\"");
    }
    try {
        return RingElem(d, Int(s.substr(0, comma)), Int(s.substr(comma + 1)));
    } catch (const std::runtime_error&) {
        throw CLI::ValidationError("bad integer coordinates \"" + s + "\"");
    }
}

SearchBudget budget_from_effort(double effort) {
    SearchBudget b;
    if (effort > 0) b.radius_sq = Rat(static_cast<long>(effort));
    return b;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

int cmd_table(const std::string& format) {
    auto rows = reproduce_table();
    if (format == "json") {
        std::cout << to_json(rows).dump(2) << "\n";
    } else {
        std::cout << table_csv(rows);
    }
    for (const TableRow& r : rows) {
        if (r.flagged) return 2;
    }
    return 0;
}

int cmd_search(long d, const std::string& target, double effort) {
    SearchReport report = optimal_search(d, parse_rational(target), budget_from_effort(effort));
    std::cout << to_json(report).dump(2) << "\n";
    return report.certified ? 0 : 2;
}

int cmd_code(long d, const std::string& p, const std::string& q, const std::string& gamma,
             double effort) {
    QuadPoly poly(parse_ring(d, p), parse_ring(d, q));
    CodeSpec spec = make_code(d, poly, parse_ring(d, gamma), budget_from_effort(effort));
    std::cout << to_json(spec).dump(2) << "\n";
    return 0;
}

int cmd_norm_check(long d, const std::string& p, const std::string& q, const std::string& gamma,
                   double effort) {
    QuadPoly poly(parse_ring(d, p), parse_ring(d, q));
    FieldElem g = parse_ring(d, gamma).to_field();
    NormStatus status = decide_norm(poly, g, budget_from_effort(effort));
    std::cout << to_json(status).dump(2) << "\n";
    return status.verdict == NormVerdict::Unknown ? 2 : 0;
}

int cmd_encode(const std::string& spec_path, const std::string& symbols, bool balanced) {
    CodeSpec spec = code_spec_from_json(load_json(spec_path));

    std::vector<Int> coords;
    std::string cur;
    std::istringstream ss(symbols);
    while (std::getline(ss, cur, ',')) coords.emplace_back(cur);
    if (coords.size() != 8) {
        throw std::runtime_error("--symbols needs 8 comma-separated integers (a,b per symbol)");
    }
    Symbols syms = {RingElem(spec.d, coords[0], coords[1]), RingElem(spec.d, coords[2], coords[3]),
                    RingElem(spec.d, coords[4], coords[5]), RingElem(spec.d, coords[6], coords[7])};

    Codeword w = encode(spec, syms);
    Eigen::Matrix2cd m = balanced ? balanced_encode(spec, syms) : w.matrix();
    FieldElem det = det_codeword(w);

    json j;
    j["matrix"] = json::array();
    for (int i = 0; i < 2; ++i) {
        json row = json::array();
        for (int k = 0; k < 2; ++k) row.push_back({{"re", m(i, k).real()}, {"im", m(i, k).imag()}});
        j["matrix"].push_back(row);
    }
    j["det"] = {{"x", rational_string(det.x())}, {"y", rational_string(det.y())}};
    j["det_abs_sq"] = rational_string(det.abs_sq());
    j["balanced"] = balanced;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_simulate(const std::string& spec_path, const std::string& snr_list, long trials,
                 std::uint64_t seed, long box, bool balanced, std::size_t cap,
                 const std::string& plot_path) {
    SimConfig cfg;
    cfg.spec = code_spec_from_json(load_json(spec_path));
    cfg.symbol_box = box;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.balanced = balanced;
    cfg.codebook_cap = cap;

    std::istringstream ss(snr_list);
    std::string cur;
    while (std::getline(ss, cur, ',')) {
        cfg.snr_grid_db.push_back(cur == "inf" ? std::numeric_limits<double>::infinity()
                                               : std::stod(cur));
    }

    SimResult result = run(cfg);
    std::cout << sim_csv(result);
    if (!plot_path.empty()) {
        std::ofstream out(plot_path);
        if (!out) throw std::runtime_error("cannot write " + plot_path);
        out << sim_plot_data(result);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact 2x2 space-time block codes over imaginary quadratic integers"};
    app.require_subcommand(1);

    auto* table = app.add_subcommand("table", "Reproduce the summary table of optimal codes");
    std::string format = "csv";
    table->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    auto* search = app.add_subcommand("search", "Certified optimal-code search over O_F");
    long s_d = 0;
    std::string s_target;
    double s_effort = 0;
    search->add_option("--d", s_d, "Field parameter of Q(sqrt(-d))")->required();
    search->add_option("--target", s_target, "Reference reduced c_det (rational, e.g. 3 or 7/2)")->required();
    search->add_option("--effort", s_effort, "Witness search radius^2 (default 50)");

    auto* code = app.add_subcommand("code", "Build and inspect a code spec");
    long c_d = 0;
    std::string c_p, c_q, c_gamma;
    double c_effort = 0;
    code->add_option("--d", c_d)->required();
    code->add_option("--p", c_p, "Coefficient p as \"a,b\" in the integral basis")->required();
    code->add_option("--q", c_q, "Coefficient q as \"a,b\"")->required();
    code->add_option("--gamma", c_gamma, "gamma as \"a,b\"")->required();
    code->add_option("--effort", c_effort);

    auto* norm = app.add_subcommand("norm-check", "Decide whether gamma is a relative norm");
    long n_d = 0;
    std::string n_p, n_q, n_gamma;
    double n_effort = 0;
    norm->add_option("--d", n_d)->required();
    norm->add_option("--p", n_p)->required();
    norm->add_option("--q", n_q)->required();
    norm->add_option("--gamma", n_gamma)->required();
    norm->add_option("--effort", n_effort);

    auto* enc = app.add_subcommand("encode", "Materialize a codeword");
    std::string e_spec, e_symbols;
    bool e_balanced = false;
    enc->add_option("--spec", e_spec, "Code spec JSON file (see `code`)")->required();
    enc->add_option("--symbols", e_symbols, "Four symbols as 8 comma-separated integers")->required();
    enc->add_flag("--balanced", e_balanced, "Use the sqrt(gamma)-balanced codeword");

    auto* sim = app.add_subcommand("simulate", "Monte Carlo CER vs SNR");
    std::string m_spec, m_snr, m_plot;
    long m_trials = 10000, m_box = 1;
    std::uint64_t m_seed = 1;
    bool m_balanced = false;
    std::size_t m_cap = 4096;
    sim->add_option("--spec", m_spec)->required();
    sim->add_option("--snr", m_snr, "Comma-separated SNR grid in dB (\"inf\" allowed)")->required();
    sim->add_option("--trials", m_trials);
    sim->add_option("--seed", m_seed);
    sim->add_option("--box", m_box, "Symbol coordinate box");
    sim->add_flag("--balanced", m_balanced);
    sim->add_option("--cap", m_cap, "Exhaustive-ML codebook cap");
    sim->add_option("--plot-data", m_plot, "Also write a gnuplot-compatible data file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (table->parsed()) return cmd_table(format);
        if (search->parsed()) return cmd_search(s_d, s_target, s_effort);
        if (code->parsed()) return cmd_code(c_d, c_p, c_q, c_gamma, c_effort);
        if (norm->parsed()) return cmd_norm_check(n_d, n_p, n_q, n_gamma, n_effort);
        if (enc->parsed()) return cmd_encode(e_spec, e_symbols, e_balanced);
        if (sim->parsed())
            return cmd_simulate(m_spec, m_snr, m_trials, m_seed, m_box, m_balanced, m_cap, m_plot);
    } catch (const qstbc::gamma_is_norm_error& e) {
        std::cerr << "error: " << e.what() << "\n       witness: a = "
                  << field_string(e.witness.a()) << ", b = " << field_string(e.witness.b()) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
