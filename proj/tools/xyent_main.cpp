// xyent: thermal entanglement sweeps for 7-spin XY lattices.
//
// Subcommands: sweep, threshold, ge, convert, oracle. Sweeps emit a
// deterministic CSV (see README) either to --out or stdout.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "xyent/oracles.hpp"
#include "xyent/sweep.hpp"
#include "xyent/units.hpp"
#include "xyent/version.hpp"

namespace {

struct CliOptions {
    std::string lattice = "star7";
    double gamma = 1.0;
    double alpha = 0.0;
    std::string lambda_spec;
    std::string kt_spec;
    std::string pairs = "1,2";
    std::string quantities;
    std::int64_t ge_samples = 200000;
    int ge_refine = 200;
    int ge_refine_top = 16;
    double scan_max = 50.0;
    double tth_tol = 1e-6;
    std::uint64_t seed = 1;
    std::string out;
    std::string config_file;
    int threads = 0;
};

xyent::GridSpec parse_grid(const std::string& text) {
    // min:max:steps[:geom]
    xyent::GridSpec g;
    std::istringstream in(text);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(in, field, ':')) fields.push_back(field);
    if (fields.size() < 3 || fields.size() > 4)
        throw std::invalid_argument("grid '" + text + "' is not min:max:steps[:geom]");
    g.min = std::stod(fields[0]);
    g.max = std::stod(fields[1]);
    g.steps = std::stoi(fields[2]);
    if (fields.size() == 4) {
        if (fields[3] != "geom" && fields[3] != "linear")
            throw std::invalid_argument("grid spacing must be 'geom' or 'linear'");
        g.geometric = fields[3] == "geom";
    }
    return g;
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
    // "1,2;1,4;1,7"
    std::vector<std::pair<int, int>> pairs;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ';')) {
        if (item.empty()) continue;
        const auto comma = item.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("pair '" + item + "' is not i,j");
        pairs.emplace_back(std::stoi(item.substr(0, comma)),
                           std::stoi(item.substr(comma + 1)));
    }
    return pairs;
}

std::vector<xyent::Quantity> parse_quantities(const std::string& text) {
    std::vector<xyent::Quantity> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(xyent::quantity_from_string(item));
    return out;
}

void add_shared_flags(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--lattice", opt.lattice, "chain7 or star7");
    cmd->add_option("--gamma", opt.gamma, "anisotropy in [0,1]");
    cmd->add_option("--alpha", opt.alpha, "central impurity strength (> -1)");
    cmd->add_option("--lambda", opt.lambda_spec, "field grid min:max:steps[:geom]");
    cmd->add_option("--kt", opt.kt_spec, "temperature grid min:max:steps[:geom]");
    cmd->add_option("--pairs", opt.pairs, "site pairs, e.g. \"1,2;1,4;1,7\"");
    cmd->add_option("--quantities", opt.quantities,
                    "comma list of EF,GE,DELTA_E,TTH_PAIR,TTH_ME");
    cmd->add_option("--ge-samples", opt.ge_samples, "random product-state draws");
    cmd->add_option("--ge-refine", opt.ge_refine, "refinement sweeps (0 = sampling only)");
    cmd->add_option("--ge-refine-top", opt.ge_refine_top, "draws refined");
    cmd->add_option("--scan-max", opt.scan_max, "threshold scan upper kT");
    cmd->add_option("--tth-tol", opt.tth_tol, "threshold bisection tolerance");
    cmd->add_option("--seed", opt.seed, "PRNG seed");
    cmd->add_option("--out", opt.out, "output CSV path (default stdout)");
    cmd->add_option("--config", opt.config_file, "JSON config file; flags override");
    cmd->add_option("--threads", opt.threads,
                    "worker threads (0 = XYENT_THREADS or hardware)");
}

xyent::SweepConfig build_config(const CLI::App* cmd, const CliOptions& opt,
                                const std::string& default_quantities) {
    xyent::SweepConfig cfg;
    if (!opt.config_file.empty()) {
        std::ifstream in(opt.config_file);
        if (!in) throw std::invalid_argument("cannot read config file '" +
                                             opt.config_file + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        cfg = xyent::config_from_json(buf.str());
    }

    const auto given = [cmd](const std::string& flag) {
        return cmd->count(flag) > 0;
    };
    if (given("--lattice") || opt.config_file.empty())
        cfg.lattice = xyent::lattice_kind_from_string(opt.lattice);
    if (given("--gamma") || opt.config_file.empty()) cfg.gamma = opt.gamma;
    if (given("--alpha") || opt.config_file.empty()) cfg.alpha = opt.alpha;
    if (given("--lambda")) cfg.lambda_grid = parse_grid(opt.lambda_spec);
    if (given("--kt")) cfg.kt_grid = parse_grid(opt.kt_spec);
    if (given("--pairs") || (opt.config_file.empty() && cfg.pairs.empty()))
        cfg.pairs = parse_pairs(opt.pairs);
    if (given("--quantities"))
        cfg.quantities = parse_quantities(opt.quantities);
    else if (cfg.quantities.empty())
        cfg.quantities = parse_quantities(default_quantities);
    if (given("--ge-samples") || opt.config_file.empty())
        cfg.ge.samples = opt.ge_samples;
    if (given("--ge-refine") || opt.config_file.empty())
        cfg.ge.refine_iters = opt.ge_refine;
    if (given("--ge-refine-top") || opt.config_file.empty())
        cfg.ge.refine_top = opt.ge_refine_top;
    if (given("--scan-max") || opt.config_file.empty())
        cfg.tth.scan_max = opt.scan_max;
    if (given("--tth-tol") || opt.config_file.empty())
        cfg.tth.tol = opt.tth_tol;
    if (given("--seed") || opt.config_file.empty()) {
        cfg.seed = opt.seed;
        cfg.ge.seed = opt.seed;
    }
    cfg.out_path = opt.out;
    cfg.threads = opt.threads;
    return cfg;
}

void emit(const xyent::SweepResult& result) {
    for (const std::string& w : result.warnings) std::cerr << "warning: " << w << "\n";
    if (result.config.out_path.empty() || result.config.out_path == "-")
        std::cout << xyent::to_csv(result);
    else
        xyent::write_csv(result, result.config.out_path);
}

void emit_text(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open '" + out + "'");
        f << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"thermal bipartite and multipartite entanglement in 7-spin XY lattices"};
    app.require_subcommand(1);
    app.set_version_flag("--version", xyent::kVersion);

    CliOptions sweep_opt, tth_opt, ge_opt;
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "EF / GE / DELTA_E over a (lambda, kT) grid");
    add_shared_flags(sweep_cmd, sweep_opt);
    auto* tth_cmd = app.add_subcommand(
        "threshold", "threshold temperatures per lambda");
    add_shared_flags(tth_cmd, tth_opt);
    auto* ge_cmd = app.add_subcommand(
        "ge", "ground-state geometric entanglement per lambda");
    add_shared_flags(ge_cmd, ge_opt);

    auto* convert_cmd = app.add_subcommand(
        "convert", "J-units to Kelvin / Tesla");
    double conv_kt = 1.0, conv_lambda = 1.0, conv_jmev = 1.0, conv_g = 1.0;
    std::string conv_out;
    convert_cmd->add_option("--kt", conv_kt, "temperature in units of J");
    convert_cmd->add_option("--lambda", conv_lambda, "field in units of J");
    convert_cmd->add_option("--j-mev", conv_jmev, "exchange coupling J in meV")
        ->required();
    convert_cmd->add_option("--g-factor", conv_g, "effective g (default 1)");
    convert_cmd->add_option("--out", conv_out, "output path (default stdout)");

    auto* oracle_cmd = app.add_subcommand(
        "oracle", "re-derive the brute-force reference checks");
    std::uint64_t oracle_seed = 12345;
    double oracle_res = 1e-3;
    std::string oracle_out;
    oracle_cmd->add_option("--seed", oracle_seed, "PRNG seed");
    oracle_cmd->add_option("--ge-resolution", oracle_res,
                           "grid step for the GE oracle (<= 1e-2)");
    oracle_cmd->add_option("--out", oracle_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep_cmd->parsed()) {
            emit(xyent::run_sweep(build_config(sweep_cmd, sweep_opt, "EF")));
        } else if (tth_cmd->parsed()) {
            emit(xyent::run_threshold_curve(
                build_config(tth_cmd, tth_opt, "TTH_PAIR,TTH_ME")));
        } else if (ge_cmd->parsed()) {
            auto cfg = build_config(ge_cmd, ge_opt, "GE");
            cfg.quantities = {xyent::Quantity::GE};
            emit(xyent::run_sweep(cfg));
        } else if (convert_cmd->parsed()) {
            const auto conv =
                xyent::convert_units(conv_kt, conv_jmev, conv_lambda, conv_g);
            std::ostringstream out;
            out << "kt_in_J,lambda_in_J,J_meV,g_factor,kelvin,tesla\n"
                << xyent::format_sig9(conv_kt) << "," << xyent::format_sig9(conv_lambda)
                << "," << xyent::format_sig9(conv_jmev) << ","
                << xyent::format_sig9(conv_g) << "," << xyent::format_sig9(conv.kelvin)
                << "," << xyent::format_sig9(conv.tesla) << "\n";
            emit_text(out.str(), conv_out);
        } else if (oracle_cmd->parsed()) {
            const auto reports = xyent::oracles::run_oracle_suite(oracle_seed, oracle_res);
            emit_text(xyent::oracles::reports_to_csv(reports), oracle_out);
            for (const auto& r : reports)
                if (!r.passed) return 2;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
