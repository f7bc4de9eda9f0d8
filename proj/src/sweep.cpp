#include "xyent/sweep.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "xyent/version.hpp"

namespace xyent {

using nlohmann::json;

const char* to_string(Quantity q) {
    switch (q) {
        case Quantity::EF: return "EF";
        case Quantity::GE: return "GE";
        case Quantity::DeltaE: return "DELTA_E";
        case Quantity::TthPair: return "TTH_PAIR";
        case Quantity::TthMe: return "TTH_ME";
    }
    return "?";
}

Quantity quantity_from_string(const std::string& name) {
    if (name == "EF") return Quantity::EF;
    if (name == "GE") return Quantity::GE;
    if (name == "DELTA_E") return Quantity::DeltaE;
    if (name == "TTH_PAIR") return Quantity::TthPair;
    if (name == "TTH_ME") return Quantity::TthMe;
    throw std::invalid_argument("unknown quantity '" + name + "'");
}

std::vector<double> GridSpec::points() const {
    std::vector<double> out;
    out.reserve(steps);
    if (steps == 1) {
        out.push_back(min);
        return out;
    }
    if (geometric) {
        const double ratio = std::pow(max / min, 1.0 / (steps - 1));
        double v = min;
        for (int k = 0; k < steps; ++k) {
            out.push_back(v);
            v *= ratio;
        }
    } else {
        const double step = (max - min) / (steps - 1);
        for (int k = 0; k < steps; ++k) out.push_back(min + k * step);
    }
    out.back() = max;
    return out;
}

std::string format_sig9(double v) {
    if (v == 0.0) v = 0.0;  // never print -0
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

namespace {

bool wants(const SweepConfig& cfg, Quantity q) {
    for (Quantity have : cfg.quantities)
        if (have == q) return true;
    return false;
}

void check_grid(std::ostringstream& bad, const char* name, const GridSpec& g,
                bool field_domain) {
    if (g.steps < 1) bad << name << ": steps must be >= 1; ";
    if (!(g.min <= g.max)) bad << name << ": min must not exceed max; ";
    if (field_domain && !(g.min >= 0.0)) bad << name << ": min must be >= 0; ";
    if (g.geometric && !(g.min > 0.0))
        bad << name << ": geometric spacing needs min > 0; ";
    if (!std::isfinite(g.min) || !std::isfinite(g.max))
        bad << name << ": bounds must be finite; ";
}

// Normalizes pairs to (min,max) and throws one aggregated report listing
// every config problem.
SweepConfig validated(const SweepConfig& input) {
    SweepConfig cfg = input;
    std::ostringstream bad;

    if (!(cfg.gamma >= 0.0 && cfg.gamma <= 1.0))
        bad << "gamma=" << cfg.gamma << " outside [0,1]; ";
    if (!(cfg.alpha > -1.0)) bad << "alpha=" << cfg.alpha << " must exceed -1; ";
    check_grid(bad, "lambda_grid", cfg.lambda_grid, true);
    if (cfg.kt_grid) check_grid(bad, "kt_grid", *cfg.kt_grid, true);

    if (cfg.quantities.empty()) bad << "quantities must not be empty; ";
    const bool needs_pairs = wants(cfg, Quantity::EF) || wants(cfg, Quantity::TthPair);
    if (needs_pairs && cfg.pairs.empty())
        bad << "EF/TTH_PAIR need at least one pair; ";
    for (auto& pr : cfg.pairs) {
        if (pr.first == pr.second || pr.first < 1 || pr.first > kNumSites ||
            pr.second < 1 || pr.second > kNumSites) {
            bad << "bad pair (" << pr.first << "," << pr.second << "); ";
            continue;
        }
        if (pr.first > pr.second) std::swap(pr.first, pr.second);
    }
    for (std::size_t a = 0; a < cfg.pairs.size(); ++a)
        for (std::size_t b = a + 1; b < cfg.pairs.size(); ++b)
            if (cfg.pairs[a] == cfg.pairs[b]) {
                bad << "duplicate pair (" << cfg.pairs[a].first << ","
                    << cfg.pairs[a].second << "); ";
                b = cfg.pairs.size();
            }

    if (cfg.ge.samples < 1) bad << "ge.samples must be >= 1; ";
    if (cfg.ge.refine_iters < 0) bad << "ge.refine_iters must be >= 0; ";
    if (cfg.ge.refine_top < 0) bad << "ge.refine_top must be >= 0; ";
    if (!(cfg.ge.conv_tol >= 0.0)) bad << "ge.conv_tol must be >= 0; ";

    if (!(cfg.tth.scan_max > 0.0)) bad << "tth.scan_max must be > 0; ";
    if (cfg.tth.scan_points < 2) bad << "tth.scan_points must be >= 2; ";
    if (!(cfg.tth.kt_min > 0.0 && cfg.tth.kt_min < cfg.tth.scan_max))
        bad << "tth.kt_min must be in (0, scan_max); ";
    if (!(cfg.tth.tol > 0.0)) bad << "tth.tol must be > 0; ";

    const std::string msg = bad.str();
    if (!msg.empty()) throw std::invalid_argument("invalid sweep config: " + msg);
    return cfg;
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("XYENT_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

struct LambdaOutput {
    std::vector<SweepRow> rows;
    int ground_degeneracy = 1;
    bool ge_computed = false;
    bool ge_sign_used = false;
};

std::string threshold_flags(const ThresholdResult& t) {
    if (t.never_entangled) return "never_entangled";
    if (t.entangled_beyond_scan) return "entangled_beyond_scan";
    return "";
}

LambdaOutput evaluate_lambda(const SweepConfig& cfg, double lambda,
                             const std::vector<double>& kts) {
    std::ostringstream ctx;
    ctx << "gamma=" << cfg.gamma << " lambda=" << lambda << " alpha=" << cfg.alpha;
    const LatticeSpec spec{cfg.lattice, cfg.alpha, cfg.gamma, lambda};

    LambdaOutput out;
    const Spectrum spectrum = diagonalize(build_hamiltonian(spec), -1.0, ctx.str());
    out.ground_degeneracy = spectrum.ground_degeneracy;

    const bool want_ef = wants(cfg, Quantity::EF);
    const bool want_de = wants(cfg, Quantity::DeltaE);
    for (double kt : kts) {
        if (!want_ef && !want_de) break;
        // reuse_spectra=false re-diagonalizes per grid point; the rows must
        // come out identical either way.
        Spectrum fresh;
        if (!cfg.reuse_spectra)
            fresh = diagonalize(build_hamiltonian(spec), -1.0, ctx.str());
        const Spectrum& use = cfg.reuse_spectra ? spectrum : fresh;
        const ThermalEnsemble ens = make_ensemble(use, kt);
        if (want_ef)
            for (const auto& [i, j] : cfg.pairs)
                out.rows.push_back({lambda, kt, Quantity::EF, i, j,
                                    pair_eof(use, ens, i, j), ""});
        if (want_de)
            out.rows.push_back({lambda, kt, Quantity::DeltaE, 0, 0,
                                thermal_energy_gap(use, ens), ""});
    }

    const bool want_ge = wants(cfg, Quantity::GE);
    const bool want_me = wants(cfg, Quantity::TthMe);
    GEResult ge;
    if (want_ge || want_me) {
        ge = geometric_entanglement(spectrum.vectors.col(0), cfg.ge);
        out.ge_computed = true;
        out.ge_sign_used = ge.sign_used;
    }
    if (want_ge)
        out.rows.push_back({lambda, 0.0, Quantity::GE, 0, 0, ge.g,
                            ge.sign_used ? "sign_used" : ""});

    if (wants(cfg, Quantity::TthPair))
        for (const auto& [i, j] : cfg.pairs) {
            const ThresholdResult t = threshold_pair(spectrum, i, j, cfg.tth, lambda);
            out.rows.push_back({lambda, 0.0, Quantity::TthPair, i, j, t.t_th,
                                threshold_flags(t)});
        }
    if (want_me) {
        const ThresholdResult t =
            threshold_multipartite(spectrum, ge.g, cfg.tth.tol, lambda);
        out.rows.push_back({lambda, 0.0, Quantity::TthMe, 0, 0, t.t_th,
                            threshold_flags(t)});
    }
    return out;
}

int quantity_rank(Quantity q) { return static_cast<int>(q); }

void sort_rows(std::vector<SweepRow>& rows) {
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        return std::tuple(quantity_rank(a.quantity), a.i, a.j, a.lambda, a.kt) <
               std::tuple(quantity_rank(b.quantity), b.i, b.j, b.lambda, b.kt);
    });
}

json grid_to_json(const GridSpec& g) {
    return json{{"min", g.min},
                {"max", g.max},
                {"steps", g.steps},
                {"spacing", g.geometric ? "geometric" : "linear"}};
}

GridSpec grid_from_json(const json& j) {
    GridSpec g;
    g.min = j.at("min").get<double>();
    g.max = j.at("max").get<double>();
    g.steps = j.at("steps").get<int>();
    g.geometric = j.value("spacing", "linear") == std::string("geometric");
    return g;
}

json config_to_json_obj(const SweepConfig& cfg) {
    json j;
    j["lattice"] = to_string(cfg.lattice);
    j["gamma"] = cfg.gamma;
    j["alpha"] = cfg.alpha;
    j["lambda_grid"] = grid_to_json(cfg.lambda_grid);
    j["kt_grid"] = cfg.kt_grid ? grid_to_json(*cfg.kt_grid) : json(nullptr);
    json pairs = json::array();
    for (const auto& [i, jj] : cfg.pairs) pairs.push_back({i, jj});
    j["pairs"] = pairs;
    json quantities = json::array();
    for (Quantity q : cfg.quantities) quantities.push_back(to_string(q));
    j["quantities"] = quantities;
    j["ge"] = json{{"samples", cfg.ge.samples},
                   {"refine_iters", cfg.ge.refine_iters},
                   {"refine_top", cfg.ge.refine_top},
                   {"seed", cfg.ge.seed},
                   {"conv_tol", cfg.ge.conv_tol}};
    j["tth"] = json{{"scan_max", cfg.tth.scan_max},
                    {"scan_points", cfg.tth.scan_points},
                    {"kt_min", cfg.tth.kt_min},
                    {"tol", cfg.tth.tol}};
    j["seed"] = cfg.seed;
    return j;
}

SweepConfig config_from_json_obj(const json& j) {
    SweepConfig cfg;
    cfg.lattice = lattice_kind_from_string(j.value("lattice", "star7"));
    cfg.gamma = j.value("gamma", 1.0);
    cfg.alpha = j.value("alpha", 0.0);
    if (j.contains("lambda_grid")) cfg.lambda_grid = grid_from_json(j.at("lambda_grid"));
    if (j.contains("kt_grid") && !j.at("kt_grid").is_null())
        cfg.kt_grid = grid_from_json(j.at("kt_grid"));
    if (j.contains("pairs"))
        for (const auto& p : j.at("pairs"))
            cfg.pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    if (j.contains("quantities"))
        for (const auto& q : j.at("quantities"))
            cfg.quantities.push_back(quantity_from_string(q.get<std::string>()));
    if (j.contains("ge")) {
        const json& g = j.at("ge");
        cfg.ge.samples = g.value("samples", cfg.ge.samples);
        cfg.ge.refine_iters = g.value("refine_iters", cfg.ge.refine_iters);
        cfg.ge.refine_top = g.value("refine_top", cfg.ge.refine_top);
        cfg.ge.seed = g.value("seed", cfg.ge.seed);
        cfg.ge.conv_tol = g.value("conv_tol", cfg.ge.conv_tol);
    }
    if (j.contains("tth")) {
        const json& t = j.at("tth");
        cfg.tth.scan_max = t.value("scan_max", cfg.tth.scan_max);
        cfg.tth.scan_points = t.value("scan_points", cfg.tth.scan_points);
        cfg.tth.kt_min = t.value("kt_min", cfg.tth.kt_min);
        cfg.tth.tol = t.value("tol", cfg.tth.tol);
    }
    cfg.seed = j.value("seed", cfg.seed);
    return cfg;
}

SweepResult run_impl(const SweepConfig& input) {
    const SweepConfig cfg = validated(input);

    SweepResult result;
    result.config = cfg;
    build_edges(cfg.lattice, cfg.alpha, &result.warnings);

    const std::vector<double> lambdas = cfg.lambda_grid.points();
    const std::vector<double> kts =
        cfg.kt_grid ? cfg.kt_grid->points() : std::vector<double>{0.0};

    std::vector<LambdaOutput> outputs(lambdas.size());
    const int threads =
        std::min<int>(resolve_threads(cfg.threads), static_cast<int>(lambdas.size()));
    if (threads <= 1) {
        for (std::size_t k = 0; k < lambdas.size(); ++k)
            outputs[k] = evaluate_lambda(cfg, lambdas[k], kts);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t k = next.fetch_add(1); k < lambdas.size();
                         k = next.fetch_add(1))
                        outputs[k] = evaluate_lambda(cfg, lambdas[k], kts);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (const auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    for (std::size_t k = 0; k < lambdas.size(); ++k) {
        const std::string key = format_sig9(lambdas[k]);
        result.ground_degeneracy[key] = outputs[k].ground_degeneracy;
        if (outputs[k].ge_computed) result.ge_sign_used[key] = outputs[k].ge_sign_used;
        result.rows.insert(result.rows.end(), outputs[k].rows.begin(),
                           outputs[k].rows.end());
    }
    sort_rows(result.rows);
    return result;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& cfg) { return run_impl(cfg); }

SweepResult run_threshold_curve(const SweepConfig& cfg) {
    if (!wants(cfg, Quantity::TthPair) && !wants(cfg, Quantity::TthMe))
        throw std::invalid_argument(
            "run_threshold_curve: quantities must include TTH_PAIR or TTH_ME");
    return run_impl(cfg);
}

std::string config_to_json(const SweepConfig& cfg) {
    return config_to_json_obj(cfg).dump();
}

SweepConfig config_from_json(const std::string& text) {
    return config_from_json_obj(json::parse(text));
}

std::string to_csv(const SweepResult& result) {
    json meta;
    meta["version"] = kVersion;
    meta["prng"] = kPrngName;
    meta["ground_degeneracy"] = result.ground_degeneracy;
    meta["ge_sign_used"] = result.ge_sign_used;
    meta["warnings"] = result.warnings;

    std::ostringstream out;
    out << "# config: " << config_to_json_obj(result.config).dump() << "\n";
    out << "# meta: " << meta.dump() << "\n";
    out << "lambda,kT,quantity,pair,value,flags\n";
    for (const SweepRow& r : result.rows) {
        out << format_sig9(r.lambda) << "," << format_sig9(r.kt) << ","
            << to_string(r.quantity) << ",";
        if (r.i > 0)
            out << r.i << "-" << r.j;
        else
            out << "-";
        out << "," << format_sig9(r.value) << "," << r.flags << "\n";
    }
    return out.str();
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

}  // namespace

SweepResult parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    SweepResult result;

    if (!std::getline(in, line) || line.rfind("# config: ", 0) != 0)
        throw std::invalid_argument("csv: missing '# config:' line");
    result.config = config_from_json(line.substr(10));

    if (!std::getline(in, line) || line.rfind("# meta: ", 0) != 0)
        throw std::invalid_argument("csv: missing '# meta:' line");
    const json meta = json::parse(line.substr(8));
    if (meta.contains("ground_degeneracy"))
        result.ground_degeneracy =
            meta.at("ground_degeneracy").get<std::map<std::string, int>>();
    if (meta.contains("ge_sign_used"))
        result.ge_sign_used = meta.at("ge_sign_used").get<std::map<std::string, bool>>();
    if (meta.contains("warnings"))
        result.warnings = meta.at("warnings").get<std::vector<std::string>>();

    if (!std::getline(in, line) || line != "lambda,kT,quantity,pair,value,flags")
        throw std::invalid_argument("csv: bad header line");

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != 6)
            throw std::invalid_argument("csv: bad row '" + line + "'");
        SweepRow row;
        row.lambda = std::stod(fields[0]);
        row.kt = std::stod(fields[1]);
        row.quantity = quantity_from_string(fields[2]);
        if (fields[3] != "-") {
            const auto dash = fields[3].find('-');
            if (dash == std::string::npos)
                throw std::invalid_argument("csv: bad pair '" + fields[3] + "'");
            row.i = std::stoi(fields[3].substr(0, dash));
            row.j = std::stoi(fields[3].substr(dash + 1));
        }
        row.value = std::stod(fields[4]);
        row.flags = fields[5];
        result.rows.push_back(row);
    }
    return result;
}

void write_csv(const SweepResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << to_csv(result);
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace xyent
