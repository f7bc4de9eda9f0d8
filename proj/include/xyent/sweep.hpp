#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xyent/geometric.hpp"
#include "xyent/threshold.hpp"

namespace xyent {

enum class Quantity { EF, GE, DeltaE, TthPair, TthMe };

const char* to_string(Quantity q);
Quantity quantity_from_string(const std::string& name);

struct GridSpec {
    double min = 0.0;
    double max = 0.0;
    int steps = 1;          // number of points, endpoints included
    bool geometric = false; // geometric spacing needs min > 0

    std::vector<double> points() const;
};

// Declarative sweep over (lambda, kT). Quantities EF and DELTA_E are
// evaluated on the full grid; GE, TTH_PAIR and TTH_ME are zero-temperature
// quantities computed once per lambda. A missing kt_grid means kT = 0.
struct SweepConfig {
    LatticeKind lattice = LatticeKind::Star7;
    double gamma = 1.0;
    double alpha = 0.0;
    GridSpec lambda_grid;
    std::optional<GridSpec> kt_grid;
    std::vector<std::pair<int, int>> pairs;
    std::vector<Quantity> quantities;
    GESearchConfig ge;
    ThresholdScan tth;
    std::uint64_t seed = 1;
    std::string out_path;

    // Execution knobs; they never change the produced rows and are not
    // echoed into the CSV. threads = 0 picks XYENT_THREADS or the hardware
    // count. reuse_spectra = false re-diagonalizes per grid point.
    int threads = 0;
    bool reuse_spectra = true;
};

struct SweepRow {
    double lambda = 0.0;
    double kt = 0.0;
    Quantity quantity = Quantity::EF;
    int i = 0;  // pair, 0-0 for pairless quantities
    int j = 0;
    double value = 0.0;
    std::string flags;
};

struct SweepResult {
    SweepConfig config;
    std::vector<SweepRow> rows;  // sorted by (quantity, pair, lambda, kT)
    std::map<std::string, int> ground_degeneracy;  // per formatted lambda
    std::map<std::string, bool> ge_sign_used;      // per formatted lambda
    std::vector<std::string> warnings;
};

// Validates the config (one aggregated report on failure), diagonalizes
// once per lambda and evaluates every requested quantity.
SweepResult run_sweep(const SweepConfig& cfg);

// Same engine, but requires quantities to include TTH_PAIR or TTH_ME.
SweepResult run_threshold_curve(const SweepConfig& cfg);

// CSV I/O. Two '#' metadata lines (config echo and run metadata as JSON),
// a header line, then rows with 9-significant-digit values, LF endings.
// Output is byte-identical for identical (config, seed, version) and
// parse_csv(to_csv(r)) reproduces the result exactly.
std::string to_csv(const SweepResult& result);
SweepResult parse_csv(const std::string& text);
void write_csv(const SweepResult& result, const std::string& path);

// Locale-independent formatting with 9 significant digits.
std::string format_sig9(double v);

std::string config_to_json(const SweepConfig& cfg);
SweepConfig config_from_json(const std::string& text);

}  // namespace xyent
