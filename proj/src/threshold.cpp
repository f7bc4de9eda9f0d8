#include "xyent/threshold.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace xyent {

namespace {

double pair_concurrence_at(const Spectrum& spec, int i, int j, double kt) {
    return concurrence(partial_trace_pair(spec, make_ensemble(spec, kt), i, j));
}

}  // namespace

ThresholdResult threshold_pair(const Spectrum& spec, int i, int j,
                               const ThresholdScan& scan, double lambda) {
    if (!(scan.scan_max > 0.0) || scan.scan_points < 2 ||
        !(scan.kt_min > 0.0 && scan.kt_min < scan.scan_max) || !(scan.tol > 0.0))
        throw std::invalid_argument("threshold_pair: bad scan parameters");

    ThresholdResult res;
    res.kind = ThresholdKind::PairEF;
    res.i = std::min(i, j);
    res.j = std::max(i, j);
    res.lambda = lambda;

    // Scan grid: kT = 0 plus geometric points up to scan_max.
    std::vector<double> grid;
    grid.push_back(0.0);
    const double ratio = std::pow(scan.scan_max / scan.kt_min,
                                  1.0 / (scan.scan_points - 1));
    for (int k = 0; k < scan.scan_points; ++k)
        grid.push_back(scan.kt_min * std::pow(ratio, k));
    grid.back() = scan.scan_max;

    std::vector<bool> entangled(grid.size());
    bool any = false;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        entangled[k] = pair_concurrence_at(spec, res.i, res.j, grid[k]) > kConcurrenceZero;
        any = any || entangled[k];
    }

    if (!any) {
        res.never_entangled = true;
        res.t_th = 0.0;
        res.bracket = 0.0;
        return res;
    }
    if (entangled.back()) {
        res.entangled_beyond_scan = true;
        res.t_th = scan.scan_max;
        res.bracket = scan.scan_max;
        return res;
    }

    // Last entangled scan point brackets the final crossing.
    std::size_t last = 0;
    for (std::size_t k = 0; k < grid.size(); ++k)
        if (entangled[k]) last = k;
    double lo = grid[last];
    double hi = grid[last + 1];
    for (int it = 0; it < 200 && hi - lo > scan.tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (pair_concurrence_at(spec, res.i, res.j, mid) > kConcurrenceZero)
            lo = mid;
        else
            hi = mid;
    }
    res.t_th = 0.5 * (lo + hi);
    res.bracket = hi - lo;
    return res;
}

ThresholdResult threshold_multipartite(const Spectrum& spec, double g, double tol,
                                       double lambda) {
    if (!(g >= 0.0 && g < 1.0))
        throw std::invalid_argument("geometric entanglement must be in [0,1), got " +
                                    std::to_string(g));
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

    ThresholdResult res;
    res.kind = ThresholdKind::Multipartite;
    res.lambda = lambda;

    const double target = std::exp2(g);
    if (target <= spec.ground_degeneracy) {
        // Ztilde starts at g0 already; the bound yields no temperature.
        res.never_entangled = true;
        res.t_th = 0.0;
        res.bracket = 0.0;
        return res;
    }

    double lo = 0.0;
    double hi = 1.0;
    while (shifted_partition(spec, hi) < target) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e12)
            throw std::runtime_error("threshold_multipartite: no bracket below kT=1e12");
    }
    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < 300; ++it) {
        mid = 0.5 * (lo + hi);
        const double z = shifted_partition(spec, mid);
        if (std::abs(z - target) <= tol * target && hi - lo <= std::max(tol, 1e-12 * mid))
            break;
        if (z < target)
            lo = mid;
        else
            hi = mid;
    }
    res.t_th = mid;
    res.bracket = hi - lo;
    return res;
}

}  // namespace xyent
