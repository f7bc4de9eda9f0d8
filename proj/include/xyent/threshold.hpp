#pragma once

#include <limits>

#include "xyent/bipartite.hpp"

namespace xyent {

enum class ThresholdKind { PairEF, Multipartite };

struct ThresholdResult {
    ThresholdKind kind = ThresholdKind::PairEF;
    int i = 0;  // pair sites for PairEF, 0 otherwise
    int j = 0;
    double lambda = std::numeric_limits<double>::quiet_NaN();
    double t_th = 0.0;    // in units of J
    double bracket = 0.0; // final bisection interval width
    bool never_entangled = false;
    bool entangled_beyond_scan = false;
};

struct ThresholdScan {
    double scan_max = 50.0;  // kT upper bound, units of J
    int scan_points = 64;    // geometric scan resolution
    double kt_min = 1e-3;    // smallest positive scan point
    double tol = 1e-6;       // bisection tolerance
};

// T_th = sup{ kT in [0, scan_max] : C_ij(kT) > 1e-9 }. A geometric scan
// brackets the last crossing of C - 1e-9, then bisection refines it to
// tol. If no scanned point (including kT = 0) is entangled the result is
// flagged never_entangled with t_th = 0; if C > 1e-9 at scan_max it is
// flagged entangled_beyond_scan with t_th = scan_max.
ThresholdResult threshold_pair(const Spectrum& spec, int i, int j,
                               const ThresholdScan& scan = {},
                               double lambda = std::numeric_limits<double>::quiet_NaN());

// Guaranteed-entanglement bound: solves Ztilde(kT) = 2^G for kT, the
// shifted form of e^{-E0/kT}/Z = 2^{-G}. Ztilde grows monotonically from
// the ground degeneracy g0 to the Hilbert space dimension, so if
// 2^G <= g0 the bound yields no temperature (never_entangled, t_th = 0).
// Throws unless 0 <= G < 1. On success the residual satisfies
// |Ztilde(t_th) - 2^G| <= tol * 2^G.
ThresholdResult threshold_multipartite(const Spectrum& spec, double g,
                                       double tol = 1e-6,
                                       double lambda = std::numeric_limits<double>::quiet_NaN());

}  // namespace xyent
