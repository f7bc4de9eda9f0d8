#pragma once

#include "xyent/thermal.hpp"

namespace xyent {

// Two-site reduced density matrix in the basis |00>,|01>,|10>,|11> of
// sites (i,j), i < j. Trace 1 and PSD up to 1e-12 round-off.
struct PairDensity {
    int i = 1;
    int j = 2;
    Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
    double kt = 0.0;
};

// rho_ij = sum_k w_k Tr_rest |psi_k><psi_k|, accumulated per eigenstate
// without materializing the full 128x128 rho_T. Accepts sites in either
// order (the result is stored for (min,max)); throws on i == j.
PairDensity partial_trace_pair(const Spectrum& spec, const ThermalEnsemble& ens,
                               int i, int j);

// Pure-state convenience: reduced density of a normalized 128-vector.
PairDensity pair_density_from_state(const Vec& psi, int i, int j);

// rho~ = (sy (x) sy) rho* (sy (x) sy) for real rho: entrywise
// rho~[p,q] = s_p s_q rho[3-p,3-q] with s = (+1,-1,-1,+1).
Eigen::Matrix4d spin_flip(const Eigen::Matrix4d& rho);

// Spectral square root; eigenvalues below -1e-10 raise an invariant
// violation, small negatives are clamped to zero.
Eigen::Matrix4d psd_sqrt(const Eigen::Matrix4d& m);

// Wootters concurrence from the spectrum of M = sqrt(rho) rho~ sqrt(rho)
// (same spectrum as the paper's R = sqrt(M); using the symmetric product
// keeps everything inside the real-symmetric eigensolver). Result in [0,1].
double concurrence(const Eigen::Matrix4d& rho);
double concurrence(const PairDensity& pd);

// Entanglement of formation EF = h((1 - sqrt(1-C^2))/2), h the binary
// entropy in bits, with h(0) = h(1) = 0.
double eof(double c);

// EF of the thermal pair (i,j): partial trace + concurrence + eof.
double pair_eof(const Spectrum& spec, const ThermalEnsemble& ens, int i, int j);

// Concurrence below this counts as "entanglement vanished" for threshold
// zero-crossing logic.
constexpr double kConcurrenceZero = 1e-9;

}  // namespace xyent
