#pragma once

#include "xyent/hamiltonian.hpp"

namespace xyent {

// Boltzmann weights over a Spectrum. The partition sum is stored in the
// ground-shifted form Ztilde = sum_k exp(-(E_k - E0)/kT) = Z exp(E0/kT),
// which never overflows for E0 < 0 at small kT. At kT = 0 the weights are
// uniform over the degenerate ground states and zshift equals g0.
struct ThermalEnsemble {
    double kt = 0.0;
    Vec weights;
    double zshift = 1.0;
};

// Throws on kt < 0. All 127 excited states are always included.
ThermalEnsemble make_ensemble(const Spectrum& spec, double kt);

// Ztilde(kT) without building the full ensemble.
double shifted_partition(const Spectrum& spec, double kt);

// rho_T = sum_k w_k v_k v_k^T (real symmetric, trace 1, PSD).
Mat thermal_density_matrix(const Spectrum& spec, const ThermalEnsemble& ens);

double mean_energy(const Spectrum& spec, const ThermalEnsemble& ens);

// Delta E_th = <E> - E0, zero at kT = 0.
double thermal_energy_gap(const Spectrum& spec, const ThermalEnsemble& ens);

}  // namespace xyent
