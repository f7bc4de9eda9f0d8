#include "xyent/thermal.hpp"

#include <cmath>
#include <stdexcept>

namespace xyent {

ThermalEnsemble make_ensemble(const Spectrum& spec, double kt) {
    if (!(kt >= 0.0))
        throw std::invalid_argument("temperature kT must be >= 0, got " +
                                    std::to_string(kt));
    const int n = static_cast<int>(spec.energies.size());
    ThermalEnsemble ens;
    ens.kt = kt;
    ens.weights = Vec::Zero(n);
    if (kt == 0.0) {
        const int g0 = spec.ground_degeneracy;
        for (int k = 0; k < g0; ++k) ens.weights[k] = 1.0 / g0;
        ens.zshift = static_cast<double>(g0);
        return ens;
    }
    const double e0 = spec.energies[0];
    double z = 0.0;
    for (int k = 0; k < n; ++k) {
        ens.weights[k] = std::exp(-(spec.energies[k] - e0) / kt);
        z += ens.weights[k];
    }
    ens.weights /= z;
    ens.zshift = z;
    return ens;
}

double shifted_partition(const Spectrum& spec, double kt) {
    if (!(kt >= 0.0)) throw std::invalid_argument("kT must be >= 0");
    if (kt == 0.0) return static_cast<double>(spec.ground_degeneracy);
    const double e0 = spec.energies[0];
    double z = 0.0;
    for (int k = 0; k < spec.energies.size(); ++k)
        z += std::exp(-(spec.energies[k] - e0) / kt);
    return z;
}

Mat thermal_density_matrix(const Spectrum& spec, const ThermalEnsemble& ens) {
    return spec.vectors * ens.weights.asDiagonal() * spec.vectors.transpose();
}

double mean_energy(const Spectrum& spec, const ThermalEnsemble& ens) {
    return ens.weights.dot(spec.energies);
}

double thermal_energy_gap(const Spectrum& spec, const ThermalEnsemble& ens) {
    if (ens.kt == 0.0) return 0.0;
    const double gap = mean_energy(spec, ens) - spec.energies[0];
    return gap < 0.0 ? 0.0 : gap;
}

}  // namespace xyent
