#pragma once

namespace xyent {

// eV-based constants used for the J-unit conversions.
constexpr double kBoltzmannEvPerK = 8.617333e-5;
constexpr double kBohrMagnetonEvPerT = 5.788382e-5;

struct Conversion {
    double kelvin = 0.0;
    double tesla = 0.0;
};

// kT and the field are given in units of J; j_mev is the exchange coupling
// in meV (> 0, throws otherwise). kelvin = kT * J / k_B and
// tesla = field * J / (g mu_B); the default g = 1 reproduces the effective
// convention B = h/mu_B, pass g = 2 for the textbook electron factor.
Conversion convert_units(double kt_in_j, double j_mev, double field_in_j,
                         double g_factor = 1.0);

}  // namespace xyent
