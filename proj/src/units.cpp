#include "xyent/units.hpp"

#include <stdexcept>
#include <string>

namespace xyent {

Conversion convert_units(double kt_in_j, double j_mev, double field_in_j,
                         double g_factor) {
    if (!(j_mev > 0.0))
        throw std::invalid_argument("exchange coupling J must be positive, got " +
                                    std::to_string(j_mev) + " meV");
    if (!(g_factor > 0.0))
        throw std::invalid_argument("g-factor must be positive");
    const double j_ev = j_mev * 1e-3;
    Conversion out;
    out.kelvin = kt_in_j * j_ev / kBoltzmannEvPerK;
    out.tesla = field_in_j * j_ev / (g_factor * kBohrMagnetonEvPerT);
    return out;
}

}  // namespace xyent
