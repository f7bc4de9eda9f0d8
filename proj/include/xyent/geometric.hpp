#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "xyent/hamiltonian.hpp"

namespace xyent {

// Real product-state ansatz: site i carries amplitudes
// (P_i, sqrt(1 - P_i^2)) on (|0>, |1>) with azimuthal phase zero.
// The stored P_i are magnitudes in [0,1]; sign_mask records sites whose
// first amplitude is negative. The signed extension strictly contains the
// non-negative ansatz (it absorbs relative signs a real eigenvector may
// require), so any G found here lower-bounds the restricted-search value.
struct ProductParams {
    int n_sites = 7;
    std::array<double, 7> p{};
    unsigned sign_mask = 0;

    double amp0(int site) const;  // signed first amplitude
    double amp1(int site) const;  // sqrt(1 - p^2) >= 0
};

struct GESearchConfig {
    std::int64_t samples = 200000;  // uniform draws of (P_1..P_7) in [0,1]^7
    int refine_iters = 200;         // alternating sweeps on the best draws
    int refine_top = 16;            // number of draws refined
    std::uint64_t seed = 1;
    double conv_tol = 1e-12;        // overlap gain per sweep to stop
};

struct GEResult {
    double g = 0.0;             // 1 - best_overlap^2
    double best_overlap = 0.0;  // Lambda, the largest |<psi|phi>| found
    ProductParams best;
    bool sign_used = false;     // a negative amplitude was needed
};

// |<psi|phi(params)>| by successive tensor contraction. psi must be
// normalized to 1e-10 and have length 2^n_sites.
double overlap(const Vec& psi, const ProductParams& params);

// Seeded uniform sampling over [0,1]^n plus deterministic alternating
// single-site refinement of the refine_top best draws. Each closed-form
// update replaces one site by the normalized contraction of psi against
// the remaining sites and never decreases the overlap. Deterministic for
// a fixed seed, independent of the thread count. Returns the best product
// state found, so g is an upper-bound estimate of the true G.
GEResult geometric_entanglement(const Vec& psi, const GESearchConfig& cfg,
                                int threads = 1);

// Counter-based PRNG stream: value k of the stream for `seed` is
// splitmix64(seed, k). Extending the sample count keeps earlier draws.
std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t counter);
double unit_double(std::uint64_t bits);  // [0,1)

constexpr const char* kPrngName = "splitmix64";

}  // namespace xyent
