#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "xyent/hamiltonian.hpp"

namespace xyent::oracles {

// Brute-force references kept deliberately independent of the library
// code they check: hand-written small Hamiltonians, an index-loop partial
// trace and a dense grid search for the geometric entanglement. They ship
// with the library so the frozen test constants can be re-derived on any
// platform via the `oracle` CLI subcommand.

struct OracleReport {
    std::string name;
    double max_abs_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

// Eigenvalues (ascending) of the explicit one-edge 4x4 matrix
// [[-2l,0,0,-g],[0,0,-1,0],[0,-1,0,0],[-g,0,0,2l]]: {+-1, +-sqrt(4l^2+g^2)}.
std::array<double, 4> oracle_two_spin_spectrum(double gamma, double lambda);

// Eigenvalues (ascending) of the hand-written 8x8 open-chain matrix.
std::array<double, 8> oracle_three_spin_spectrum(double gamma, double lambda);

// Literal index-loop partial trace of a full 128x128 density matrix onto
// sites (i,j) of a 7-site register.
Eigen::Matrix4d oracle_partial_trace(const Mat& rho_full, int i, int j);

// Exhaustive grid over the non-negative product ansatz [0,1]^n for a
// state of up to 3 qubits; resolution is the grid step (<= 1e-2).
double oracle_ge_grid(const Vec& psi, double resolution);

// Cross-checks of the library against the oracles: two- and three-spin
// spectra, partial trace on random thermal states, Werner concurrence,
// GHZ3/W3 geometric entanglement and thermal-state invariants on a
// (lambda, kT) grid.
std::vector<OracleReport> run_oracle_suite(std::uint64_t seed = 12345,
                                           double ge_resolution = 1e-3);

std::string reports_to_csv(const std::vector<OracleReport>& reports);

}  // namespace xyent::oracles
