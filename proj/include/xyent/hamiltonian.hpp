#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "xyent/lattice.hpp"

namespace xyent {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

// Full eigendecomposition of a real symmetric Hamiltonian. energies are
// ascending, column k of vectors is the eigenvector of energies[k].
struct Spectrum {
    Vec energies;
    Mat vectors;
    int ground_degeneracy = 1;  // energies within deg_tol of energies[0]
    double deg_tol = 0.0;
};

// H = -[(1+g)/2] sum_edges J_ij sx_i sx_j - [(1-g)/2] sum_edges J_ij sy_i sy_j
//     - lambda sum_i sz_i
// assembled in the sigma^z product basis. Site 1 is the most significant
// qubit: basis index b has site i in state (b >> (n-i)) & 1, and bit value
// 0 is |0> with sz = +1. The sy sy term contributes real entries, so H is
// real symmetric. lambda may be signed here; the LatticeSpec front end
// restricts it to lambda >= 0.
Mat build_xy_hamiltonian(int n_sites, const std::vector<Edge>& edges,
                         double gamma, double lambda);

// 128x128 Hamiltonian for a validated LatticeSpec.
Mat build_hamiltonian(const LatticeSpec& spec);

// Real-symmetric eigendecomposition with a fixed eigenvector convention:
// within a degenerate cluster the solver's vectors are re-orthonormalized
// in index order, and every vector's first nonzero component is made
// positive. deg_tol < 0 selects the default 1e-9 * max(1, |E0|).
// context (e.g. "gamma=1 lambda=0.5 alpha=0") is included in diagnostics.
Spectrum diagonalize(const Mat& h, double deg_tol = -1.0,
                     const std::string& context = {});

}  // namespace xyent
