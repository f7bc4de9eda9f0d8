#include "xyent/hamiltonian.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace xyent {

Mat build_xy_hamiltonian(int n_sites, const std::vector<Edge>& edges,
                         double gamma, double lambda) {
    if (n_sites < 1 || n_sites > 7)
        throw std::invalid_argument("n_sites must be in 1..7");
    const int dim = 1 << n_sites;
    Mat h = Mat::Zero(dim, dim);

    // Field part: -lambda sum_i sz_i, diagonal in the product basis.
    for (int b = 0; b < dim; ++b) {
        int ups = n_sites - __builtin_popcount(static_cast<unsigned>(b));
        h(b, b) = -lambda * (2 * ups - n_sites);
    }

    // Coupling part. An edge (i,j) connects b with both bits flipped; the
    // sx sx string contributes -J(1+g)/2 and the sy sy string
    // -J(1-g)/2 * (-1 if the two bits agree else +1), i.e. -Jg between
    // aligned pairs and -J between anti-aligned ones.
    for (const auto& e : edges) {
        if (e.i < 1 || e.i > n_sites || e.j < 1 || e.j > n_sites || e.i == e.j)
            throw std::invalid_argument("edge site out of range");
        const int pi = n_sites - e.i;
        const int pj = n_sites - e.j;
        const int mask = (1 << pi) | (1 << pj);
        const double aligned = -e.coupling * gamma;
        const double anti = -e.coupling;
        for (int b = 0; b < dim; ++b) {
            const int si = (b >> pi) & 1;
            const int sj = (b >> pj) & 1;
            h(b ^ mask, b) += (si == sj) ? aligned : anti;
        }
    }
    return h;
}

Mat build_hamiltonian(const LatticeSpec& spec) {
    validate(spec);
    return build_xy_hamiltonian(kNumSites, build_edges(spec.kind, spec.alpha),
                                spec.gamma, spec.lambda);
}

namespace {

void check_symmetric(const Mat& h, const std::string& context) {
    const double asym = (h - h.transpose()).cwiseAbs().maxCoeff();
    if (!(asym <= 1e-12) || !h.allFinite()) {
        std::ostringstream msg;
        msg << "diagonalize: matrix not symmetric/finite (max asymmetry " << asym << ")";
        if (!context.empty()) msg << " at " << context;
        throw std::invalid_argument(msg.str());
    }
}

// Modified Gram-Schmidt over a cluster of degenerate columns, in index
// order, then a sign fix: the first component above 1e-10 is made positive.
void canonicalize_cluster(Mat& v, int first, int last) {
    for (int k = first; k <= last; ++k) {
        for (int m = first; m < k; ++m) {
            const double proj = v.col(m).dot(v.col(k));
            v.col(k) -= proj * v.col(m);
        }
        v.col(k).normalize();
    }
}

void fix_signs(Mat& v) {
    for (int k = 0; k < v.cols(); ++k) {
        for (int r = 0; r < v.rows(); ++r) {
            if (std::abs(v(r, k)) > 1e-10) {
                if (v(r, k) < 0.0) v.col(k) = -v.col(k);
                break;
            }
        }
    }
}

}  // namespace

Spectrum diagonalize(const Mat& h, double deg_tol, const std::string& context) {
    check_symmetric(h, context);
    Eigen::SelfAdjointEigenSolver<Mat> solver(h);
    if (solver.info() != Eigen::Success) {
        std::ostringstream msg;
        msg << "diagonalize: eigensolver failed to converge";
        if (!context.empty()) msg << " at " << context;
        throw std::runtime_error(msg.str());
    }

    Spectrum spec;
    spec.energies = solver.eigenvalues();
    spec.vectors = solver.eigenvectors();
    const int n = static_cast<int>(spec.energies.size());

    if (deg_tol < 0.0) deg_tol = 1e-9 * std::max(1.0, std::abs(spec.energies[0]));
    spec.deg_tol = deg_tol;

    // Deterministic convention inside degenerate clusters (chained gaps).
    int start = 0;
    for (int k = 1; k <= n; ++k) {
        if (k == n || spec.energies[k] - spec.energies[k - 1] > deg_tol) {
            if (k - 1 > start) canonicalize_cluster(spec.vectors, start, k - 1);
            start = k;
        }
    }
    fix_signs(spec.vectors);

    spec.ground_degeneracy = 1;
    while (spec.ground_degeneracy < n &&
           spec.energies[spec.ground_degeneracy] - spec.energies[0] <= deg_tol)
        ++spec.ground_degeneracy;

    // Spectrum invariants: orthonormality and eigen-residuals.
    const double ortho =
        (spec.vectors.transpose() * spec.vectors - Mat::Identity(n, n)).cwiseAbs().maxCoeff();
    if (!(ortho <= 1e-10)) {
        std::ostringstream msg;
        msg << "diagonalize: eigenvectors not orthonormal (defect " << ortho << ")";
        if (!context.empty()) msg << " at " << context;
        throw std::runtime_error(msg.str());
    }
    const Mat residual = h * spec.vectors - spec.vectors * spec.energies.asDiagonal();
    for (int k = 0; k < n; ++k) {
        const double res = residual.col(k).cwiseAbs().maxCoeff();
        const double bound = 1e-9 * std::max(1.0, std::abs(spec.energies[k]));
        if (!(res <= bound)) {
            std::ostringstream msg;
            msg << "diagonalize: residual " << res << " exceeds " << bound
                << " for level " << k;
            if (!context.empty()) msg << " at " << context;
            throw std::runtime_error(msg.str());
        }
    }
    return spec;
}

}  // namespace xyent
