#include "xyent/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xyent {

namespace {

// Basis-index table for pair (i,j): idx[p][r] is the full 7-site index
// with pair state p = (a<<1)|b on sites (i,j) and rest configuration r on
// the remaining five sites (ascending site order).
struct PairIndex {
    int idx[4][32];

    PairIndex(int i, int j) {
        const int pi = kNumSites - i;
        const int pj = kNumSites - j;
        int rest_pos[5];
        int nrest = 0;
        for (int s = 1; s <= kNumSites; ++s)
            if (s != i && s != j) rest_pos[nrest++] = kNumSites - s;
        for (int r = 0; r < 32; ++r) {
            int base = 0;
            for (int t = 0; t < 5; ++t)
                if ((r >> t) & 1) base |= 1 << rest_pos[t];
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    idx[(a << 1) | b][r] = base | (a << pi) | (b << pj);
        }
    }
};

void check_pair(int i, int j) {
    if (i == j) throw std::invalid_argument("pair sites must differ");
    if (i < 1 || i > kNumSites || j < 1 || j > kNumSites)
        throw std::invalid_argument("pair sites must be in 1..7");
}

void accumulate_state(const PairIndex& table, const double* psi, double w,
                      Eigen::Matrix4d& rho) {
    for (int r = 0; r < 32; ++r) {
        double v[4];
        for (int p = 0; p < 4; ++p) v[p] = psi[table.idx[p][r]];
        for (int p = 0; p < 4; ++p)
            for (int q = 0; q < 4; ++q) rho(p, q) += w * v[p] * v[q];
    }
}

}  // namespace

PairDensity partial_trace_pair(const Spectrum& spec, const ThermalEnsemble& ens,
                               int i, int j) {
    check_pair(i, j);
    if (i > j) std::swap(i, j);
    if (spec.vectors.rows() != 128)
        throw std::invalid_argument("partial_trace_pair expects a 7-site spectrum");
    const PairIndex table(i, j);
    PairDensity pd;
    pd.i = i;
    pd.j = j;
    pd.kt = ens.kt;
    pd.rho.setZero();
    for (int k = 0; k < spec.energies.size(); ++k) {
        const double w = ens.weights[k];
        if (w == 0.0) continue;
        accumulate_state(table, spec.vectors.col(k).data(), w, pd.rho);
    }
    return pd;
}

PairDensity pair_density_from_state(const Vec& psi, int i, int j) {
    check_pair(i, j);
    if (i > j) std::swap(i, j);
    if (psi.size() != 128)
        throw std::invalid_argument("pair_density_from_state expects a 128-vector");
    const PairIndex table(i, j);
    PairDensity pd;
    pd.i = i;
    pd.j = j;
    pd.rho.setZero();
    accumulate_state(table, psi.data(), 1.0, pd.rho);
    return pd;
}

Eigen::Matrix4d spin_flip(const Eigen::Matrix4d& rho) {
    static const double sign[4] = {1.0, -1.0, -1.0, 1.0};
    Eigen::Matrix4d out;
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
            out(p, q) = sign[p] * sign[q] * rho(3 - p, 3 - q);
    return out;
}

Eigen::Matrix4d psd_sqrt(const Eigen::Matrix4d& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(m);
    Eigen::Vector4d ev = solver.eigenvalues();
    for (int k = 0; k < 4; ++k) {
        if (ev[k] < -1e-10)
            throw std::runtime_error("psd_sqrt: eigenvalue " + std::to_string(ev[k]) +
                                     " below -1e-10, input not PSD");
        ev[k] = ev[k] > 0.0 ? std::sqrt(ev[k]) : 0.0;
    }
    return solver.eigenvectors() * ev.asDiagonal() * solver.eigenvectors().transpose();
}

double concurrence(const Eigen::Matrix4d& rho) {
    const Eigen::Matrix4d root = psd_sqrt(rho);
    const Eigen::Matrix4d m = root * spin_flip(rho) * root;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(m);
    Eigen::Vector4d ev = solver.eigenvalues();  // ascending
    double eps[4];
    for (int k = 0; k < 4; ++k) {
        const double v = ev[3 - k];
        if (v < -1e-10)
            throw std::runtime_error("concurrence: negative eigenvalue " +
                                     std::to_string(v) + " of sqrt(rho) rho~ sqrt(rho)");
        eps[k] = v > 0.0 ? std::sqrt(v) : 0.0;
    }
    const double c = eps[0] - eps[1] - eps[2] - eps[3];
    return std::clamp(c, 0.0, 1.0);
}

double concurrence(const PairDensity& pd) { return concurrence(pd.rho); }

double eof(double c) {
    if (!(c >= -1e-12 && c <= 1.0 + 1e-12))
        throw std::invalid_argument("concurrence out of [0,1]: " + std::to_string(c));
    c = std::clamp(c, 0.0, 1.0);
    const double x = (1.0 - std::sqrt(std::max(0.0, 1.0 - c * c))) / 2.0;
    auto hterm = [](double t) { return t > 0.0 ? -t * std::log2(t) : 0.0; };
    return hterm(x) + hterm(1.0 - x);
}

double pair_eof(const Spectrum& spec, const ThermalEnsemble& ens, int i, int j) {
    return eof(concurrence(partial_trace_pair(spec, ens, i, j)));
}

}  // namespace xyent
