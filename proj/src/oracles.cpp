#include "xyent/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "xyent/bipartite.hpp"
#include "xyent/geometric.hpp"
#include "xyent/thermal.hpp"

namespace xyent::oracles {

std::array<double, 4> oracle_two_spin_spectrum(double gamma, double lambda) {
    // Closed form of [[-2l,0,0,-g],[0,0,-1,0],[0,-1,0,0],[-g,0,0,2l]].
    const double big = std::sqrt(4.0 * lambda * lambda + gamma * gamma);
    std::array<double, 4> e{-big, -1.0, 1.0, big};
    std::sort(e.begin(), e.end());
    return e;
}

std::array<double, 8> oracle_three_spin_spectrum(double gamma, double lambda) {
    // Open 3-site chain, edges (1,2) and (2,3), written out entry by entry
    // in the basis |s1 s2 s3> with site 1 the most significant bit.
    Eigen::Matrix<double, 8, 8> h = Eigen::Matrix<double, 8, 8>::Zero();
    h(0, 0) = -3.0 * lambda;
    h(1, 1) = -lambda;
    h(2, 2) = -lambda;
    h(3, 3) = lambda;
    h(4, 4) = -lambda;
    h(5, 5) = lambda;
    h(6, 6) = lambda;
    h(7, 7) = 3.0 * lambda;
    // edge (1,2): flips the two upper bits
    h(0, 6) = h(6, 0) = -gamma;
    h(1, 7) = h(7, 1) = -gamma;
    h(2, 4) = h(4, 2) = -1.0;
    h(3, 5) = h(5, 3) = -1.0;
    // edge (2,3): flips the two lower bits
    h(0, 3) = h(3, 0) = -gamma;
    h(1, 2) = h(2, 1) = -1.0;
    h(4, 7) = h(7, 4) = -gamma;
    h(5, 6) = h(6, 5) = -1.0;

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 8, 8>> solver(h);
    std::array<double, 8> out{};
    for (int k = 0; k < 8; ++k) out[k] = solver.eigenvalues()[k];
    return out;
}

Eigen::Matrix4d oracle_partial_trace(const Mat& rho_full, int i, int j) {
    if (rho_full.rows() != 128 || rho_full.cols() != 128)
        throw std::invalid_argument("oracle_partial_trace expects 128x128");
    if (i == j || i < 1 || i > 7 || j < 1 || j > 7)
        throw std::invalid_argument("bad pair");
    if (i > j) std::swap(i, j);

    int rest_sites[5];
    int nrest = 0;
    for (int s = 1; s <= 7; ++s)
        if (s != i && s != j) rest_sites[nrest++] = s;

    Eigen::Matrix4d out = Eigen::Matrix4d::Zero();
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int ap = 0; ap < 2; ++ap)
                for (int bp = 0; bp < 2; ++bp) {
                    double sum = 0.0;
                    for (int s1 = 0; s1 < 2; ++s1)
                        for (int s2 = 0; s2 < 2; ++s2)
                            for (int s3 = 0; s3 < 2; ++s3)
                                for (int s4 = 0; s4 < 2; ++s4)
                                    for (int s5 = 0; s5 < 2; ++s5) {
                                        const int rest[5] = {s1, s2, s3, s4, s5};
                                        int row = (a << (7 - i)) | (b << (7 - j));
                                        int col = (ap << (7 - i)) | (bp << (7 - j));
                                        for (int t = 0; t < 5; ++t) {
                                            row |= rest[t] << (7 - rest_sites[t]);
                                            col |= rest[t] << (7 - rest_sites[t]);
                                        }
                                        sum += rho_full(row, col);
                                    }
                    out((a << 1) | b, (ap << 1) | bp) = sum;
                }
    return out;
}

double oracle_ge_grid(const Vec& psi, double resolution) {
    if (!(resolution > 0.0 && resolution <= 1e-2))
        throw std::invalid_argument("grid resolution must be in (0, 1e-2]");
    const auto dim = psi.size();
    int n = 0;
    for (int k = 1; k <= 3; ++k)
        if ((Eigen::Index{1} << k) == dim) n = k;
    if (n == 0) throw std::invalid_argument("grid oracle handles up to 3 qubits");

    const int steps = static_cast<int>(std::round(1.0 / resolution));
    std::vector<double> c0(steps + 1), c1(steps + 1);
    for (int k = 0; k <= steps; ++k) {
        const double p = std::min(1.0, k * resolution);
        c0[k] = p;
        c1[k] = std::sqrt(std::max(0.0, 1.0 - p * p));
    }

    double best = 0.0;
    if (n == 1) {
        for (int k = 0; k <= steps; ++k)
            best = std::max(best, std::abs(psi[0] * c0[k] + psi[1] * c1[k]));
    } else if (n == 2) {
        for (int k1 = 0; k1 <= steps; ++k1) {
            const double w0 = psi[0] * c0[k1] + psi[2] * c1[k1];
            const double w1 = psi[1] * c0[k1] + psi[3] * c1[k1];
            for (int k2 = 0; k2 <= steps; ++k2)
                best = std::max(best, std::abs(w0 * c0[k2] + w1 * c1[k2]));
        }
    } else {
        for (int k1 = 0; k1 <= steps; ++k1) {
            double q[4];
            for (int t = 0; t < 4; ++t) q[t] = psi[t] * c0[k1] + psi[4 + t] * c1[k1];
            for (int k2 = 0; k2 <= steps; ++k2) {
                const double w0 = q[0] * c0[k2] + q[2] * c1[k2];
                const double w1 = q[1] * c0[k2] + q[3] * c1[k2];
                for (int k3 = 0; k3 <= steps; ++k3)
                    best = std::max(best, std::abs(w0 * c0[k3] + w1 * c1[k3]));
            }
        }
    }
    return 1.0 - best * best;
}

namespace {

OracleReport make_report(const std::string& name, double err, double tol) {
    return {name, err, tol, err <= tol};
}

Vec random_unit_vector(std::uint64_t seed, std::uint64_t stream, int dim) {
    Vec v(dim);
    for (int k = 0; k < dim; ++k) {
        // Box-Muller over two counter-based uniforms.
        const double u1 =
            std::max(1e-12, unit_double(splitmix64(seed, stream * 4096 + 2 * k)));
        const double u2 = unit_double(splitmix64(seed, stream * 4096 + 2 * k + 1));
        v[k] = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }
    v.normalize();
    return v;
}

OracleReport check_two_spin(const std::vector<double>& gammas,
                            const std::vector<double>& lambdas) {
    double err = 0.0;
    for (double g : gammas)
        for (double l : lambdas) {
            const Mat h = build_xy_hamiltonian(2, {{1, 2, 1.0}}, g, l);
            const Spectrum s = diagonalize(h);
            const auto ref = oracle_two_spin_spectrum(g, l);
            for (int k = 0; k < 4; ++k)
                err = std::max(err, std::abs(s.energies[k] - ref[k]));
        }
    return make_report("two_spin_closed_form", err, 1e-10);
}

OracleReport check_three_spin(const std::vector<double>& gammas,
                              const std::vector<double>& lambdas) {
    double err = 0.0;
    for (double g : gammas)
        for (double l : lambdas) {
            const Mat h = build_xy_hamiltonian(3, {{1, 2, 1.0}, {2, 3, 1.0}}, g, l);
            const Spectrum s = diagonalize(h);
            const auto ref = oracle_three_spin_spectrum(g, l);
            for (int k = 0; k < 8; ++k)
                err = std::max(err, std::abs(s.energies[k] - ref[k]));
        }
    return make_report("three_spin_hand_matrix", err, 1e-10);
}

OracleReport check_partial_trace(std::uint64_t seed) {
    double err = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        // Random symmetric Hamiltonian -> random thermal state.
        Mat a(128, 128);
        for (int r = 0; r < 128; ++r)
            a.col(r) = random_unit_vector(seed, 200 + trial * 130 + r, 128);
        const Mat h = 0.5 * (a + a.transpose());
        const Spectrum s = diagonalize(h);
        const std::uint64_t base = (1ull << 40) + 8ull * trial;
        const double kt = 0.1 + 5.0 * unit_double(splitmix64(seed, base));
        const ThermalEnsemble ens = make_ensemble(s, kt);
        const Mat rho = thermal_density_matrix(s, ens);

        const int i =
            1 + static_cast<int>(unit_double(splitmix64(seed, base + 1)) * 7) % 7;
        int j = 1 + static_cast<int>(unit_double(splitmix64(seed, base + 2)) * 7) % 7;
        if (j == i) j = (i % 7) + 1;

        const Eigen::Matrix4d direct = partial_trace_pair(s, ens, i, j).rho;
        const Eigen::Matrix4d ref = oracle_partial_trace(rho, i, j);
        err = std::max(err, (direct - ref).cwiseAbs().maxCoeff());
    }
    return make_report("partial_trace_random", err, 1e-12);
}

OracleReport check_werner() {
    Eigen::Matrix4d bell = Eigen::Matrix4d::Zero();
    bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
    double err = 0.0;
    for (int k = 0; k <= 5; ++k) {
        const double p = 0.2 * k;
        const Eigen::Matrix4d rho =
            p * bell + (1.0 - p) * 0.25 * Eigen::Matrix4d::Identity();
        const double expected = std::max(0.0, (3.0 * p - 1.0) / 2.0);
        err = std::max(err, std::abs(concurrence(rho) - expected));
    }
    return make_report("werner_concurrence", err, 1e-9);
}

OracleReport check_ge_grid(double resolution) {
    Vec ghz3 = Vec::Zero(8);
    ghz3[0] = ghz3[7] = 1.0 / std::sqrt(2.0);
    Vec w3 = Vec::Zero(8);
    w3[1] = w3[2] = w3[4] = 1.0 / std::sqrt(3.0);

    GESearchConfig cfg;
    cfg.samples = 20000;
    double err = 0.0;
    for (const Vec& psi : {ghz3, w3}) {
        const double grid = oracle_ge_grid(psi, resolution);
        const double impl = geometric_entanglement(psi, cfg).g;
        err = std::max(err, std::abs(grid - impl));
    }
    return make_report("ge_grid_ghz3_w3", err, 1e-3);
}

void check_thermal_grid(std::vector<OracleReport>& reports) {
    double rho_err = 0.0;
    double mono_err = 0.0;
    for (int il = 0; il < 20; ++il) {
        const double lambda = 3.0 * il / 19.0;
        const LatticeSpec spec{LatticeKind::Star7, 0.0, 0.5, lambda};
        const Spectrum s = diagonalize(build_hamiltonian(spec));
        double prev_gap = -1.0;
        for (int it = 0; it < 20; ++it) {
            const double kt = 5.0 * it / 19.0;
            const ThermalEnsemble ens = make_ensemble(s, kt);
            const Mat rho = thermal_density_matrix(s, ens);
            rho_err = std::max(rho_err, std::abs(rho.trace() - 1.0));
            rho_err = std::max(rho_err, (rho - rho.transpose()).cwiseAbs().maxCoeff());
            const double min_eig =
                Eigen::SelfAdjointEigenSolver<Mat>(rho).eigenvalues().minCoeff();
            rho_err = std::max(rho_err, std::max(0.0, -min_eig));
            const double gap = thermal_energy_gap(s, ens);
            if (prev_gap >= 0.0) mono_err = std::max(mono_err, prev_gap - gap);
            prev_gap = gap;
        }
    }
    reports.push_back(make_report("thermal_rho_invariants", rho_err, 1e-12));
    reports.push_back(make_report("thermal_gap_monotone", mono_err, 1e-10));
}

}  // namespace

std::vector<OracleReport> run_oracle_suite(std::uint64_t seed, double ge_resolution) {
    const std::vector<double> gammas{0.0, 0.25, 0.5, 1.0};
    const std::vector<double> lambdas{0.0, 0.3, 1.0, 2.5};
    std::vector<OracleReport> reports;
    reports.push_back(check_two_spin(gammas, lambdas));
    reports.push_back(check_three_spin(gammas, lambdas));
    reports.push_back(check_partial_trace(seed));
    reports.push_back(check_werner());
    reports.push_back(check_ge_grid(ge_resolution));
    check_thermal_grid(reports);
    return reports;
}

std::string reports_to_csv(const std::vector<OracleReport>& reports) {
    std::ostringstream out;
    out << "name,max_abs_error,tolerance,passed\n";
    for (const auto& r : reports)
        out << r.name << "," << r.max_abs_error << "," << r.tolerance << ","
            << (r.passed ? "true" : "false") << "\n";
    return out.str();
}

}  // namespace xyent::oracles
