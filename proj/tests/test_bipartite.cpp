#include <doctest.h>

#include <cmath>

#include "xyent/bipartite.hpp"
#include "xyent/geometric.hpp"
#include "xyent/oracles.hpp"

using namespace xyent;

namespace {

Vec basis_state(int index) {
    Vec v = Vec::Zero(128);
    v[index] = 1.0;
    return v;
}

Vec ghz7() {
    Vec v = Vec::Zero(128);
    v[0] = v[127] = 1.0 / std::sqrt(2.0);
    return v;
}

Eigen::Matrix4d bell_projector() {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
    return m;
}

Vec random_state(std::uint64_t seed) {
    Vec v(128);
    for (int k = 0; k < 128; ++k)
        v[k] = unit_double(splitmix64(seed, k)) - 0.5;
    v.normalize();
    return v;
}

PairDensity thermal_pair(double gamma, double lambda, double kt, int i, int j) {
    const Spectrum s =
        diagonalize(build_hamiltonian({LatticeKind::Star7, 0.0, gamma, lambda}));
    return partial_trace_pair(s, make_ensemble(s, kt), i, j);
}

}  // namespace

TEST_SUITE("bipartite") {

TEST_CASE("product basis state reduces to |00><00| for every pair") {
    const Vec psi = basis_state(0);
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j) {
            const Eigen::Matrix4d rho = pair_density_from_state(psi, i, j).rho;
            Eigen::Matrix4d expected = Eigen::Matrix4d::Zero();
            expected(0, 0) = 1.0;
            CHECK((rho - expected).cwiseAbs().maxCoeff() <= 1e-15);
        }
}

TEST_CASE("GHZ reduces to an equal classical mixture") {
    const Vec psi = ghz7();
    for (auto [i, j] : {std::pair{1, 2}, {1, 4}, {3, 7}}) {
        const Eigen::Matrix4d rho = pair_density_from_state(psi, i, j).rho;
        Eigen::Matrix4d expected = Eigen::Matrix4d::Zero();
        expected(0, 0) = expected(3, 3) = 0.5;
        CHECK((rho - expected).cwiseAbs().maxCoeff() <= 1e-15);
    }
}

TEST_CASE("accumulated partial trace equals the materialized oracle") {
    const Vec psi = random_state(99);
    const Mat rho_full = psi * psi.transpose();
    for (auto [i, j] : {std::pair{1, 2}, {2, 6}, {4, 7}, {1, 7}}) {
        const Eigen::Matrix4d direct = pair_density_from_state(psi, i, j).rho;
        const Eigen::Matrix4d ref = oracles::oracle_partial_trace(rho_full, i, j);
        CHECK((direct - ref).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("pair order does not matter and i=j is rejected") {
    const Spectrum s =
        diagonalize(build_hamiltonian({LatticeKind::Star7, 0.0, 0.5, 0.8}));
    const ThermalEnsemble ens = make_ensemble(s, 0.5);
    const PairDensity a = partial_trace_pair(s, ens, 2, 5);
    const PairDensity b = partial_trace_pair(s, ens, 5, 2);
    CHECK(a.i == 2);
    CHECK(a.j == 5);
    CHECK((a.rho - b.rho).cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(partial_trace_pair(s, ens, 3, 3), std::invalid_argument);
}

TEST_CASE("thermal pair densities are valid states") {
    for (double kt : {0.0, 0.3, 2.0}) {
        const PairDensity pd = thermal_pair(0.5, 1.1, kt, 1, 4);
        CHECK(std::abs(pd.rho.trace() - 1.0) <= 1e-12);
        CHECK((pd.rho - pd.rho.transpose()).cwiseAbs().maxCoeff() <= 1e-14);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(pd.rho);
        CHECK(es.eigenvalues().minCoeff() >= -1e-12);
    }
}

TEST_CASE("spin flip: index reversal with alternating signs") {
    Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
    rho(0, 0) = 1.0;
    Eigen::Matrix4d flipped = spin_flip(rho);
    CHECK(flipped(3, 3) == 1.0);
    CHECK(flipped.cwiseAbs().sum() == 1.0);

    CHECK((spin_flip(bell_projector()) - bell_projector()).cwiseAbs().maxCoeff() <=
          1e-15);

    const Eigen::Matrix4d iso = Eigen::Matrix4d::Identity() / 4.0;
    CHECK((spin_flip(iso) - iso).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("psd_sqrt squares back to the input") {
    CHECK((psd_sqrt(Eigen::Matrix4d::Identity()) - Eigen::Matrix4d::Identity())
              .cwiseAbs()
              .maxCoeff() <= 1e-14);

    Eigen::Matrix4d d = Eigen::Matrix4d::Zero();
    d.diagonal() << 4.0, 1.0, 0.0, 0.0;
    Eigen::Matrix4d expected = Eigen::Matrix4d::Zero();
    expected.diagonal() << 2.0, 1.0, 0.0, 0.0;
    CHECK((psd_sqrt(d) - expected).cwiseAbs().maxCoeff() <= 1e-14);

    // random PSD from A^T A
    Eigen::Matrix4d a;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            a(r, c) = unit_double(splitmix64(7, r * 4 + c)) - 0.5;
    const Eigen::Matrix4d psd = a.transpose() * a;
    const Eigen::Matrix4d root = psd_sqrt(psd);
    CHECK((root * root - psd).cwiseAbs().maxCoeff() <= 1e-9);

    Eigen::Matrix4d indefinite = Eigen::Matrix4d::Identity();
    indefinite(3, 3) = -1e-6;
    CHECK_THROWS_AS(psd_sqrt(indefinite), std::runtime_error);
}

TEST_CASE("concurrence landmarks") {
    CHECK(concurrence(bell_projector()) == doctest::Approx(1.0).epsilon(1e-10));

    Eigen::Matrix4d product = Eigen::Matrix4d::Zero();
    product(0, 0) = 1.0;
    CHECK(concurrence(product) <= 1e-10);

    for (int k = 0; k <= 5; ++k) {
        const double p = 0.2 * k;
        const Eigen::Matrix4d werner =
            p * bell_projector() + (1.0 - p) * Eigen::Matrix4d::Identity() / 4.0;
        const double expected = std::max(0.0, (3.0 * p - 1.0) / 2.0);
        CHECK(concurrence(werner) == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("concurrence is invariant under local sigma_z rotations") {
    const PairDensity pd = thermal_pair(0.5, 0.9, 0.4, 1, 2);
    Eigen::Matrix4d d = Eigen::Matrix4d::Zero();
    d.diagonal() << 1.0, -1.0, -1.0, 1.0;  // diag(1,-1) on each qubit
    const Eigen::Matrix4d rotated = d * pd.rho * d;
    CHECK(concurrence(rotated) == doctest::Approx(concurrence(pd)).epsilon(1e-12));
}

TEST_CASE("entanglement of formation landmarks") {
    CHECK(eof(0.0) == 0.0);
    CHECK(eof(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eof(0.4) == doctest::Approx(0.25022491161107063).epsilon(1e-12));
    CHECK_THROWS_AS(eof(1.5), std::invalid_argument);
    CHECK_THROWS_AS(eof(-0.2), std::invalid_argument);
}

TEST_CASE("EF is strictly increasing in the concurrence") {
    double prev = 0.0;
    for (int k = 1; k <= 1000; ++k) {
        const double c = k * 1e-3;
        const double e = eof(c);
        CHECK(e > prev);
        prev = e;
    }
}

TEST_CASE("ring rotation maps EF(1,2) to EF(2,5) at alpha=0") {
    const Spectrum s =
        diagonalize(build_hamiltonian({LatticeKind::Star7, 0.0, 0.5, 0.7}));
    const ThermalEnsemble ens = make_ensemble(s, 0.4);
    const double a = pair_eof(s, ens, 1, 2);
    const double b = pair_eof(s, ens, 2, 5);
    CHECK(a == doctest::Approx(b).epsilon(1e-9));
}

}  // TEST_SUITE
