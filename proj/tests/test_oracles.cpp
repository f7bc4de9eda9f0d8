#include <doctest.h>

#include <cmath>

#include "xyent/oracles.hpp"

using namespace xyent;
using namespace xyent::oracles;

TEST_SUITE("oracles") {

TEST_CASE("two-spin closed form at the frozen points") {
    const auto a = oracle_two_spin_spectrum(1.0, 0.0);
    CHECK(a[0] == doctest::Approx(-1.0));
    CHECK(a[1] == doctest::Approx(-1.0));
    CHECK(a[2] == doctest::Approx(1.0));
    CHECK(a[3] == doctest::Approx(1.0));

    const auto b = oracle_two_spin_spectrum(0.0, 0.0);
    CHECK(b[0] == doctest::Approx(-1.0));
    CHECK(b[1] == doctest::Approx(0.0));
    CHECK(b[2] == doctest::Approx(0.0));
    CHECK(b[3] == doctest::Approx(1.0));

    const auto c = oracle_two_spin_spectrum(1.0, 1.0);
    CHECK(c[0] == doctest::Approx(-std::sqrt(5.0)).epsilon(1e-14));
    CHECK(c[1] == doctest::Approx(-1.0));
    CHECK(c[2] == doctest::Approx(1.0));
    CHECK(c[3] == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
}

TEST_CASE("index-loop partial trace on known inputs") {
    const Mat iso = Mat::Identity(128, 128) / 128.0;
    for (auto [i, j] : {std::pair{1, 2}, {3, 5}, {6, 7}}) {
        const Eigen::Matrix4d rho = oracle_partial_trace(iso, i, j);
        CHECK((rho - Eigen::Matrix4d::Identity() / 4.0).cwiseAbs().maxCoeff() <= 1e-15);
    }

    Vec psi = Vec::Zero(128);
    psi[0] = 1.0;
    const Mat pure = psi * psi.transpose();
    const Eigen::Matrix4d rho = oracle_partial_trace(pure, 2, 6);
    Eigen::Matrix4d expected = Eigen::Matrix4d::Zero();
    expected(0, 0) = 1.0;
    CHECK((rho - expected).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("GE grid oracle on 3-qubit landmarks") {
    Vec product = Vec::Zero(8);
    product[0] = 1.0;
    CHECK(oracle_ge_grid(product, 1e-2) == doctest::Approx(0.0).epsilon(1e-12));

    Vec ghz3 = Vec::Zero(8);
    ghz3[0] = ghz3[7] = 1.0 / std::sqrt(2.0);
    CHECK(oracle_ge_grid(ghz3, 5e-3) == doctest::Approx(0.5).epsilon(1e-3));

    Vec w3 = Vec::Zero(8);
    w3[1] = w3[2] = w3[4] = 1.0 / std::sqrt(3.0);
    CHECK(oracle_ge_grid(w3, 5e-3) == doctest::Approx(5.0 / 9.0).epsilon(1e-3));

    CHECK_THROWS_AS(oracle_ge_grid(ghz3, 0.5), std::invalid_argument);
}

TEST_CASE("full oracle suite passes") {
    // coarser GE grid keeps the unit suite quick; the acceptance run uses 1e-3
    const auto reports = run_oracle_suite(12345, 5e-3);
    REQUIRE(reports.size() == 7);
    for (const auto& r : reports) {
        INFO(r.name, " err=", r.max_abs_error, " tol=", r.tolerance);
        CHECK(r.passed);
        CHECK(r.passed == (r.max_abs_error <= r.tolerance));
    }
    const std::string csv = reports_to_csv(reports);
    CHECK(csv.find("two_spin_closed_form") != std::string::npos);
    CHECK(csv.find("partial_trace_random") != std::string::npos);
}

}  // TEST_SUITE
