#include <doctest.h>

#include <cmath>
#include <limits>

#include "helpers.hpp"
#include "mstat/distributions.hpp"
#include "mstat/specfun.hpp"
#include "table_data.hpp"

using namespace mstat;
using testutil::near_abs;
using testutil::near_rel;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_SUITE("specfun") {

TEST_CASE("euler gamma constant") {
    CHECK(specfun::euler_gamma() == 0.5772156649015329);
    // identity with the lambda = 1 exponential geometric mean
    CHECK(std::exp(-specfun::euler_gamma()) ==
          doctest::Approx(dist::exponential_params(1.0).geo_mean).epsilon(1e-15));
    // quadrature of e^{-x} ln x recovers -gamma
    const double i = specfun::integrate(
        [](double x) { return std::exp(-x) * std::log(x); }, {0.0, kInf, 1e-11, 20000});
    CHECK(near_abs(-i, specfun::euler_gamma(), 1e-10));
}

TEST_CASE("e1 reference values") {
    CHECK(near_abs(specfun::e1(1.0), testdata::k_e1_at_1, 1e-12));
    CHECK(near_abs(specfun::e1(10.0), testdata::k_e1_at_10, 1e-12));
    CHECK(near_rel(specfun::e1(1e-8), -specfun::euler_gamma() - std::log(1e-8), 1e-7));
}

TEST_CASE("e1 cross-checked against quadrature") {
    for (double x : {0.25, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        const double by_quadrature = specfun::integrate(
            [](double t) { return std::exp(-t) / t; }, {x, kInf, 1e-12, 20000});
        CHECK(near_abs(specfun::e1(x), by_quadrature, 1e-11));
    }
}

TEST_CASE("e1 domain and monotonicity") {
    CHECK_THROWS_AS(specfun::e1(0.0), std::domain_error);
    CHECK_THROWS_AS(specfun::e1(-1.0), std::domain_error);
    double prev = specfun::e1(1e-6);
    for (double x = 0.01; x <= 50.0; x += 0.37) {
        const double cur = specfun::e1(x);
        CHECK(cur > 0.0);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("ei_neg reflection") {
    CHECK(near_abs(specfun::ei_neg(-1.0), -testdata::k_e1_at_1, 1e-12));
    CHECK(near_rel(specfun::ei_neg(-10.0), -testdata::k_e1_at_10, 1e-10));
    CHECK(near_abs(specfun::ei_neg(-0.5), -testdata::k_e1_at_half, 1e-12));
    CHECK_THROWS_AS(specfun::ei_neg(0.0), std::domain_error);
    CHECK_THROWS_AS(specfun::ei_neg(1.0), std::domain_error);
    for (double x = 1e-6; x < 50.0; x *= 3.1) {
        CHECK(near_abs(specfun::e1(x) + specfun::ei_neg(-x), 0.0, 1e-14));
    }
}

TEST_CASE("integrate reference integrals") {
    const double unit = specfun::integrate([](double) { return 1.0; }, {0.0, 1.0});
    CHECK(near_abs(unit, 1.0, 1e-13));

    const double ln_sq = specfun::integrate(
        [](double x) {
            const double l = std::log(x);
            return std::exp(-x) * l * l;
        },
        {0.0, kInf, 1e-11, 20000});
    CHECK(near_abs(ln_sq, testdata::k_gamma_sq_plus_pi2_6, 1e-9));

    // Pareto(2, 1) density against ln x integrates to 1/2.
    const double pareto_log = specfun::integrate(
        [](double x) { return std::log(x) * 2.0 * std::pow(x, -3.0); }, {1.0, kInf, 1e-11, 20000});
    CHECK(near_abs(pareto_log, 0.5, 1e-9));
}

TEST_CASE("integrate handles the other infinite layouts") {
    const double gauss = specfun::integrate(
        [](double x) { return std::exp(-x * x); }, {-kInf, kInf, 1e-11, 20000});
    CHECK(near_abs(gauss, std::sqrt(M_PI), 1e-10));

    const double left = specfun::integrate([](double x) { return std::exp(x); },
                                           {-kInf, 0.0, 1e-11, 20000});
    CHECK(near_abs(left, 1.0, 1e-10));
}

TEST_CASE("integrate validates its spec") {
    const auto f = [](double x) { return x; };
    CHECK_THROWS_AS(specfun::integrate(f, {1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(specfun::integrate(f, {0.0, 1.0, 0.0, 100}), std::domain_error);
    CHECK_THROWS_AS(specfun::integrate(f, {0.0, 1.0, 1e-10, 0}), std::domain_error);
}

TEST_CASE("integrate reports non-convergence with its best estimate") {
    try {
        specfun::integrate([](double x) { return std::sin(50.0 * x); },
                           {0.0, 10.0, 1e-15, 3});
        FAIL("expected ConvergenceError");
    } catch (const specfun::ConvergenceError& e) {
        CHECK(std::isfinite(e.best_estimate()));
        CHECK(e.error_estimate() > 1e-15);
    }
}

TEST_CASE("find_root bisection") {
    const double root = specfun::find_root([](double x) { return x * x - 2.0; }, 1.0, 2.0);
    CHECK(near_abs(root, std::sqrt(2.0), 1e-12));

    CHECK(near_abs(specfun::find_root([](double x) { return std::log(x); }, 0.5, 2.0), 1.0,
                   1e-12));

    CHECK_THROWS_AS(specfun::find_root([](double x) { return x * x + 1.0; }, 1.0, 2.0),
                    std::domain_error);

    // refinement beyond tol does not move the root by more than the coarser tol
    const auto f = [](double x) { return std::cos(x); };
    const double coarse = specfun::find_root(f, 1.0, 2.0, 1e-6);
    const double fine = specfun::find_root(f, 1.0, 2.0, 1e-13);
    CHECK(near_abs(coarse, fine, 1e-6));
    CHECK(near_abs(fine, M_PI / 2.0, 1e-12));
}

}  // TEST_SUITE
