#include "resum/errors.hpp"
#include "resum/quadrature.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace resum;

namespace {
double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}
} // namespace

TEST_CASE("gauss-laguerre rules integrate monomials exactly up to degree 2n-1") {
    for (int n : {16, 32, 64}) {
        const LaguerreRule& rule = gauss_laguerre(n);
        REQUIRE(rule.nodes.size() == static_cast<size_t>(n));
        for (int k : {0, 1, 2, 5, 11, 2 * n - 1}) {
            double sum = 0.0;
            for (int i = 0; i < n; ++i)
                sum += rule.weights[i] * std::pow(rule.nodes[i], k);
            double truth = factorial(k);
            CHECK(std::abs(sum - truth) <= 1e-12 * truth);
        }
    }
}

TEST_CASE("gauss-laguerre tables are cached") {
    const LaguerreRule& a = gauss_laguerre(128);
    const LaguerreRule& b = gauss_laguerre(128);
    CHECK(&a == &b);
}

TEST_CASE("laguerre ladder reproduces a known transcendental value") {
    // integral_0^inf e^-u/(1+u) du = e E1(1)
    QuadratureResult q = laguerre_ladder(
        [](double u) { return cplx(1.0 / (1.0 + u)); }, 1e-12);
    cplx truth = oracle::euler_function(cplx(1.0));
    CHECK(std::abs(q.value - truth) < 1e-11);
    CHECK(q.err_estimate < 1e-10);
    CHECK(q.n_evals > 0);
}

TEST_CASE("laguerre ladder flags non-finite integrands") {
    CHECK_THROWS_AS(laguerre_ladder(
                        [](double u) {
                            return cplx(u > 3.0 ? std::numeric_limits<double>::infinity()
                                                : 1.0);
                        },
                        1e-10),
                    pole_on_ray_error);
}

TEST_CASE("adaptive simpson on smooth integrands") {
    QuadratureResult q1 = adaptive_simpson(
        [](double t) { return cplx(t * t); }, 0.0, 1.0, 1e-12);
    CHECK(std::abs(q1.value - cplx(1.0 / 3.0)) < 1e-12);

    QuadratureResult q2 = adaptive_simpson(
        [](double t) { return cplx(std::cos(t), std::sin(t)); }, 0.0, 3.0, 1e-12);
    cplx truth(std::sin(3.0), 1.0 - std::cos(3.0));
    CHECK(std::abs(q2.value - truth) < 1e-11);
    CHECK(q2.err_estimate < 1e-10);
}

TEST_CASE("adaptive simpson error estimate is honest on a peaked integrand") {
    QuadratureResult q = adaptive_simpson(
        [](double t) { return cplx(1.0 / (1e-4 + t * t)); }, -1.0, 1.0, 1e-9);
    double truth = 2.0 * std::atan(1.0 / 1e-2) / 1e-2;
    CHECK(std::abs(q.value.real() - truth) <= std::max(q.err_estimate * 20.0, 1e-6 * truth));
}

TEST_CASE("angle wrapping lands in (-pi, pi]") {
    const double pi = 3.14159265358979323846;
    CHECK(wrap_angle(pi) == doctest::Approx(pi));
    CHECK(wrap_angle(-pi) == doctest::Approx(pi));
    CHECK(wrap_angle(3.0 * pi / 2.0) == doctest::Approx(-pi / 2.0));
    CHECK(wrap_angle(-3.0 * pi / 2.0) == doctest::Approx(pi / 2.0));
    CHECK(wrap_angle(0.3) == doctest::Approx(0.3));
    CHECK(Ray(5.0 * pi).theta == doctest::Approx(pi));
}
