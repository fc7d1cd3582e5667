#include "resum/errors.hpp"
#include "resum/exact.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace resum;

namespace {
const double kPi = 3.14159265358979323846;

// Digits fixed ahead of time with 30-digit arithmetic.
struct Frozen { double x, f; };
const Frozen kFrozen[] = {
    {1.0,  0.596347362323194074341078499369},
    {0.5,  0.361328616888222584697161657679},
    {0.2,  0.170422176284732201812486991173},
    {0.1,  0.0915633339397880818760698157664},
    {0.05, 0.0477185454959608416987597914716},
};
} // namespace

TEST_CASE("reference values at the frozen points, both methods") {
    for (const Frozen& fr : kFrozen) {
        QuadratureResult lap = euler_exact(cplx(fr.x), EulerMethod::laplace, 1e-12);
        CHECK(std::abs(lap.value - cplx(fr.f)) < 1e-11);
        QuadratureResult dir = euler_exact(cplx(fr.x), EulerMethod::direct, 1e-10);
        CHECK(std::abs(dir.value - cplx(fr.f)) < 1e-8);
    }
}

TEST_CASE("pinned accuracy points") {
    CHECK(std::abs(euler_exact(cplx(1.0), EulerMethod::laplace, 1e-12).value
                   - cplx(0.5963473623)) < 1e-9);
    CHECK(std::abs(euler_exact(cplx(0.1), EulerMethod::laplace, 1e-12).value
                   - cplx(0.0915633)) < 1e-6);
}

TEST_CASE("both methods agree across the working range") {
    for (double x : {0.05, 0.1, 0.2, 0.5, 1.0}) {
        const double tol = 1e-10;
        cplx a = euler_exact(cplx(x), EulerMethod::direct, tol).value;
        cplx b = euler_exact(cplx(x), EulerMethod::laplace, tol).value;
        CHECK(std::abs(a - b) <= std::max(2.0 * tol, 1e-10) * (1.0 + std::abs(b)));
    }
}

TEST_CASE("reference values track the independent exponential-integral oracle") {
    for (double x : {0.03, 0.07, 0.13, 0.33, 0.77, 1.5}) {
        cplx lib = euler_exact(cplx(x), EulerMethod::laplace, 1e-13).value;
        cplx ind = oracle::euler_function(cplx(x));
        CHECK(std::abs(lib - ind) < 1e-12 * (1.0 + std::abs(ind)));
    }
    // off-axis points
    for (double arg : {0.3, -0.4, 1.0}) {
        cplx x = std::polar(0.2, arg);
        cplx lib = euler_exact(x, EulerMethod::laplace, 1e-12).value;
        cplx ind = oracle::euler_function(x);
        CHECK(std::abs(lib - ind) < 1e-10 * (1.0 + std::abs(ind)));
    }
}

TEST_CASE("preconditions of the reference evaluator") {
    CHECK_THROWS_AS(euler_exact(cplx(-0.1), EulerMethod::laplace, 1e-10),
                    std::domain_error);
    CHECK_THROWS_AS(euler_exact(cplx(0.0, 1.0), EulerMethod::laplace, 1e-10),
                    std::domain_error);
    CHECK_THROWS_AS(euler_exact(cplx(0.1), EulerMethod::laplace, 1e-15),
                    std::invalid_argument);
    CHECK_THROWS_AS(euler_exact(cplx(0.1), EulerMethod::laplace, 1e-2),
                    std::invalid_argument);
}

TEST_CASE("laplace transform along a ray: elementary images") {
    // B = 1 integrates to x; B = zeta^n to n! x^(n+1)
    QuadratureResult one = laplace_along_ray(
        [](cplx) { return cplx(1.0); }, Ray(0.0), cplx(0.5), 1e-12);
    CHECK(std::abs(one.value - cplx(0.5)) < 1e-12);

    double fact = 1.0;
    for (int n = 1; n <= 4; ++n) {
        fact *= n;
        QuadratureResult q = laplace_along_ray(
            [n](cplx z) { return std::pow(z, n); }, Ray(0.0), cplx(0.3), 1e-12);
        double truth = fact * std::pow(0.3, n + 1);
        CHECK(std::abs(q.value - cplx(truth)) < 1e-11 * truth);
    }
}

TEST_CASE("laplace transform is ray-independent inside the decay wedge") {
    cplx x(0.3, 0.05);
    cplx base = laplace_along_ray(
        [](cplx z) { return 1.0 / (1.0 + z); }, Ray(0.0), x, 1e-12).value;
    for (double th : {0.2, -0.2, 0.4}) {
        cplx rot = laplace_along_ray(
            [](cplx z) { return 1.0 / (1.0 + z); }, Ray(th), x, 1e-12).value;
        CHECK(std::abs(rot - base) < 1e-9);
    }
}

TEST_CASE("laplace transform preconditions and singular rays") {
    CHECK_THROWS_AS(laplace_along_ray([](cplx) { return cplx(1.0); },
                                      Ray(0.0), cplx(-0.2), 1e-10),
                    std::domain_error);
    CHECK_THROWS_AS(laplace_along_ray(
                        [](cplx z) {
                            return std::abs(z) > 5.0
                                       ? cplx(std::numeric_limits<double>::infinity())
                                       : cplx(1.0);
                        },
                        Ray(0.0), cplx(0.5), 1e-10),
                    pole_on_ray_error);
}

TEST_CASE("ode continuation along real segments matches the reference") {
    auto g = [](cplx x) { return x; };
    cplx y0 = oracle::euler_function(cplx(0.2));
    cplx y = ode_continue(0.0, g, cplx(0.2), y0, {cplx(0.2), cplx(0.4)}, 1e-12);
    CHECK(std::abs(y - oracle::euler_function(cplx(0.4))) < 1e-10);
}

TEST_CASE("ode continuation around a closed loop returns to the start value") {
    // away from the singular points the solution is single valued on a
    // contractible loop
    auto g = [](cplx x) { return x; };
    const double eps = 0.04;
    cplx start(1.0, 0.0);
    cplx y0(0.25, 0.0);
    std::vector<cplx> loop = {start, {1.0, 0.4}, {1.6, 0.4}, {1.6, 0.0}, start};
    cplx y = ode_continue(eps, g, start, y0, loop, 1e-12);
    CHECK(std::abs(y - y0) < 1e-9);
}

TEST_CASE("ode continuation edge cases") {
    auto g = [](cplx x) { return x; };
    cplx y = ode_continue(0.04, g, cplx(1.0), cplx(0.7), {cplx(1.0)}, 1e-10);
    CHECK(y == cplx(0.7));
    CHECK_THROWS_AS(ode_continue(0.04, g, cplx(1.0), cplx(0.7),
                                 {cplx(1.0), cplx(0.2, 0.0)}, 1e-10),
                    path_error);
    CHECK_THROWS_AS(ode_continue(-1.0, g, cplx(1.0), cplx(0.7),
                                 {cplx(1.0)}, 1e-10),
                    std::invalid_argument);
}

TEST_CASE("residual of the continued solution, central differences") {
    auto g = [](cplx x) { return x; };
    const double eps = 0.0;
    cplx y02 = oracle::euler_function(cplx(0.2));
    const double h = 1e-4;
    for (double xt : {0.3, 0.4, 0.5}) {
        auto at = [&](double xx) {
            return ode_continue(eps, g, cplx(0.2), y02, {cplx(0.2), cplx(xx)}, 1e-12);
        };
        cplx yp = (at(xt + h) - at(xt - h)) / (2.0 * h);
        cplx residual = xt * xt * yp + at(xt) - cplx(xt);
        CHECK(std::abs(residual) <= 1e-6);
    }
    (void)kPi;
}
