#include "resum/errors.hpp"
#include "resum/pade.hpp"
#include "resum/series.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace resum;

namespace {
std::vector<cplx> geometric_coeffs(cplx ratio, int count) {
    std::vector<cplx> c(count);
    cplx v = 1.0;
    for (int i = 0; i < count; ++i) { c[i] = v; v *= ratio; }
    return c;
}
} // namespace

TEST_CASE("simple pole recovered exactly from a geometric tail") {
    // sum (z/2)^n = 2/(2-z): single pole at 2, residue -2
    PadeApproximant P = pade_fit_coeffs(geometric_coeffs(0.5, 25), 12, 12);
    REQUIRE(P.poles.size() == 1);
    CHECK(std::abs(P.poles[0] - cplx(2.0)) < 1e-10);
    CHECK(std::abs(P.residues[0] - cplx(-2.0)) < 1e-9);
}

TEST_CASE("alternating units give the single pole at -1") {
    PadeApproximant P = pade_fit_coeffs(geometric_coeffs(-1.0, 25), 12, 12);
    REQUIRE(P.poles.size() == 1);
    CHECK(std::abs(P.poles[0] - cplx(-1.0)) < 1e-12);
    CHECK(std::abs(P.residues[0] - cplx(1.0)) < 1e-10);
}

TEST_CASE("triple pole collapses to a cluster at the right point") {
    // -2/(1+z)^3 expanded: c_m = (-1)^{m+1} (m+1)(m+2)
    std::vector<cplx> c(25);
    for (int m = 0; m < 25; ++m) {
        double v = (m + 1.0) * (m + 2.0);
        c[m] = ((m % 2) == 0 ? -v : v);
    }
    PadeApproximant P = pade_fit_coeffs(c, 12, 12);
    REQUIRE(P.poles.size() == 3);
    for (const cplx& p : P.poles) CHECK(std::abs(p - cplx(-1.0)) < 1e-4);
    // denominator reduced to the cubic, no junk degrees
    int nonzero = 0;
    for (const cplx& q : P.den) nonzero += (std::abs(q) > 0.0);
    CHECK(nonzero == 4);
}

TEST_CASE("two separated poles") {
    // 1/(1+z) + 1/(2+z)
    std::vector<cplx> c(21);
    for (int m = 0; m <= 20; ++m) {
        double sgn = (m % 2 == 0) ? 1.0 : -1.0;
        c[m] = sgn * (1.0 + std::pow(0.5, m + 1));
    }
    PadeApproximant P = pade_fit_coeffs(c, 10, 10);
    REQUIRE(P.poles.size() == 2);
    std::vector<double> re = {P.poles[0].real(), P.poles[1].real()};
    std::sort(re.begin(), re.end());
    CHECK(re[0] == doctest::Approx(-2.0).epsilon(1e-8));
    CHECK(re[1] == doctest::Approx(-1.0).epsilon(1e-8));
}

TEST_CASE("evaluation matches the generating function off the data") {
    PadeApproximant P = pade_fit_coeffs(geometric_coeffs(0.25, 21), 10, 10);
    for (cplx z : {cplx(1.0), cplx(0.0, 2.0), cplx(-3.0, 1.0)}) {
        cplx truth = 1.0 / (1.0 - 0.25 * z);
        CHECK(std::abs(P.eval(z) - truth) < 1e-10 * (1.0 + std::abs(truth)));
    }
}

TEST_CASE("taylor re-expansion failure is reported") {
    // B = z admits no [0/2] form with unit constant denominator
    CHECK_THROWS_AS(pade_fit_coeffs({0.0, 1.0, 0.0}, 0, 2), degenerate_order_error);
}

TEST_CASE("degenerate inputs") {
    // identically zero series fits the zero function at any order
    PadeApproximant Z = pade_fit_coeffs(std::vector<cplx>(11, 0.0), 5, 5);
    CHECK(Z.poles.empty());
    CHECK(std::abs(Z.eval(cplx(0.7, 0.3))) == 0.0);
    // constant with zero tail: exact, no poles
    std::vector<cplx> c(11, 0.0);
    c[0] = 3.0;
    PadeApproximant C3 = pade_fit_coeffs(c, 5, 5);
    CHECK(C3.poles.empty());
    CHECK(std::abs(C3.eval(cplx(2.0)) - cplx(3.0)) < 1e-12);
    CHECK_THROWS_AS(pade_fit_coeffs({1.0, 1.0}, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(pade_fit_coeffs({1.0, 1.0}, -1, 1), std::invalid_argument);
}

TEST_CASE("scaling survives extreme coefficient ladders") {
    // pole at -1/50: raw coefficients span 40 orders of magnitude
    PadeApproximant P = pade_fit_coeffs(geometric_coeffs(-50.0, 25), 12, 12);
    REQUIRE(P.poles.size() == 1);
    CHECK(std::abs(P.poles[0] - cplx(-0.02)) < 1e-12);
}

TEST_CASE("polynomial roots of a known cubic") {
    // (z-1)(z-2)(z-3) = -6 + 11z - 6z^2 + z^3
    std::vector<cplx> roots = polynomial_roots({-6.0, 11.0, -6.0, 1.0});
    REQUIRE(roots.size() == 3);
    std::vector<double> re(3);
    for (int i = 0; i < 3; ++i) re[i] = roots[i].real();
    std::sort(re.begin(), re.end());
    CHECK(re[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(re[1] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(re[2] == doctest::Approx(3.0).epsilon(1e-9));
    // trailing zeros trimmed before the companion matrix
    std::vector<cplx> padded = {-1.0, 1.0, 0.0, 0.0};
    std::vector<cplx> r2 = polynomial_roots(padded);
    REQUIRE(r2.size() == 1);
    CHECK(std::abs(r2[0] - cplx(1.0)) < 1e-12);
    CHECK(polynomial_roots({5.0}).empty());
}

TEST_CASE("fit from a borel image wrapper") {
    FormalSeries s = euler_formal_coeffs(24);
    BorelSeries B = borel_transform(s);
    PadeApproximant P = pade_fit(B, 12, 12);
    REQUIRE(P.poles.size() == 1);
    CHECK(std::abs(P.poles[0] - cplx(-1.0)) < 1e-12);
}
