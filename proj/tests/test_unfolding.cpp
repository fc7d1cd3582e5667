#include "resum/errors.hpp"
#include "resum/exact.hpp"
#include "resum/series.hpp"
#include "resum/unfolding.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace resum;

namespace {
const double kPi = 3.14159265358979323846;

FormalSeries g_linear(int order = 40) {
    std::vector<cplx> c(order + 1, 0.0);
    c[1] = 1.0;
    return FormalSeries(0, c, "x");
}

FormalSeries g_exact_branchless(double eps, int order = 40) {
    // g = x + x^2 - eps makes y = sqrt(eps) + x an exact solution
    std::vector<cplx> c(order + 1, 0.0);
    c[0] = -eps;
    c[1] = 1.0;
    c[2] = 1.0;
    return FormalSeries(0, c, "x+x^2-eps");
}

UnfoldingConfig cfg_for(const FormalSeries& g, double eps, int order = 40) {
    UnfoldingConfig cfg;
    cfg.eps = eps;
    cfg.g = g;
    cfg.order = order;
    return cfg;
}
} // namespace

TEST_CASE("local expansion at the plus point, pinned leading coefficients") {
    UnfoldingConfig cfg = cfg_for(g_linear(), 0.04);
    LocalSolution h = local_series_plus(cfg);
    CHECK(h.center == cplx(0.2));
    REQUIRE(h.coeffs.size() >= 4);
    CHECK(std::abs(h.coeffs[0] - cplx(0.2)) < 1e-15);
    CHECK(std::abs(h.coeffs[1] - cplx(5.0 / 7.0)) < 1e-15);
    CHECK(std::abs(h.coeffs[2] - cplx(-0.396825396825397)) < 1e-12);
    CHECK(std::abs(h.coeffs[3] - cplx(0.360750360750361)) < 1e-12);
    CHECK(h.radius_estimate > 0.0);
}

TEST_CASE("local expansions satisfy their recurrences to roundoff") {
    for (double eps : {0.04, 0.1}) {
        UnfoldingConfig cfg = cfg_for(g_linear(), eps);
        double rt = std::sqrt(eps);
        LocalSolution hp = local_series_plus(cfg);
        // shifted right-hand side g(x) = x = rt + u around +rt
        // recurrence: (1 + 2 rt n) h_n + (n-1) h_{n-1} = g~_n
        // the coefficients grow geometrically, so the residual is measured
        // against the size of the terms that cancel
        for (size_t n = 1; n + 1 < hp.coeffs.size(); ++n) {
            cplx gshift = (n == 1) ? cplx(1.0) : cplx(0.0);
            cplx t1 = (1.0 + 2.0 * rt * n) * hp.coeffs[n];
            cplx t2 = (n - 1.0) * hp.coeffs[n - 1];
            double scale = 1.0 + std::abs(t1) + std::abs(t2);
            CHECK(std::abs(t1 + t2 - gshift) < 1e-10 * scale);
        }
        LocalSolution hm = local_series_minus(cfg);
        for (size_t n = 1; n + 1 < hm.coeffs.size(); ++n) {
            cplx gshift = (n == 1) ? cplx(1.0) : cplx(0.0);
            cplx t1 = (1.0 - 2.0 * rt * n) * hm.coeffs[n];
            cplx t2 = (n - 1.0) * hm.coeffs[n - 1];
            double scale = 1.0 + std::abs(t1) + std::abs(t2);
            CHECK(std::abs(t1 + t2 - gshift) < 1e-10 * scale);
        }
    }
}

TEST_CASE("exactly solvable right-hand side truncates the local series") {
    const double eps = 0.04;
    UnfoldingConfig cfg = cfg_for(g_exact_branchless(eps), eps);
    LocalSolution hp = local_series_plus(cfg);
    // the exact solution is y = x = sqrt(eps) + u: h_0 = sqrt(eps), h_1 = 1, rest 0
    CHECK(std::abs(hp.coeffs[0] - cplx(0.2)) < 1e-15);
    CHECK(std::abs(hp.coeffs[1] - cplx(1.0)) < 1e-15);
    for (size_t n = 2; n < hp.coeffs.size(); ++n)
        CHECK(std::abs(hp.coeffs[n]) < 1e-14);
}

TEST_CASE("resonance at the left point raised with its order") {
    UnfoldingConfig cfg = cfg_for(g_linear(), 0.0625);  // 1/(2 sqrt(eps)) = 2
    CHECK_THROWS_AS(local_series_minus(cfg), resonance_error);
    try {
        local_series_minus(cfg);
    } catch (const resonance_error& e) {
        CHECK(e.order == 2);
    }
    UnfoldingConfig c5 = cfg_for(g_linear(), 0.01);     // 1/(2 sqrt(eps)) = 5
    try {
        local_series_minus(c5);
        CHECK(false);
    } catch (const resonance_error& e) {
        CHECK(e.order == 5);
    }
}

TEST_CASE("vanishing numerator continues through the resonant order") {
    // for g = x + x^2 - eps the exact solution has h_n = 0 past n = 1,
    // so the resonant step divides 0/0 and continues with 0
    const double eps = 0.0625;
    UnfoldingConfig cfg = cfg_for(g_exact_branchless(eps), eps);
    LocalSolution hm;
    CHECK_NOTHROW(hm = local_series_minus(cfg));
    ConnectionReport rep = connection_coefficient(cfg, std::sqrt(eps) / 2.0);
    CHECK(rep.resonance);
    REQUIRE(rep.resonance_order.has_value());
    CHECK(*rep.resonance_order == 2);
    CHECK(std::abs(rep.C2) <= 1e-8);
}

TEST_CASE("connection constant vanishes for the branch-free solution") {
    for (double eps : {0.04, 0.01}) {
        UnfoldingConfig cfg = cfg_for(g_exact_branchless(eps), eps);
        ConnectionReport rep = connection_coefficient(cfg, std::sqrt(eps) / 2.0);
        CHECK(std::abs(rep.C2) <= 1e-8);
        CHECK(rep.fit_residual < 1e-8);
    }
}

TEST_CASE("connection constant for the linear right-hand side") {
    // closed form pi cot(pi alpha) - i pi for the path below,
    // alpha = 1/(2 sqrt(eps))
    for (double eps : {0.04, 0.0225}) {
        UnfoldingConfig cfg = cfg_for(g_linear(), eps);
        ConnectionReport rep = connection_coefficient(cfg, std::sqrt(eps) / 2.0);
        double alpha = 1.0 / (2.0 * std::sqrt(eps));
        cplx truth(kPi / std::tan(kPi * alpha), -kPi);
        CHECK(std::abs(rep.C2 - truth) < 1e-6);
        CHECK(std::abs(rep.C2) > 10.0 * rep.fit_residual);
        CHECK_FALSE(rep.resonance);
    }
}

TEST_CASE("connection constant is radius independent") {
    UnfoldingConfig cfg = cfg_for(g_linear(), 0.04);
    ConnectionReport a = connection_coefficient(cfg, 0.10);
    ConnectionReport b = connection_coefficient(cfg, 0.05);
    CHECK(std::abs(a.C2 - b.C2) < 1e-6);
}

TEST_CASE("path side flips the imaginary part to the conjugate branch") {
    UnfoldingConfig cfg = cfg_for(g_linear(), 0.04);
    ConnectionReport below = connection_coefficient(cfg, 0.1, PathSide::below);
    ConnectionReport above = connection_coefficient(cfg, 0.1, PathSide::above);
    CHECK(std::abs(below.C2 - std::conj(above.C2)) < 1e-6);
}

TEST_CASE("connection radius preconditions") {
    UnfoldingConfig cfg = cfg_for(g_linear(), 0.04);
    CHECK_THROWS_AS(connection_coefficient(cfg, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(connection_coefficient(cfg, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(connection_coefficient(cfg, 1e-4), std::invalid_argument);
}

TEST_CASE("resonance grid is the inverse even squares, descending") {
    std::vector<double> set = resonance_set(0.3, 5);
    REQUIRE(set.size() == 5);
    CHECK(set[0] == 0.25);
    CHECK(set[1] == 1.0 / 16.0);
    CHECK(set[2] == 1.0 / 36.0);
    CHECK(set[3] == 1.0 / 64.0);
    CHECK(set[4] == 0.01);
    CHECK(resonance_set(0.05, 10).front() == doctest::Approx(1.0 / 36.0));
}

TEST_CASE("resonance detection is exact on the grid and silent off it") {
    for (double eps : {0.25, 1.0 / 16.0, 1.0 / 36.0}) {
        UnfoldingConfig cfg = cfg_for(g_linear(), eps);
        CHECK_THROWS_AS(local_series_minus(cfg), resonance_error);
    }
    // 20 nearby non-resonant values must pass
    int checked = 0;
    for (double base : {0.25, 1.0 / 16.0}) {
        for (int j = 1; j <= 5; ++j) {
            for (double sgn : {-1.0, 1.0}) {
                double eps = base * (1.0 + sgn * j * 1e-3);
                UnfoldingConfig cfg = cfg_for(g_linear(), eps);
                CHECK_NOTHROW(local_series_minus(cfg));
                ++checked;
            }
        }
    }
    CHECK(checked == 20);
}

TEST_CASE("connected solution solves the equation along the path") {
    // continue the regular solution from the plus point by the library ode
    // and compare with the local series value at the starting anchor
    const double eps = 0.04;
    UnfoldingConfig cfg = cfg_for(g_linear(), eps);
    LocalSolution hp = local_series_plus(cfg);
    double rt = std::sqrt(eps);
    double r = rt / 2.0;
    cplx xs = hp.center + r;
    cplx ys = 0.0;
    {
        cplx u = 1.0;
        for (const cplx& h : hp.coeffs) { ys += h * u; u *= r; }
    }
    auto g = [](cplx x) { return x; };
    const double h = 1e-5;
    cplx xp = xs + h, xm = xs - h;
    cplx yp = ode_continue(eps, g, xs, ys, {xs, xp}, 1e-12);
    cplx ym = ode_continue(eps, g, xs, ys, {xs, xm}, 1e-12);
    cplx deriv = (yp - ym) / (2.0 * h);
    cplx residual = (xs * xs - eps) * deriv + ys - xs;
    CHECK(std::abs(residual) < 1e-7);
}

TEST_CASE("sweep records failures per row and distances to the grid") {
    std::vector<SweepRow> rows =
        unfolding_sweep(g_linear(), {0.04, 0.0225, 0.01}, "half-gap");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].error.empty());
    REQUIRE(rows[0].C2.has_value());
    CHECK(std::abs(*rows[0].C2 - cplx(0.0, -kPi)) < 1e-6);
    CHECK(rows[0].nearest_resonance == doctest::Approx(0.04 - 1.0 / 36.0));
    CHECK(rows[1].error.empty());
    CHECK(std::abs(*rows[1].C2) == doctest::Approx(2.0 * kPi / std::sqrt(3.0)).epsilon(1e-7));
    // eps = 0.01 is resonant: error recorded, no value
    CHECK_FALSE(rows[2].error.empty());
    CHECK_FALSE(rows[2].C2.has_value());
    CHECK(rows[2].nearest_resonance == doctest::Approx(0.0));
    CHECK_THROWS_AS(unfolding_sweep(g_linear(), {0.04}, "third-gap"),
                    std::invalid_argument);
}

TEST_CASE("quarter-gap sweep agrees with half-gap away from resonance") {
    std::vector<SweepRow> a = unfolding_sweep(g_linear(), {0.04}, "half-gap");
    std::vector<SweepRow> b = unfolding_sweep(g_linear(), {0.04}, "quarter-gap");
    REQUIRE(a[0].C2.has_value());
    REQUIRE(b[0].C2.has_value());
    CHECK(std::abs(*a[0].C2 - *b[0].C2) < 1e-6);
}
