#include "resum/ode.hpp"
#include "resum/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace resum {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                 e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                 e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

} // namespace

cplx rk45_segment(const std::function<cplx(cplx, cplx)>& f,
                  cplx a, cplx b, cplx y0, double tol) {
    const cplx dir = b - a;
    const double len = std::abs(dir);
    if (len == 0.0) return y0;
    // integrate in the arclength parameter s in [0, len]
    const cplx unit = dir / len;
    auto g = [&](double s, cplx y) { return unit * f(a + unit * s, y); };

    double s = 0.0, h = len / 16.0;
    cplx y = y0;
    cplx k1 = g(s, y);
    long steps = 0;
    const long max_steps = 2000000;
    while (s < len) {
        if (++steps > max_steps)
            throw stiffness_error("step budget exhausted on a path segment");
        h = std::min(h, len - s);
        if (h < 1e-14 * len)
            throw stiffness_error("step size underflow on a path segment");
        cplx k2 = g(s + c2 * h, y + h * (a21 * k1));
        cplx k3 = g(s + c3 * h, y + h * (a31 * k1 + a32 * k2));
        cplx k4 = g(s + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        cplx k5 = g(s + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        cplx k6 = g(s + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        cplx ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        cplx k7 = g(s + h, ynew);
        double err = std::abs(h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7));
        double scale = tol * h * (1.0 + std::abs(y));
        if (!std::isfinite(err) || !std::isfinite(ynew.real()) || !std::isfinite(ynew.imag()))
            throw stiffness_error("integration blew up on a path segment");
        if (err <= scale) {
            s += h;
            y = ynew;
            k1 = k7;   // FSAL
        }
        double grow = err > 0.0 ? 0.9 * std::pow(scale / err, 0.2) : 5.0;
        h *= std::clamp(grow, 0.2, 5.0);
    }
    return y;
}

cplx rk45_polyline(const std::function<cplx(cplx, cplx)>& f,
                   const std::vector<cplx>& waypoints, cplx y0, double tol) {
    if (waypoints.empty()) throw std::invalid_argument("path needs at least one waypoint");
    cplx y = y0;
    for (size_t i = 1; i < waypoints.size(); ++i)
        y = rk45_segment(f, waypoints[i - 1], waypoints[i], y, tol);
    return y;
}

} // namespace resum
