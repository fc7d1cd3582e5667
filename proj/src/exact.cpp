#include "resum/exact.hpp"
#include "resum/errors.hpp"
#include "resum/ode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace resum {

namespace {

void check_tol(double tol) {
    if (!(tol >= 1e-14 && tol <= 1e-3))
        throw std::invalid_argument("tolerance must lie in [1e-14, 1e-3]");
}

// distance from point p to the segment [a, b]
double seg_dist(cplx p, cplx a, cplx b) {
    cplx d = b - a;
    double l2 = std::norm(d);
    if (l2 == 0.0) return std::abs(p - a);
    double t = ((p - a).real() * d.real() + (p - a).imag() * d.imag()) / l2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * d));
}

} // namespace

QuadratureResult euler_exact(cplx x, EulerMethod method, double tol) {
    check_tol(tol);
    const cplx invx = 1.0 / x;
    if (!(invx.real() > 0.0))
        throw std::domain_error("evaluation requires Re(1/x) > 0");

    if (method == EulerMethod::laplace) {
        // integral_0^inf e^(-zeta/x)/(1+zeta) d zeta, zeta = u/Re(1/x)
        const double sigma = invx.real();
        const double omega = invx.imag();
        auto f = [&](double u) -> cplx {
            double t = u / sigma;
            // e^(-u) is the rule weight; the leftover phase is e^(-i u omega/sigma)
            cplx phase = std::polar(1.0, -u * omega / sigma);
            return phase / (1.0 + cplx(t, 0.0));
        };
        QuadratureResult r = laguerre_ladder(f, tol);
        r.value /= sigma;
        r.err_estimate /= sigma;
        return r;
    }

    // direct: e^(1/x) integral_0^x e^(-1/z)/z dz; with z = x s this is
    // integral_0^1 exp(-(1/x)(1-s)/s) / s ds
    auto f = [&](double s) -> cplx {
        if (s <= 0.0) return 0.0;                     // essential zero at s = 0
        cplx expo = -invx * ((1.0 - s) / s);
        if (expo.real() < -745.0) return 0.0;         // underflow guard
        return std::exp(expo) / s;
    };
    QuadratureResult r = adaptive_simpson(f, 0.0, 1.0, tol * 0.1);
    if (r.err_estimate > std::max(tol, 1e-10) * 10.0 + 1e-12)
        throw accuracy_error("interval refinement did not reach the requested tolerance",
                             r.err_estimate);
    return r;
}

QuadratureResult laplace_along_ray(const std::function<cplx(cplx)>& B,
                                   Ray ray, cplx x, double tol) {
    check_tol(tol);
    const cplx eit = std::polar(1.0, ray.theta);
    const cplx decay = eit / x;
    if (!(decay.real() > 0.0))
        throw std::domain_error("decay condition Re(e^(i theta)/x) > 0 fails");
    const double sigma = decay.real();
    const double omega = decay.imag();
    // zeta = t e^(i theta), u = t sigma:
    //   I = (e^(i theta)/sigma) integral_0^inf B((u/sigma) e^(i theta)) e^(-u) e^(-i u omega/sigma) du
    auto f = [&](double u) -> cplx {
        cplx zeta = (u / sigma) * eit;
        cplx phase = std::polar(1.0, -u * omega / sigma);
        return B(zeta) * phase;
    };
    QuadratureResult r = laguerre_ladder(f, tol);
    r.value *= eit / sigma;
    r.err_estimate /= sigma;
    return r;
}

cplx ode_continue(double eps, const std::function<cplx(cplx)>& g,
                  cplx x_start, cplx y_start,
                  const std::vector<cplx>& path, double tol) {
    if (eps < 0.0) throw std::invalid_argument("unfolding parameter must be >= 0");
    check_tol(tol);
    if (path.empty()) return y_start;
    if (std::abs(path.front() - x_start) > 1e-12 * (1.0 + std::abs(x_start)))
        throw std::invalid_argument("first waypoint must equal the start point");
    const double root = std::sqrt(eps);
    const double clearance = 1e-9 * (1.0 + root);
    for (size_t i = 1; i < path.size(); ++i) {
        if (seg_dist(cplx(root, 0.0), path[i - 1], path[i]) < clearance ||
            seg_dist(cplx(-root, 0.0), path[i - 1], path[i]) < clearance)
            throw path_error("path passes through a singular point of the equation");
    }
    auto f = [&](cplx x, cplx y) { return (g(x) - y) / (x * x - eps); };
    return rk45_polyline(f, path, y_start, tol);
}

} // namespace resum
