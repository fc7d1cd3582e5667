#include "resum/borel.hpp"

#include "resum/errors.hpp"
#include "resum/exact.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace resum {

namespace {

constexpr double kPoleStability = 1e-3;   // max drift under an order-2 refit
constexpr double kRayClearance = 0.05;    // rad, min distance to exceptional dirs
constexpr double kSchemeDistance = 0.5;   // poles closer to the ray force Simpson

std::pair<int, int> diagonal_order(int order) {
    int half = order / 2;
    return {half, half};
}

// Poles of the diagonal fit at `order` that persist (within kPoleStability)
// in the fit at order-2.
std::vector<cplx> stable_poles(const std::vector<cplx>& coeffs, int order) {
    auto [l1, m1] = diagonal_order(order);
    auto [l2, m2] = diagonal_order(order - 2);
    PadeApproximant hi = pade_fit_coeffs(coeffs, l1, m1);
    PadeApproximant lo = pade_fit_coeffs(coeffs, l2, m2);

    std::vector<cplx> out;
    for (const cplx& p : hi.poles) {
        for (const cplx& q : lo.poles) {
            if (std::abs(p - q) < kPoleStability) {
                out.push_back(p);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const cplx& a, const cplx& b) {
        double aa = std::arg(a), ab = std::arg(b);
        if (aa != ab) return aa < ab;
        return std::abs(a) < std::abs(b);
    });
    return out;
}

// Distance from pole p to the ray {t e^(i theta) : t >= 0}.
double ray_distance(const cplx& p, double theta) {
    double d = std::abs(wrap_angle(std::arg(p) - theta));
    double r = std::abs(p);
    if (d >= 3.14159265358979323846 / 2.0) return r;
    return r * std::sin(d);
}

struct RaySum {
    cplx value;
    double quad_err;
    bool simpson;
    long n_evals;
};

RaySum sum_on_ray(const PadeApproximant& P, cplx x, double theta, double tol) {
    cplx decay = std::polar(1.0, theta) / x;
    if (!(decay.real() > 0.0))
        throw std::domain_error("Laplace integral diverges along this direction for the given point");

    bool near = false;
    for (const cplx& p : P.poles)
        if (ray_distance(p, theta) < kSchemeDistance) { near = true; break; }

    RaySum rs;
    rs.simpson = near;
    if (!near) {
        QuadratureResult q = laplace_along_ray(
            [&P](cplx z) { return P.eval(z); }, Ray(theta), x, tol);
        rs.value = q.value;
        rs.quad_err = q.err_estimate;
        rs.n_evals = q.n_evals;
        return rs;
    }

    // Pole close to the contour: the Gauss rule loses its accuracy advantage,
    // so integrate adaptively over a truncated range. exp(-T sigma) = e^{-40}.
    double sigma = decay.real();
    double T = 40.0 / sigma;
    cplx phase = std::polar(1.0, theta);
    long evals = 0;
    auto f = [&](double t) {
        ++evals;
        return P.eval(t * phase) * std::exp(-t * decay) * phase;
    };
    QuadratureResult q = adaptive_simpson(f, 0.0, T, std::max(tol * 0.1, 1e-13));
    rs.value = q.value;
    rs.quad_err = q.err_estimate + std::exp(-40.0) * std::abs(rs.value);
    rs.n_evals = evals;
    return rs;
}

} // namespace

StokesReport detect_stokes(const BorelSeries& B, int order) {
    if (order < 4)
        throw std::invalid_argument("detect_stokes: order must be at least 4");
    auto [L, M] = diagonal_order(order);
    if ((int)B.coeffs.size() < L + M + 1)
        throw std::invalid_argument("detect_stokes: order exceeds available coefficients");

    StokesReport rep;
    rep.singularities = stable_poles(B.coeffs, order);
    for (const cplx& p : rep.singularities) {
        double th = std::arg(p);
        bool seen = false;
        for (const Ray& r : rep.exceptional_directions)
            if (std::abs(wrap_angle(r.theta - th)) < 1e-9) { seen = true; break; }
        if (!seen) rep.exceptional_directions.push_back(Ray(th));
    }
    rep.summable_elsewhere = !rep.singularities.empty();
    return rep;
}

SummationResult borel_sum(const FormalSeries& s, cplx x, Ray theta,
                          int order, double tol) {
    if (s.offset != 1)
        throw std::invalid_argument("borel_sum: series must start at x^1");
    if (order < 4)
        throw std::invalid_argument("borel_sum: order must be at least 4");
    if ((int)s.coeffs.size() < order + 1)
        throw std::invalid_argument("borel_sum: order+1 coefficients required");
    if (!(tol > 0.0))
        throw std::invalid_argument("borel_sum: tolerance must be positive");

    BorelSeries B = borel_transform(s);
    StokesReport rep = detect_stokes(B, order);
    for (const Ray& r : rep.exceptional_directions) {
        if (std::abs(wrap_angle(theta.theta - r.theta)) < kRayClearance) {
            std::ostringstream os;
            os << "borel_sum: ray theta=" << theta.theta
               << " is within 0.05 rad of the exceptional direction " << r.theta;
            throw stokes_direction_error(os.str());
        }
    }

    auto [L, M] = diagonal_order(order);
    PadeApproximant hi = pade_fit_coeffs(B.coeffs, L, M);
    RaySum a = sum_on_ray(hi, x, theta.theta, tol);

    auto [L2, M2] = diagonal_order(order - 2);
    PadeApproximant lo = pade_fit_coeffs(B.coeffs, L2, M2);
    RaySum b = sum_on_ray(lo, x, theta.theta, tol);

    double refit_delta = std::abs(a.value - b.value);

    SummationResult res;
    res.value = a.value;
    res.direction = theta;
    res.err_estimate = std::max(a.quad_err, refit_delta);
    res.pade_order = {L, M};
    std::ostringstream os;
    os << "pade [" << L << "/" << M << "], " << hi.poles.size() << " pole(s), "
       << rep.singularities.size() << " stable; quadrature "
       << (a.simpson ? "adaptive-simpson" : "gauss-laguerre")
       << ", n_evals " << a.n_evals << "; refit delta " << refit_delta;
    res.diagnostics = os.str();
    return res;
}

cplx stokes_jump(const FormalSeries& s, cplx x, Ray theta_minus, Ray theta_plus,
                 int order, double tol) {
    BorelSeries B = borel_transform(s);
    StokesReport rep = detect_stokes(B, order);

    if (!rep.singularities.empty()) {
        auto wrap_pos = [](double a) {
            double two_pi = 2.0 * 3.14159265358979323846;
            double y = std::fmod(a, two_pi);
            if (y < 0.0) y += two_pi;
            return y;
        };
        double span = wrap_pos(theta_plus.theta - theta_minus.theta);
        int inside = 0;
        for (const Ray& r : rep.exceptional_directions) {
            double pos = wrap_pos(r.theta - theta_minus.theta);
            if (pos > 0.0 && pos < span) ++inside;
        }
        if (inside != 1) {
            std::ostringstream os;
            os << "stokes_jump: " << inside << " exceptional direction(s) inside the arc ("
               << theta_minus.theta << ", " << theta_plus.theta << "); need exactly one";
            throw configuration_error(os.str());
        }
    }

    SummationResult plus = borel_sum(s, x, theta_plus, order, tol);
    SummationResult minus = borel_sum(s, x, theta_minus, order, tol);
    return plus.value - minus.value;
}

} // namespace resum
