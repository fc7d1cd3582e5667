#include "resum/quadrature.hpp"
#include "resum/errors.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace resum {

double wrap_angle(double theta) {
    const double pi = 3.14159265358979323846;
    double t = std::remainder(theta, 2.0 * pi);   // (-pi, pi] up to the -pi edge
    if (t <= -pi) t = pi;
    return t;
}

Ray::Ray(double th) {
    if (!std::isfinite(th)) throw std::invalid_argument("ray angle must be finite");
    theta = wrap_angle(th);
}

namespace {

// Scaled Laguerre value LT_n(x) = L_n(x) e^(-x/2) and its neighbor.
// The plain recurrence overflows near n = 200; the scaled one does not.
// Extended precision keeps the large rules (n >= 128, nodes past 700,
// where LT is deep in the denormal range of double) accurate enough for
// tolerances near 1e-14.
void scaled_laguerre(int n, long double x, long double& lt_n, long double& lt_nm1) {
    long double e = std::exp(-0.5L * x);
    long double l0 = e, l1 = (1.0L - x) * e;
    if (n == 0) { lt_n = l0; lt_nm1 = 0.0L; return; }
    for (int k = 1; k < n; ++k) {
        long double l2 = ((2.0L * k + 1.0L - x) * l1 - (long double)k * l0) / (k + 1.0L);
        l0 = l1;
        l1 = l2;
    }
    lt_n = l1;
    lt_nm1 = l0;
}

LaguerreRule build_laguerre(int n) {
    LaguerreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    long double z = 0.0L;
    for (int i = 0; i < n; ++i) {
        // Stroud-Secrest style initial guesses, then Newton
        if (i == 0) z = 3.0L / (1.0L + 2.4L * n);
        else if (i == 1) z += 15.0L / (1.0L + 2.5L * n);
        else {
            long double ai = i - 1;
            z += ((1.0L + 2.55L * ai) / (1.9L * ai)) * (z - (long double)rule.nodes[i - 2]);
        }
        long double lt, ltm;
        for (int it = 0; it < 200; ++it) {
            scaled_laguerre(n, z, lt, ltm);
            // x L_n' = n (L_n - L_{n-1}); scaling adds -x/2 * LT_n
            long double dz = lt * z / (n * (lt - ltm) - 0.5L * z * lt);
            z -= dz;
            if (std::abs(dz) <= 1e-19L * (1.0L + z)) break;
        }
        scaled_laguerre(n + 1, z, lt, ltm);
        rule.nodes[i] = (double)z;
        // w = x / ((n+1) L_{n+1}(x))^2 rewritten through LT = L e^(-x/2);
        // exp(-z) stays normal in long double for every node of the sizes
        // used here, and a weight that underflows the final cast to double
        // is dropped by the ladder
        long double w = z * std::exp(-z) / (((long double)n + 1.0L) * ((long double)n + 1.0L) * lt * lt);
        rule.weights[i] = (double)w;
    }
    return rule;
}

} // namespace

const LaguerreRule& gauss_laguerre(int n) {
    if (n < 1 || n > 512) throw std::invalid_argument("laguerre rule size out of range");
    static std::map<int, LaguerreRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_laguerre(n)).first;
    return it->second;
}

QuadratureResult laguerre_ladder(const std::function<cplx(double)>& f, double tol) {
    static const int sizes[] = {16, 32, 64, 128, 256};
    QuadratureResult res;
    cplx prev = 0.0;
    bool have_prev = false;
    double best_change = std::numeric_limits<double>::infinity();
    cplx best_value = 0.0;
    long evals = 0;
    for (int n : sizes) {
        const LaguerreRule& rule = gauss_laguerre(n);
        cplx acc = 0.0;
        for (int i = 0; i < n; ++i) {
            if (rule.weights[i] == 0.0) continue;   // underflowed tail node
            cplx v = f(rule.nodes[i]);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw pole_on_ray_error("integrand not finite at a quadrature node");
            acc += rule.weights[i] * v;
        }
        evals += n;
        if (have_prev) {
            double change = std::abs(acc - prev);
            if (change < best_change) {
                best_change = change;
                best_value = acc;
            }
            if (change <= tol * (std::abs(acc) + 1e-300) || change <= 1e-16 * std::abs(acc) + 5e-323) {
                res.value = acc;
                res.err_estimate = change;
                res.n_evals = evals;
                return res;
            }
        }
        prev = acc;
        have_prev = true;
    }
    throw accuracy_error("node-doubling did not settle at the finest rule", best_change);
}

namespace {

// Hard budget: past this many evaluations the requested tolerance is
// unreachable (a near-singular integrand) and panels are accepted as-is
// with their error contributions recorded.
constexpr long kSimpsonBudget = 400000;

struct SimpsonState {
    const std::function<cplx(double)>& f;
    long evals = 0;
    cplx eval(double x) { ++evals; return f(x); }
};

cplx simpson_rec(SimpsonState& st, double a, double b, cplx fa, cplx fm, cplx fb,
                 cplx whole, double tol, int depth, double& err_acc) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    cplx flm = st.eval(lm), frm = st.eval(rm);
    cplx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    cplx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    cplx delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol || st.evals > kSimpsonBudget) {
        err_acc += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return simpson_rec(st, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, err_acc) +
           simpson_rec(st, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, err_acc);
}

} // namespace

QuadratureResult adaptive_simpson(const std::function<cplx(double)>& f,
                                  double a, double b, double tol, int max_depth) {
    SimpsonState st{f};
    cplx fa = st.eval(a), fb = st.eval(b), fm = st.eval(0.5 * (a + b));
    if (!std::isfinite(fa.real()) || !std::isfinite(fb.real()) || !std::isfinite(fm.real()) ||
        !std::isfinite(fa.imag()) || !std::isfinite(fb.imag()) || !std::isfinite(fm.imag()))
        throw pole_on_ray_error("integrand not finite on the interval");
    cplx whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    double err = 0.0;
    QuadratureResult res;
    res.value = simpson_rec(st, a, b, fa, fm, fb, whole, tol, max_depth, err);
    res.err_estimate = err;
    res.n_evals = st.evals;
    return res;
}

} // namespace resum
