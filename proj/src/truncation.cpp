#include "resum/truncation.hpp"
#include "resum/errors.hpp"
#include "resum/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace resum {

double remainder_bound(int k, double x) {
    if (k < 0) throw std::invalid_argument("order must be non-negative");
    if (k > 170) throw std::overflow_error("factorial bound overflows past order 170");
    if (!(x > 0.0)) throw std::invalid_argument("x must be positive");
    double b = x;
    for (int i = 1; i <= k; ++i) b *= i * x;
    return b;
}

int optimal_k(double x) {
    if (!(x > 0.0 && x <= 1.0)) throw std::invalid_argument("x must lie in (0, 1]");
    // bound(k+1)/bound(k) = (k+1) x: descend while the next term still shrinks.
    // The tie (k+1) x == 1 stops, keeping the smaller order.
    int k = 0;
    while ((k + 1) * x < 1.0) ++k;
    return k;
}

double superasymptotic_estimate(double x) {
    if (!(x > 0.0 && x <= 1.0)) throw std::invalid_argument("x must lie in (0, 1]");
    const double two_pi = 6.283185307179586476925;
    return std::sqrt(two_pi * x) * std::exp(-1.0 / x);
}

double stirling_approx(int k) {
    if (k < 1) throw std::invalid_argument("order must be >= 1");
    const double half_log_two_pi = 0.918938533204672741780;
    double lg = half_log_two_pi + (k + 0.5) * std::log(static_cast<double>(k)) - k;
    return std::exp(lg);
}

std::vector<TruncationReport> truncation_sweep(double x, int k_max) {
    if (!(x > 0.0 && x <= 0.5))
        throw std::invalid_argument("sweep is restricted to 0 < x <= 0.5");
    // u^k at the largest usable quadrature node (~745) overflows past k ~ 105
    if (k_max < 0 || k_max > 100)
        throw std::invalid_argument("sweep order out of range");

    const double quad_tol = 1e-12;
    const cplx f = euler_exact(cplx(x, 0.0), EulerMethod::laplace, quad_tol).value;
    const FormalSeries series = euler_formal_coeffs(k_max);
    const double super = superasymptotic_estimate(x);

    std::vector<TruncationReport> out;
    out.reserve(static_cast<size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) {
        TruncationReport rep;
        rep.k = k;
        rep.partial_sum = eval_partial_sum(series, cplx(x, 0.0), k);
        rep.bound = remainder_bound(k, x);
        rep.actual_error = std::abs(f - rep.partial_sum);
        rep.superasymptotic = super;
        // R_k = (-1)^k integral_0^inf zeta^k e^(-zeta/x)/(1+zeta) d zeta
        //     = (-1)^k x^(k+1) integral_0^inf u^k e^(-u)/(1+xu) du
        auto g = [&](double u) -> cplx {
            return std::pow(u, static_cast<double>(k)) / (1.0 + x * u);
        };
        QuadratureResult q = laguerre_ladder(g, quad_tol);
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        rep.remainder_integral = sign * std::pow(x, k + 1) * q.value;
        out.push_back(rep);
    }
    return out;
}

} // namespace resum
