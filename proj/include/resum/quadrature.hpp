#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace resum {

using cplx = std::complex<double>;

// Integration ray {zeta = t e^(i theta), t >= 0}; theta kept in (-pi, pi].
struct Ray {
    double theta = 0.0;
    Ray() = default;
    explicit Ray(double th);
};

double wrap_angle(double theta);   // into (-pi, pi]

struct QuadratureResult {
    cplx value{0.0, 0.0};
    double err_estimate = 0.0;
    long n_evals = 0;
};

// Nodes x_i and weights w_i for sum w_i f(x_i) ~ integral_0^inf f(x) e^(-x) dx,
// exact for polynomial f up to degree 2n-1. Computed with the e^(-x/2)-scaled
// recurrence so that n = 256 stays inside double range; tables are cached.
struct LaguerreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const LaguerreRule& gauss_laguerre(int n);

// Node-doubling ladder over {16, 32, 64, 128, 256}: returns the first value
// whose change from the previous refinement is <= tol * (|value| + atol_floor),
// err_estimate = that change. Throws accuracy_error when even the finest rule
// has not settled. Throws pole_on_ray_error if f is non-finite at a node.
QuadratureResult laguerre_ladder(const std::function<cplx(double)>& f, double tol);

// Adaptive Simpson on the real interval [a, b] for a complex-valued f.
QuadratureResult adaptive_simpson(const std::function<cplx(double)>& f,
                                  double a, double b, double tol,
                                  int max_depth = 48);

} // namespace resum
