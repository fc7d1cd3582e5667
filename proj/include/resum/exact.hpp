#pragma once

#include "resum/quadrature.hpp"
#include "resum/series.hpp"

#include <functional>
#include <vector>

namespace resum {

enum class EulerMethod { direct, laplace };

// Reference value of the function solving x^2 y' + y = x that vanishes
// at 0+, for Re(1/x) > 0.
//   laplace: integral_0^inf e^(-zeta/x)/(1+zeta) d zeta by Gauss-Laguerre
//   direct:  e^(1/x) integral_0^x e^(-1/z)/z dz on the straight segment,
//            evaluated as an adaptive-Simpson integral over [0, 1]
// tol must lie in [1e-14, 1e-3].
QuadratureResult euler_exact(cplx x, EulerMethod method, double tol);

// Laplace integral of a user function along the ray {t e^(i theta)}:
//   integral_d B(zeta) e^(-zeta/x) d zeta,
// substituted so that a Gauss-Laguerre rule in u = t Re(e^(i theta)/x)
// applies. Requires the decay condition Re(e^(i theta)/x) > 0. A non-finite
// node value raises pole_on_ray_error (the ray hits a singularity of B).
QuadratureResult laplace_along_ray(const std::function<cplx(cplx)>& B,
                                   Ray ray, cplx x, double tol);

// Continue y' = (g(x) - y)/(x^2 - eps) along a polyline of waypoints
// (the first waypoint is the start). The path must not pass through
// +-sqrt(eps). Zero-length paths return y_start.
cplx ode_continue(double eps, const std::function<cplx(cplx)>& g,
                  cplx x_start, cplx y_start,
                  const std::vector<cplx>& path, double tol);

} // namespace resum
