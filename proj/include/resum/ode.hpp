#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace resum {

using cplx = std::complex<double>;

// Adaptive embedded 4(5) integration of a scalar complex ODE y' = f(x, y)
// along the straight segment from a to b. tol is the local error target
// per unit step relative to (1 + |y|).
cplx rk45_segment(const std::function<cplx(cplx, cplx)>& f,
                  cplx a, cplx b, cplx y0, double tol);

// Same, along a polyline of waypoints (front() is the start).
cplx rk45_polyline(const std::function<cplx(cplx, cplx)>& f,
                   const std::vector<cplx>& waypoints, cplx y0, double tol);

} // namespace resum
