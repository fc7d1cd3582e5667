#pragma once

#include "resum/pade.hpp"
#include "resum/quadrature.hpp"
#include "resum/series.hpp"

#include <string>
#include <utility>
#include <vector>

namespace resum {

struct StokesReport {
    std::vector<cplx> singularities;       // stable filtered poles in the Borel plane
    std::vector<Ray> exceptional_directions;
    bool summable_elsewhere = false;       // a stable singularity was identified
};

struct SummationResult {
    cplx value{0.0, 0.0};
    Ray direction;
    double err_estimate = 0.0;
    std::pair<int, int> pade_order{0, 0};
    std::string diagnostics;
};

// Diagonal rational fit of order (floor(order/2), floor(order/2)); poles are
// reported as singularities only when they survive the spurious-pair filter
// AND move by less than 1e-3 under an order-2 refit. order >= 4.
StokesReport detect_stokes(const BorelSeries& B, int order);

// Laplace sum of an offset-1 series along the ray theta: rational
// continuation of the Borel transform, then quadrature. Preconditions:
// Re(e^(i theta)/x) > 0, theta at least 0.05 rad away from every
// exceptional direction, and order+1 coefficients available.
// err_estimate = max(quadrature error, change under an order-2 refit).
SummationResult borel_sum(const FormalSeries& s, cplx x, Ray theta,
                          int order, double tol);

// borel_sum(theta_plus) - borel_sum(theta_minus). When singularities exist,
// exactly one exceptional direction must lie strictly inside the
// counterclockwise arc from theta_minus to theta_plus; with no singularities
// the difference is computed anyway (it should vanish).
cplx stokes_jump(const FormalSeries& s, cplx x, Ray theta_minus, Ray theta_plus,
                 int order, double tol);

} // namespace resum
