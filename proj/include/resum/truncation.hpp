#pragma once

#include "resum/series.hpp"

#include <optional>
#include <vector>

namespace resum {

struct TruncationReport {
    int k = 0;
    cplx partial_sum{0.0, 0.0};
    double bound = 0.0;                       // k! x^(k+1)
    std::optional<double> actual_error;       // |f(x) - f_k(x)| when f available
    double superasymptotic = 0.0;             // sqrt(2 pi x) e^(-1/x)
    std::optional<cplx> remainder_integral;   // independent quadrature of R_k
};

// k! x^(k+1), accumulated as a product so no intermediate factorial overflows.
double remainder_bound(int k, double x);

// Smallest k minimizing k! x^(k+1); the bound ratio (k+1) x crosses 1
// exactly once, ties resolve to the smaller k. 0 < x <= 1.
int optimal_k(double x);

// sqrt(2 pi x) e^(-1/x), the error scale at the optimal order.
double superasymptotic_estimate(double x);

// sqrt(2 pi) k^(k+1/2) e^(-k), evaluated in log space.
double stirling_approx(int k);

// For k = 0..k_max at fixed 0 < x <= 0.5: partial sum, bound, actual error
// against the quadrature reference, and the remainder integral
//   R_k = (-1)^k integral_0^inf zeta^k e^(-zeta/x)/(1+zeta) d zeta.
std::vector<TruncationReport> truncation_sweep(double x, int k_max);

} // namespace resum
