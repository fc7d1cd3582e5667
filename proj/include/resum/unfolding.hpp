#pragma once

#include "resum/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace resum {

// Two-regular-singular-point problem (x^2 - eps) y' + y = g(x), eps > 0.
// g is a polynomial given as an offset-0 series; its constant term is free.
struct UnfoldingConfig {
    double eps;
    FormalSeries g;
    int order = 40;              // truncation of the local expansions
    double path_clearance = -1.0; // < 0 means the default 0.1*sqrt(eps)

    double clearance() const;
};

struct LocalSolution {
    cplx center;                  // +sqrt(eps) or -sqrt(eps)
    std::vector<cplx> coeffs;     // h_n, powers of (x - center)
    double radius_estimate = 0.0;
};

struct ConnectionReport {
    cplx C2{0.0, 0.0};
    double fit_residual = 0.0;
    bool resonance = false;
    std::optional<int> resonance_order;
    std::string branch_note;
};

enum class PathSide { below, above };

// Frobenius-free local expansion at +sqrt(eps): h_0 = g~_0,
// h_n = (g~_n - (n-1) h_{n-1}) / (1 + 2 sqrt(eps) n).
LocalSolution local_series_plus(const UnfoldingConfig& cfg);

// At -sqrt(eps) the denominators are 1 - 2 sqrt(eps) n. When
// 1/(2 sqrt(eps)) is an integer n* the step n = n* divides by zero:
// a vanishing numerator continues with h_{n*} = 0, anything else is a
// resonance_error carrying n*.
LocalSolution local_series_minus(const UnfoldingConfig& cfg);

// Coefficient C2 of the singular branch ((x+sqrt(eps))/(x-sqrt(eps)))^alpha,
// alpha = 1/(2 sqrt(eps)), in y - h2 near -sqrt(eps), measured by continuing
// the regular solution from +sqrt(eps) along a path passing on the given
// side of the segment between the singular points. The branch of the power
// is anchored to the principal logarithm at the first landing point.
ConnectionReport connection_coefficient(const UnfoldingConfig& cfg,
                                        double approach_radius,
                                        PathSide side = PathSide::below);

// Parameter values eps = 1/(4 n^2) <= eps_max, n = 1..n_max, descending.
std::vector<double> resonance_set(double eps_max, int n_max);

struct SweepRow {
    double eps = 0.0;
    std::optional<cplx> C2;
    std::optional<double> fit_residual;
    double nearest_resonance = 0.0;
    std::string error; // empty on success
};

// connection_coefficient over a list of eps values; failures become rows
// with the diagnostic recorded. The radius rule is "half-gap" (sqrt(eps))
// or "quarter-gap" (sqrt(eps)/2).
std::vector<SweepRow> unfolding_sweep(const FormalSeries& g,
                                      const std::vector<double>& eps_list,
                                      const std::string& radius_rule,
                                      int order = 40);

} // namespace resum
