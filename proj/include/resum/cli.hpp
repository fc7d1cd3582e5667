#pragma once

#include "resum/series.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace resum {

// Polynomial grammar for --g: a sum of monomials "c", "c x^n", "x^n",
// with decimal ("0.5") or rational ("1/3") coefficients and an optional
// "eps" token that stands for the unfolding parameter in the constant
// term ("x + x^2 - eps"). No exponent notation, no parentheses.
struct PolySpec {
    std::vector<cplx> coeffs;   // by power of x
    double eps_weight = 0.0;    // coefficient of the eps token
};

PolySpec parse_poly(const std::string& text);

// Materialize at a concrete eps; eps = nullopt rejects specs that used
// the token. The source text becomes the series label.
FormalSeries poly_to_series(const PolySpec& spec, std::optional<double> eps,
                            const std::string& label);

// Exit codes: 0 success, 2 for argument or precondition problems,
// 1 for numeric failures (resonance, summability, accuracy).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace resum
