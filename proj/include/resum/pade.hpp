#pragma once

#include "resum/series.hpp"

#include <vector>

namespace resum {

// Rational P/Q with q0 = 1 whose Taylor expansion matches the source
// coefficients through order L+M. poles/residues are the denominator
// roots surviving the spurious-pair (Froissart) filter: a pole is
// dropped when a numerator zero sits within 1e-6 of it or when its
// residue is below 1e-10 in magnitude.
struct PadeApproximant {
    std::vector<cplx> num;        // p_0 ... p_L
    std::vector<cplx> den;        // q_0 ... q_M, q_0 = 1
    std::vector<cplx> poles;
    std::vector<cplx> residues;
    int L = 0;
    int M = 0;
    double scale = 1.0;           // internal balancing factor, recorded for diagnostics

    cplx eval(cplx z) const;
};

// Fit from raw Taylor coefficients c_0 ... (needs at least L+M+1 of them).
// The linear system is solved after rescaling c_n -> c_n scale^n so that
// the Hankel matrix is balanced; rank-deficient systems take the
// minimal-degree solution (free denominators zeroed). Throws
// degenerate_order_error when the fit fails to reproduce the input
// through order L+M to relative 1e-8.
PadeApproximant pade_fit_coeffs(const std::vector<cplx>& c, int L, int M);

PadeApproximant pade_fit(const BorelSeries& B, int L, int M);

// Roots of a complex polynomial (ascending coefficients) via the
// companion matrix; trailing near-zero coefficients are stripped.
std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs);

} // namespace resum
