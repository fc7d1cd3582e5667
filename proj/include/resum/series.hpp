#pragma once

#include <complex>
#include <string>
#include <vector>

namespace resum {

using cplx = std::complex<double>;

// Truncated formal power series  sum_{n>=0} a_n x^(n+offset).
// The offset is data, not convention: both 0 and 1 appear throughout
// and silent reindexing is a classic source of off-by-one bugs.
struct FormalSeries {
    int offset = 0;                 // 0 or 1
    std::vector<cplx> coeffs;       // a_0 ... a_N, non-empty, all finite
    std::string label;

    FormalSeries() = default;
    FormalSeries(int off, std::vector<cplx> c, std::string lab = {});

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Borel-plane image: b_n = a_n / n! with an estimated convergence radius.
struct BorelSeries {
    std::vector<cplx> coeffs;
    int source_offset = 1;
    double radius_estimate = 0.0;   // > 0 whenever b_n is geometrically bounded
    std::string label;
};

// a_n = (-1)^n n! for n = 0..N, via a_n = -n a_{n-1}. Offset 1.
// Throws std::overflow_error for N > 170 (n! leaves double range);
// work in the Borel plane instead at such orders.
FormalSeries euler_formal_coeffs(int N);

// Coefficient recurrence for (x^2) y' + y = g(x) with g(0) = 0:
// c_0 = 0, c_1 = g_1, c_n = g_n - (n-1) c_{n-1}. Offset 0.
// g must have offset 0 and g_0 = 0; N may not exceed g's order.
FormalSeries generalized_euler_coeffs(const FormalSeries& g, int N);

// b_n = a_n/n! for an offset-1 series; radius estimated from the tail
// (last max(5, N/4) coefficients) as 1 / max |b_n|^(1/n).
BorelSeries borel_transform(const FormalSeries& s);

// Convolution product, both inputs offset 0, truncated at min order.
FormalSeries cauchy_product(const FormalSeries& a, const FormalSeries& b);

// Term-by-term derivative with explicit offset bookkeeping.
FormalSeries formal_derivative(const FormalSeries& s);

// Partial sum of the first k terms: sum_{n=0}^{k-1} a_n x^(n+offset),
// Horner evaluation. k = 0 gives 0; k may not exceed N+1.
cplx eval_partial_sum(const FormalSeries& s, cplx x, int k);

} // namespace resum
