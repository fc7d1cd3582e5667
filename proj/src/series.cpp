#include "resum/series.hpp"
#include "resum/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace resum {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_invariants(int offset, const std::vector<cplx>& coeffs) {
    if (offset != 0 && offset != 1)
        throw std::invalid_argument("series offset must be 0 or 1");
    if (coeffs.empty())
        throw std::invalid_argument("series needs at least one coefficient");
    for (const cplx& c : coeffs)
        if (!finite(c))
            throw std::invalid_argument("series coefficient is not finite");
}

} // namespace

FormalSeries::FormalSeries(int off, std::vector<cplx> c, std::string lab)
    : offset(off), coeffs(std::move(c)), label(std::move(lab)) {
    check_invariants(offset, coeffs);
}

FormalSeries euler_formal_coeffs(int N) {
    if (N < 0) throw std::invalid_argument("order must be non-negative");
    if (N > 170)
        throw std::overflow_error(
            "factorial coefficients overflow past order 170; use the Borel-plane representation");
    std::vector<cplx> a(static_cast<size_t>(N) + 1);
    a[0] = 1.0;
    for (int n = 1; n <= N; ++n) a[n] = -static_cast<double>(n) * a[n - 1];
    return FormalSeries(1, std::move(a), "alternating factorial");
}

FormalSeries generalized_euler_coeffs(const FormalSeries& g, int N) {
    if (g.offset != 0)
        throw std::invalid_argument("right-hand side must be an offset-0 series");
    if (std::abs(g.coeffs[0]) != 0.0)
        throw std::invalid_argument("right-hand side must vanish at 0");
    if (N < 0 || N > g.order())
        throw std::invalid_argument("requested order exceeds the supplied expansion");
    std::vector<cplx> c(static_cast<size_t>(N) + 1, 0.0);
    if (N >= 1) c[1] = g.coeffs[1];
    for (int n = 2; n <= N; ++n)
        c[n] = g.coeffs[n] - static_cast<double>(n - 1) * c[n - 1];
    return FormalSeries(0, std::move(c), "formal solution of " + (g.label.empty() ? std::string("ode") : g.label));
}

BorelSeries borel_transform(const FormalSeries& s) {
    if (s.offset != 1)
        throw std::invalid_argument("borel transform expects an offset-1 series");
    const int N = s.order();
    std::vector<cplx> b(s.coeffs.size());
    double fact = 1.0;
    for (int n = 0; n <= N; ++n) {
        if (n > 0) fact *= n;
        b[n] = s.coeffs[n] / fact;
    }
    // radius from the last max(5, N/4) coefficients: 1 / max |b_n|^(1/n)
    int tail = std::max(5, N / 4);
    int lo = std::max(1, N + 1 - tail);
    double inv_r = 0.0;
    for (int n = lo; n <= N; ++n) {
        double m = std::abs(b[n]);
        if (m > 0.0) inv_r = std::max(inv_r, std::pow(m, 1.0 / n));
    }
    BorelSeries out;
    out.coeffs = std::move(b);
    out.source_offset = s.offset;
    out.radius_estimate = inv_r > 0.0 ? 1.0 / inv_r
                                      : std::numeric_limits<double>::infinity();
    out.label = s.label;
    return out;
}

FormalSeries cauchy_product(const FormalSeries& a, const FormalSeries& b) {
    if (a.offset != 0 || b.offset != 0)
        throw std::invalid_argument("cauchy product expects offset-0 factors");
    const int N = std::min(a.order(), b.order());
    std::vector<cplx> c(static_cast<size_t>(N) + 1, 0.0);
    for (int n = 0; n <= N; ++n) {
        // symmetric pairing keeps the sum bitwise commutative in the factors
        cplx s = 0.0;
        int i = 0, j = n;
        for (; i < j; ++i, --j)
            s += a.coeffs[i] * b.coeffs[j] + a.coeffs[j] * b.coeffs[i];
        if (i == j) s += a.coeffs[i] * b.coeffs[i];
        c[n] = s;
    }
    return FormalSeries(0, std::move(c));
}

FormalSeries formal_derivative(const FormalSeries& s) {
    const int N = s.order();
    if (s.offset == 1) {
        // d/dx sum a_n x^(n+1) = sum (n+1) a_n x^n
        std::vector<cplx> c(s.coeffs.size());
        for (int n = 0; n <= N; ++n) c[n] = static_cast<double>(n + 1) * s.coeffs[n];
        return FormalSeries(0, std::move(c));
    }
    // offset 0: constant drops out; derivative of a constant is the zero series
    if (N == 0) return FormalSeries(0, {0.0});
    std::vector<cplx> c(static_cast<size_t>(N));
    for (int n = 1; n <= N; ++n) c[n - 1] = static_cast<double>(n) * s.coeffs[n];
    return FormalSeries(0, std::move(c));
}

cplx eval_partial_sum(const FormalSeries& s, cplx x, int k) {
    if (k < 0 || k > s.order() + 1)
        throw std::invalid_argument("partial-sum length out of range");
    if (k == 0) return 0.0;
    cplx acc = s.coeffs[k - 1];
    for (int n = k - 2; n >= 0; --n) acc = acc * x + s.coeffs[n];
    if (s.offset == 1) acc *= x;
    return acc;
}

} // namespace resum
