#include "resum/pade.hpp"
#include "resum/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace resum {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

// Horner evaluation of an ascending-coefficient polynomial.
cplx polyval(const std::vector<cplx>& a, cplx z) {
    cplx acc = 0.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::vector<cplx> strip_trailing(const std::vector<cplx>& a) {
    double top = 0.0;
    for (const cplx& c : a) top = std::max(top, std::abs(c));
    size_t n = a.size();
    while (n > 1 && std::abs(a[n - 1]) <= 1e-14 * top) --n;
    return std::vector<cplx>(a.begin(), a.begin() + n);
}

} // namespace

std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs) {
    std::vector<cplx> a = strip_trailing(coeffs);
    const int deg = static_cast<int>(a.size()) - 1;
    if (deg < 1) return {};
    MatrixXcd comp = MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -a[i] / a[deg];
    Eigen::ComplexEigenSolver<MatrixXcd> es(comp, false);
    std::vector<cplx> roots(deg);
    for (int i = 0; i < deg; ++i) roots[i] = es.eigenvalues()(i);
    return roots;
}

cplx PadeApproximant::eval(cplx z) const {
    return polyval(num, z) / polyval(den, z);
}

PadeApproximant pade_fit_coeffs(const std::vector<cplx>& c, int L, int M) {
    if (L < 0 || M < 0) throw std::invalid_argument("pade orders must be non-negative");
    if (static_cast<size_t>(L + M + 1) > c.size())
        throw std::invalid_argument("not enough coefficients for the requested pade order");

    const int n_used = L + M;
    // balance the coefficient ladder: c_n spanning many orders of magnitude
    // makes the Hankel system discard genuine structure
    int first = -1, last = -1;
    for (int j = 0; j <= n_used; ++j)
        if (std::abs(c[j]) > 0.0) { if (first < 0) first = j; last = j; }
    PadeApproximant out;
    out.L = L;
    out.M = M;
    if (first < 0) {   // identically zero input
        out.num.assign(1, 0.0);
        out.den.assign(1, 1.0);
        out.num.resize(static_cast<size_t>(L) + 1, 0.0);
        return out;
    }
    double lambda = 1.0;
    if (last > first)
        lambda = std::pow(std::abs(c[first]) / std::abs(c[last]), 1.0 / (last - first));
    if (!std::isfinite(lambda) || lambda <= 0.0) lambda = 1.0;
    lambda = std::clamp(lambda, 1e-8, 1e8);
    out.scale = lambda;

    std::vector<cplx> cs(static_cast<size_t>(n_used) + 1);
    double pw = 1.0;
    for (int j = 0; j <= n_used; ++j) {
        cs[j] = c[j] * pw;
        pw *= lambda;
    }

    // denominator: rows j = L+1 .. L+M of sum_{m=0..M} q_m c_{j-m} = 0
    std::vector<cplx> qs(static_cast<size_t>(M) + 1, 0.0);
    qs[0] = 1.0;
    if (M > 0) {
        MatrixXcd A = MatrixXcd::Zero(M, M);
        VectorXcd rhs(M);
        for (int r = 0; r < M; ++r) {
            int j = L + 1 + r;
            for (int m = 1; m <= M; ++m)
                A(r, m - 1) = (j - m >= 0) ? cs[j - m] : cplx(0.0);
            rhs(r) = -cs[j];
        }
        // Pivots below 1e-10 of the dominant one are rank-null: the source
        // series come from meromorphic functions with few poles, so weak
        // directions are rounding noise and keeping them scatters spurious
        // pole-zero pairs over the plane. Rank comes from the pivoted
        // factorization (its diagonal is non-increasing), but the solve must
        // NOT use the pivot columns: the greedy column choice lands the
        // nonzero unknowns on arbitrary degrees. The minimal-degree
        // denominator is supported on the lowest degrees and those leading
        // columns have full column rank, so a plain least-squares solve on
        // them recovers it, with the higher-degree unknowns pinned to zero.
        // The re-expansion check below catches any genuinely lost direction.
        Eigen::ColPivHouseholderQR<MatrixXcd> qr(A);
        const MatrixXcd& QR = qr.matrixQR();
        double top_pivot = std::abs(QR(0, 0));
        int rank = 0;
        while (rank < M && std::abs(QR(rank, rank)) > 1e-10 * top_pivot) ++rank;
        VectorXcd sol = VectorXcd::Zero(M);
        if (rank > 0)
            sol.head(rank) = Eigen::HouseholderQR<MatrixXcd>(A.leftCols(rank)).solve(rhs);
        for (int m = 1; m <= M; ++m) qs[m] = sol(m - 1);
    }

    // numerator by convolution through order L
    std::vector<cplx> ps(static_cast<size_t>(L) + 1, 0.0);
    for (int l = 0; l <= L; ++l) {
        cplx s = 0.0;
        for (int m = 0; m <= std::min(l, M); ++m) s += qs[m] * cs[l - m];
        ps[l] = s;
    }
    // when the denominator degree was cut, trailing numerator entries are
    // exact zeros drowned in roundoff; left in place they dominate far-field
    // evaluation through the highest powers
    {
        double pmax = 0.0;
        for (const cplx& p : ps) pmax = std::max(pmax, std::abs(p));
        for (size_t l = ps.size(); l-- > 0 && std::abs(ps[l]) <= 1e-14 * pmax;)
            ps[l] = 0.0;
    }

    // the fit must reproduce its own input: Taylor re-expansion through L+M
    {
        double ladder_top = 0.0;
        for (int j = 0; j <= n_used; ++j) ladder_top = std::max(ladder_top, std::abs(cs[j]));
        std::vector<cplx> t(static_cast<size_t>(n_used) + 1, 0.0);
        for (int l = 0; l <= n_used; ++l) {
            cplx v = (l <= L) ? ps[l] : cplx(0.0);
            for (int m = 1; m <= std::min(l, M); ++m) v -= qs[m] * t[l - m];
            t[l] = v;
            if (std::abs(t[l] - cs[l]) > 1e-8 * ladder_top)
                throw degenerate_order_error(
                    "rational fit does not reproduce the series; reduce the denominator degree");
        }
    }

    // map back to the unscaled variable
    out.num.resize(static_cast<size_t>(L) + 1);
    out.den.resize(static_cast<size_t>(M) + 1);
    pw = 1.0;
    for (int l = 0; l <= L; ++l) { out.num[l] = ps[l] / pw; pw *= lambda; }
    pw = 1.0;
    for (int m = 0; m <= M; ++m) { out.den[m] = qs[m] / pw; pw *= lambda; }

    // poles and residues in the balanced basis, then unscale
    std::vector<cplx> wpoles = polynomial_roots(qs);
    std::vector<cplx> wzeros = polynomial_roots(ps);
    std::vector<cplx> dqs(qs.size() > 1 ? qs.size() - 1 : 0);
    for (size_t m = 1; m < qs.size(); ++m) dqs[m - 1] = static_cast<double>(m) * qs[m];
    for (const cplx& w : wpoles) {
        cplx res = lambda * polyval(ps, w) / polyval(dqs, w);
        cplx pole = lambda * w;
        bool spurious = std::abs(res) < 1e-10;
        for (const cplx& zw : wzeros)
            if (std::abs(lambda * zw - pole) < 1e-6) { spurious = true; break; }
        if (!spurious) {
            out.poles.push_back(pole);
            out.residues.push_back(res);
        }
    }
    return out;
}

PadeApproximant pade_fit(const BorelSeries& B, int L, int M) {
    return pade_fit_coeffs(B.coeffs, L, M);
}

} // namespace resum
