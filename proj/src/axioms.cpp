#include "resum/axioms.hpp"

#include "resum/borel.hpp"
#include "resum/errors.hpp"
#include "resum/pade.hpp"
#include "resum/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace resum {

namespace {

constexpr double kConvergentRatio = 0.98; // tail ratio bound for the plain-sum route
constexpr double kAxisClearance = 0.05;   // rad, pole this close to R+ blocks the integral

void check_terms(const NumericSeries& a) {
    if (a.terms.empty())
        throw std::invalid_argument("numeric series must have at least one term");
    for (const cplx& t : a.terms)
        if (!std::isfinite(t.real()) || !std::isfinite(t.imag()))
            throw std::invalid_argument("numeric series has a non-finite term");
}

// Largest |a_{n+1}/a_n| over the trailing half, ignoring zero terms.
// Returns 0 when the tail carries no information (all zeros).
double tail_ratio(const std::vector<cplx>& t) {
    size_t n = t.size();
    if (n < 2) return 0.0;
    double best = 0.0;
    for (size_t i = n / 2; i + 1 < n; ++i) {
        double lo = std::abs(t[i]);
        if (lo == 0.0) continue;
        best = std::max(best, std::abs(t[i + 1]) / lo);
    }
    return best;
}

cplx compensated_sum(const std::vector<cplx>& t) {
    long double re = 0.0L, im = 0.0L;
    for (const cplx& v : t) { re += v.real(); im += v.imag(); }
    return {(double)re, (double)im};
}

std::vector<cplx> borel_coeffs(const std::vector<cplx>& t, int count) {
    std::vector<cplx> b(count);
    double fact = 1.0;
    for (int n = 0; n < count; ++n) {
        if (n > 0) fact *= n;
        b[n] = t[n] / fact;
    }
    return b;
}

} // namespace

NumericSeries::NumericSeries(std::vector<cplx> t, std::string lab)
    : terms(std::move(t)), label(std::move(lab)) {
    check_terms(*this);
}

cplx borel_sum_numeric(const NumericSeries& a, int order, double tol) {
    check_terms(a);
    if (!(tol > 0.0))
        throw std::invalid_argument("borel_sum_numeric: tolerance must be positive");

    if (tail_ratio(a.terms) <= kConvergentRatio)
        return compensated_sum(a.terms);

    int order_eff = std::min<int>(order, (int)a.terms.size() - 1);
    if (order_eff < 2)
        throw std::invalid_argument("borel_sum_numeric: too few terms for continuation");
    int L = order_eff / 2, M = order_eff / 2;

    std::vector<cplx> b = borel_coeffs(a.terms, L + M + 1);
    PadeApproximant P = pade_fit_coeffs(b, L, M);
    for (const cplx& p : P.poles) {
        if (std::abs(std::arg(p)) < kAxisClearance) {
            std::ostringstream os;
            os << "borel_sum_numeric: continuation pole at (" << p.real() << ", "
               << p.imag() << ") obstructs the positive real axis";
            throw summability_error(os.str());
        }
    }
    QuadratureResult q = laguerre_ladder([&P](double u) { return P.eval(cplx(u, 0.0)); }, tol);
    return q.value;
}

bool abs_summable_on_axis(const NumericSeries& a, int order) {
    check_terms(a);
    std::vector<cplx> mags(a.terms.size());
    for (size_t i = 0; i < a.terms.size(); ++i) mags[i] = std::abs(a.terms[i]);

    if (tail_ratio(mags) <= kConvergentRatio) return true;

    int order_eff = std::min<int>(order, (int)mags.size() - 1);
    if (order_eff < 2)
        throw std::invalid_argument("abs_summable_on_axis: too few terms");
    int half = order_eff / 2;
    std::vector<cplx> b = borel_coeffs(mags, 2 * half + 1);

    // kappa = (n+1) b_{n+1}/b_n estimates the geometric rate of the terms
    // themselves: constant kappa means |a_n| ~ kappa^n (Borel image ~
    // e^{kappa z}, integrable against e^{-z} iff kappa < 1), while growth
    // in n means a finite Borel radius and the pole location decides.
    std::vector<double> rates;
    for (size_t n = b.size() / 2; n + 1 < b.size(); ++n) {
        double lo = std::abs(b[n]);
        if (lo == 0.0) continue;
        rates.push_back((n + 1) * std::abs(b[n + 1]) / lo);
    }
    if (rates.empty()) return true;
    std::sort(rates.begin(), rates.end());
    double kappa = rates[rates.size() / 2];
    if (kappa <= kConvergentRatio) return true;
    if (kappa <= 3.0) return false;

    PadeApproximant P = pade_fit_coeffs(b, half, half);
    for (const cplx& p : P.poles)
        if (std::abs(std::arg(p)) < kAxisClearance) return false;
    return true;
}

namespace {

std::vector<cplx> geometric_terms(cplx r, int n) {
    std::vector<cplx> t(n);
    cplx v = 1.0;
    for (int i = 0; i < n; ++i) { t[i] = v; v *= r; }
    return t;
}

// Term sequence of the alternating-factorial series evaluated at x:
// a_n = (-1)^n n! x^{n+1}.
std::vector<cplx> euler_terms(double x, int n) {
    std::vector<cplx> t(n);
    cplx v = x;
    for (int i = 0; i < n; ++i) { t[i] = v; v *= -x * (i + 1); }
    return t;
}

struct InstanceRun {
    double dev = 0.0;
    std::string note;
    bool failed = false;
};

template <typename F>
void run_instance(InstanceRun& acc, const std::string& label, F&& f) {
    try {
        acc.dev = std::max(acc.dev, f());
    } catch (const resum_error& e) {
        acc.failed = true;
        if (!acc.note.empty()) acc.note += "; ";
        acc.note += label + ": " + e.what();
    }
}

} // namespace

AxiomReport run_axiom_suite(const AxiomSuiteConfig& config) {
    if (config.random_instances < 1 || config.order < 6 || !(config.tol > 0.0))
        throw std::invalid_argument("run_axiom_suite: bad configuration");

    AxiomReport rep;
    rep.seed = config.seed;
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const int ord = config.order;
    const double tol = config.tol;

    // 1: agreement with convergent sums.
    {
        InstanceRun run;
        const cplx rot = std::polar(0.9, 3.14159265358979323846 / 3.0);
        const cplx ratios[] = {0.5, -0.5, 0.3, -0.9, rot};
        for (const cplx& r : ratios) {
            std::ostringstream lab; lab << "geometric r=(" << r.real() << "," << r.imag() << ")";
            run_instance(run, lab.str(), [&] {
                cplx s = borel_sum_numeric(NumericSeries(geometric_terms(r, 300)), ord, tol);
                return std::abs(s - 1.0 / (1.0 - r));
            });
        }
        rep.properties.push_back({1, "geometric ratios 0.5, -0.5, 0.3, -0.9, 0.9 exp(i pi/3)",
                                  run.dev, 1e-9, !run.failed && run.dev <= 1e-9, run.note});
    }

    // 2: linearity with a random complex weight.
    {
        InstanceRun run;
        const double xs[] = {0.1, 0.2, 0.05};
        const double rs[] = {-0.4, 0.3, 0.5};
        for (int k = 0; k < config.random_instances; ++k) {
            cplx C(uni(rng), uni(rng));
            double x = xs[k % 3], r = rs[k % 3];
            std::ostringstream lab;
            lab << "x=" << x << " r=" << r << " C=(" << C.real() << "," << C.imag() << ")";
            run_instance(run, lab.str(), [&] {
                std::vector<cplx> a = euler_terms(x, ord + 1);
                std::vector<cplx> bshort = geometric_terms(r, ord + 1);
                std::vector<cplx> m(ord + 1);
                for (int i = 0; i <= ord; ++i) m[i] = a[i] + C * bshort[i];
                cplx sa = borel_sum_numeric(NumericSeries(a), ord, tol);
                cplx sb = borel_sum_numeric(NumericSeries(bshort), ord, tol);
                cplx sm = borel_sum_numeric(NumericSeries(m), ord, tol);
                return std::abs(sm - (sa + C * sb));
            });
        }
        rep.properties.push_back({2, "alternating-factorial at x plus C times geometric(r)",
                                  run.dev, 1e-8, !run.failed && run.dev <= 1e-8, run.note});
    }

    // 3: absolute-sum classification (deviation counts misclassified instances).
    {
        InstanceRun run;
        std::vector<cplx> fac(40);
        { cplx v = 1.0; for (int n = 0; n < 40; ++n) { fac[n] = v; v *= -(n + 1.0); } }
        struct Case { NumericSeries s; bool expect; };
        Case cases[] = {
            {NumericSeries(fac, "alternating factorial"), false},
            {NumericSeries(geometric_terms(0.5, 200), "geometric 0.5"), true},
            {NumericSeries(geometric_terms(-1.0, 200), "alternating units"), false},
            {NumericSeries(geometric_terms(-0.8, 200), "geometric -0.8"), true},
        };
        for (const Case& c : cases) {
            run_instance(run, c.s.label, [&] {
                return abs_summable_on_axis(c.s, ord) == c.expect ? 0.0 : 1.0;
            });
        }
        rep.properties.push_back({3, "factorial, geometric 0.5, alternating units, geometric -0.8",
                                  run.dev, 0.5, !run.failed && run.dev <= 0.5, run.note});
    }

    // 4: products of convergent series.
    {
        InstanceRun run;
        const double pairs[][2] = {{0.4, -0.3}, {0.5, 0.2}};
        for (const auto& pr : pairs) {
            std::ostringstream lab; lab << "geometric " << pr[0] << " times geometric " << pr[1];
            run_instance(run, lab.str(), [&] {
                const int n = 200;
                std::vector<cplx> a = geometric_terms(pr[0], n);
                std::vector<cplx> b = geometric_terms(pr[1], n);
                std::vector<cplx> c(n, 0.0);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
                cplx sa = borel_sum_numeric(NumericSeries(a), ord, tol);
                cplx sb = borel_sum_numeric(NumericSeries(b), ord, tol);
                cplx sc = borel_sum_numeric(NumericSeries(c), ord, tol);
                return std::abs(sc - sa * sb);
            });
        }
        rep.properties.push_back({4, "geometric(0.4)*geometric(-0.3), geometric(0.5)*geometric(0.2)",
                                  run.dev, 1e-8, !run.failed && run.dev <= 1e-8, run.note});
    }

    // 5: dropping the leading term subtracts it from the sum.
    {
        InstanceRun run;
        run_instance(run, "alternating factorial at x=1", [&] {
            std::vector<cplx> a = euler_terms(1.0, ord + 2);
            std::vector<cplx> shifted(a.begin() + 1, a.end());
            cplx s = borel_sum_numeric(NumericSeries(a), ord, tol);
            cplx s1 = borel_sum_numeric(NumericSeries(shifted), ord, tol);
            return std::abs(s1 - (s - a[0]));
        });
        run_instance(run, "geometric 0.5", [&] {
            std::vector<cplx> a = geometric_terms(0.5, 200);
            std::vector<cplx> shifted(a.begin() + 1, a.end());
            cplx s = borel_sum_numeric(NumericSeries(a), ord, tol);
            cplx s1 = borel_sum_numeric(NumericSeries(shifted), ord, tol);
            return std::abs(s1 - (s - a[0]));
        });
        rep.properties.push_back({5, "alternating factorial at x=1; geometric 0.5",
                                  run.dev, 1e-8, !run.failed && run.dev <= 1e-8, run.note});
    }

    // 6: termwise derivative matches a five-point derivative of the sum.
    {
        InstanceRun run;
        FormalSeries s = euler_formal_coeffs(40);
        FormalSeries d = formal_derivative(s);
        for (double x : {0.2, 0.3}) {
            std::ostringstream lab; lab << "alternating factorial, x=" << x;
            run_instance(run, lab.str(), [&] {
                double qt = std::min(tol, 1e-12);
                std::vector<cplx> tail(d.coeffs.begin() + 1, d.coeffs.end());
                cplx sd = d.coeffs[0] +
                          borel_sum(FormalSeries(1, tail), x, Ray(0.0), ord, qt).value;
                auto S = [&](double xx) {
                    return borel_sum(s, xx, Ray(0.0), ord, qt).value;
                };
                double h = 1e-3;
                cplx fd = (-S(x + 2 * h) + 8.0 * S(x + h) - 8.0 * S(x - h) + S(x - 2 * h)) / (12.0 * h);
                return std::abs(sd - fd);
            });
        }
        rep.properties.push_back({6, "alternating factorial at x=0.2, 0.3; h=1e-3",
                                  run.dev, 1e-8, !run.failed && run.dev <= 1e-8, run.note});
    }

    return rep;
}

} // namespace resum
