#include "resum/unfolding.hpp"

#include "resum/errors.hpp"
#include "resum/exact.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace resum {

namespace {

constexpr double kResonanceTol = 1e-9;   // |1/(2 sqrt(eps)) - n| below this is resonant
constexpr double kVanishFraction = 1e-10; // numerator below this * scale counts as zero
constexpr double kRadiusCap = 1e6;        // stands in for an infinite radius estimate
constexpr double kFitLimit = 1e-4;
constexpr double kOdeTol = 1e-12;

void validate(const UnfoldingConfig& cfg) {
    if (!(cfg.eps > 0.0) || !std::isfinite(cfg.eps))
        throw std::domain_error("unfolding: eps must be a positive real number");
    if (cfg.g.offset != 0)
        throw std::invalid_argument("unfolding: g must be an offset-0 polynomial");
    if (cfg.order < 2)
        throw std::invalid_argument("unfolding: order must be at least 2");
    if (cfg.path_clearance == 0.0 || (cfg.path_clearance > 0.0 && !std::isfinite(cfg.path_clearance)))
        throw std::invalid_argument("unfolding: path clearance must be positive");
}

// Coefficients of p(c + u) by the Horner shift; exact for polynomials.
std::vector<cplx> re_expand(const std::vector<cplx>& p, cplx c) {
    std::vector<cplx> out = p;
    int n = (int)out.size();
    for (int k = 0; k < n; ++k)
        for (int j = n - 2; j >= k; --j)
            out[j] += c * out[j + 1];
    return out;
}

double radius_from_tail(const std::vector<cplx>& h) {
    int n = (int)h.size() - 1;
    if (n < 1) return kRadiusCap;
    int tail = std::max(5, n / 4);
    int lo = std::max(1, n + 1 - tail);
    double m = 0.0;
    for (int i = lo; i <= n; ++i)
        m = std::max(m, std::pow(std::abs(h[i]), 1.0 / i));
    if (m <= 1.0 / kRadiusCap) return kRadiusCap;
    return 1.0 / m;
}

cplx local_eval(const LocalSolution& h, cplx u) {
    cplx acc = 0.0;
    for (auto it = h.coeffs.rbegin(); it != h.coeffs.rend(); ++it)
        acc = acc * u + *it;
    return acc;
}

std::optional<int> resonant_index(double eps) {
    double alpha = 0.5 / std::sqrt(eps);
    long long n = std::llround(alpha);
    if (n >= 1 && std::abs(alpha - (double)n) < kResonanceTol) return (int)n;
    return std::nullopt;
}

LocalSolution local_series(const UnfoldingConfig& cfg, int sign) {
    validate(cfg);
    double se = std::sqrt(cfg.eps);
    cplx center = sign * se;

    std::vector<cplx> gt = cfg.g.coeffs;
    gt.resize(std::max<size_t>(gt.size(), cfg.order + 1), 0.0);
    gt = re_expand(gt, center);
    gt.resize(cfg.order + 1, 0.0);

    std::optional<int> nstar = sign < 0 ? resonant_index(cfg.eps) : std::nullopt;

    double scale = 1.0;
    for (const cplx& c : gt) scale = std::max(scale, std::abs(c));

    std::vector<cplx> h(cfg.order + 1);
    h[0] = gt[0];
    for (int n = 1; n <= cfg.order; ++n) {
        cplx num = gt[n] - (double)(n - 1) * h[n - 1];
        if (nstar && n == *nstar) {
            if (std::abs(num) <= kVanishFraction * scale) {
                h[n] = 0.0; // the resonant step is degenerate and the solution continues
                continue;
            }
            std::ostringstream os;
            os << "local expansion at the left singular point breaks down: the coefficient of "
                  "order " << n << " would divide by 1 - 2 sqrt(eps) n = 0 with numerator "
               << std::abs(num);
            throw resonance_error(os.str(), n);
        }
        h[n] = num / (1.0 + sign * 2.0 * se * n);
        scale = std::max(scale, std::abs(h[n]));
    }

    LocalSolution out;
    out.center = center;
    out.coeffs = std::move(h);
    out.radius_estimate = radius_from_tail(out.coeffs);
    return out;
}

double segment_distance(cplx p, cplx a, cplx b) {
    cplx ab = b - a;
    double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = std::clamp((std::conj(ab) * (p - a)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

} // namespace

double UnfoldingConfig::clearance() const {
    return path_clearance < 0.0 ? 0.1 * std::sqrt(eps) : path_clearance;
}

LocalSolution local_series_plus(const UnfoldingConfig& cfg) { return local_series(cfg, +1); }
LocalSolution local_series_minus(const UnfoldingConfig& cfg) { return local_series(cfg, -1); }

ConnectionReport connection_coefficient(const UnfoldingConfig& cfg,
                                        double approach_radius,
                                        PathSide side) {
    validate(cfg);
    double se = std::sqrt(cfg.eps);
    double alpha = 0.5 / se;
    double delta = cfg.clearance();
    double r = approach_radius;

    LocalSolution h1 = local_series_plus(cfg);
    LocalSolution h2 = local_series_minus(cfg);

    if (!(r > 0.0) || !std::isfinite(r))
        throw std::invalid_argument("connection: approach radius must be positive");
    if (r >= std::min(h1.radius_estimate, h2.radius_estimate))
        throw std::invalid_argument("connection: approach radius exceeds a local radius estimate");
    if (r + delta >= 2.0 * se)
        throw std::invalid_argument("connection: approach radius leaves no clearance between the singular points");
    if (r <= delta)
        throw std::invalid_argument("connection: approach radius is inside the clearance band");

    double ori = side == PathSide::below ? -1.0 : 1.0;
    double D = se;
    cplx xs = cplx(se - r, 0.0);
    cplx Lr[3] = {
        cplx(-se - r, 0.0),
        cplx(-se, 0.0) + r * std::polar(1.0, ori * 5.0 * 3.14159265358979323846 / 6.0),
        cplx(-se, 0.0) + r * std::polar(1.0, -ori * 5.0 * 3.14159265358979323846 / 6.0),
    };
    std::vector<cplx> path = {xs, xs + cplx(0.0, ori * D),
                              Lr[0] + cplx(0.0, ori * D), Lr[0], Lr[1], Lr[2]};

    for (size_t i = 0; i + 1 < path.size(); ++i) {
        double d = std::min(segment_distance(cplx(se, 0.0), path[i], path[i + 1]),
                            segment_distance(cplx(-se, 0.0), path[i], path[i + 1]));
        if (d < delta * (1.0 - 1e-12))
            throw std::invalid_argument("connection: continuation path violates the pole clearance");
    }

    std::vector<cplx> gpoly = cfg.g.coeffs;
    auto gfun = [&gpoly](cplx x) {
        cplx acc = 0.0;
        for (auto it = gpoly.rbegin(); it != gpoly.rend(); ++it) acc = acc * x + *it;
        return acc;
    };

    cplx y0 = local_eval(h1, xs - cplx(se, 0.0));
    cplx y[3];
    y[0] = ode_continue(cfg.eps, gfun, xs, y0,
                        {path[0], path[1], path[2], path[3]}, kOdeTol);
    y[1] = ode_continue(cfg.eps, gfun, Lr[0], y[0], {Lr[0], Lr[1]}, kOdeTol);
    y[2] = ode_continue(cfg.eps, gfun, Lr[1], y[1], {Lr[1], Lr[2]}, kOdeTol);

    // Branch of ((x+se)/(x-se))^alpha: principal logarithm at the first
    // landing point, then small principal-log increments around the cluster.
    cplx logw[3];
    logw[0] = alpha * (std::log(Lr[0] + se) - std::log(Lr[0] - se));
    for (int j = 1; j < 3; ++j)
        logw[j] = logw[j - 1] +
                  alpha * (std::log((Lr[j] + se) / (Lr[j - 1] + se)) -
                           std::log((Lr[j] - se) / (Lr[j - 1] - se)));

    cplx W[3], resid[3];
    double ymax = 1.0;
    for (int j = 0; j < 3; ++j) {
        W[j] = std::exp(logw[j]);
        resid[j] = y[j] - local_eval(h2, Lr[j] + cplx(se, 0.0));
        ymax = std::max(ymax, std::abs(y[j]));
    }

    cplx num = 0.0;
    double den = 0.0;
    for (int j = 0; j < 3; ++j) {
        num += std::conj(W[j]) * resid[j];
        den += std::norm(W[j]);
    }
    cplx C2 = num / den;

    double fit = 0.0;
    for (int j = 0; j < 3; ++j)
        fit = std::max(fit, std::abs(resid[j] - C2 * W[j]));
    fit /= ymax;

    if (fit > kFitLimit) {
        std::ostringstream os;
        os << "connection: landing residuals are not proportional to the singular branch "
              "(fit residual " << fit << "); integration accuracy or branch bookkeeping failed";
        throw accuracy_error(os.str(), fit);
    }

    ConnectionReport rep;
    rep.C2 = C2;
    rep.fit_residual = fit;
    if (auto n = resonant_index(cfg.eps)) {
        rep.resonance = true;
        rep.resonance_order = *n;
    }
    std::ostringstream note;
    note << "branch anchored to the principal logarithm at the first landing point; "
         << "path passes " << (side == PathSide::below ? "below" : "above")
         << " the segment between the singular points";
    if (rep.resonance)
        note << "; resonant coefficient of order " << *rep.resonance_order
             << " continued with a vanishing numerator";
    rep.branch_note = note.str();
    return rep;
}

std::vector<double> resonance_set(double eps_max, int n_max) {
    if (!(eps_max > 0.0) || eps_max > 1.0)
        throw std::invalid_argument("resonance_set: eps_max must lie in (0, 1]");
    if (n_max < 0)
        throw std::invalid_argument("resonance_set: n_max must be nonnegative");
    std::vector<double> out;
    for (int n = 1; n <= n_max; ++n) {
        double v = 1.0 / (4.0 * (double)n * n);
        if (v <= eps_max) out.push_back(v);
    }
    return out;
}

std::vector<SweepRow> unfolding_sweep(const FormalSeries& g,
                                      const std::vector<double>& eps_list,
                                      const std::string& radius_rule,
                                      int order) {
    double factor;
    if (radius_rule == "half-gap") factor = 1.0;
    else if (radius_rule == "quarter-gap") factor = 0.5;
    else throw std::invalid_argument("unfolding_sweep: radius rule must be half-gap or quarter-gap");

    std::vector<SweepRow> rows;
    for (double eps : eps_list) {
        SweepRow row;
        row.eps = eps;
        if (eps > 0.0) {
            double alpha = 0.5 / std::sqrt(eps);
            long long n0 = std::max(1ll, std::llround(alpha));
            row.nearest_resonance = std::abs(eps - 1.0 / (4.0 * n0 * n0));
            for (long long n : {n0 - 1, n0 + 1})
                if (n >= 1)
                    row.nearest_resonance = std::min(
                        row.nearest_resonance, std::abs(eps - 1.0 / (4.0 * n * n)));
        }
        try {
            UnfoldingConfig cfg{eps, g, order, -1.0};
            ConnectionReport rep = connection_coefficient(cfg, factor * std::sqrt(eps));
            row.C2 = rep.C2;
            row.fit_residual = rep.fit_residual;
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace resum
