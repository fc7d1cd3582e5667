#include "resum/cli.hpp"

#include "resum/errors.hpp"
#include "resum/io.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

namespace resum {

namespace {

struct PolyParser {
    const std::string& s;
    size_t i = 0;

    explicit PolyParser(const std::string& text) : s(text) {}

    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }

    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << "polynomial: " << what << " at position " << i << " in \"" << s << "\"";
        throw std::invalid_argument(os.str());
    }

    bool number_ahead() const {
        return i < s.size() && (std::isdigit((unsigned char)s[i]) || s[i] == '.');
    }

    double parse_number() {
        size_t start = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (i < s.size() && s[i] == '.') {
            ++i;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        }
        if (i == start || (i == start + 1 && s[start] == '.'))
            fail("expected a number");
        double v = std::stod(s.substr(start, i - start));
        if (i < s.size() && s[i] == '/') {
            ++i;
            size_t dstart = i;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
            if (i == dstart) fail("expected a denominator");
            double d = std::stod(s.substr(dstart, i - dstart));
            if (d == 0.0) fail("zero denominator");
            v /= d;
        }
        return v;
    }

    PolySpec run() {
        PolySpec out;
        skip();
        if (i == s.size()) fail("empty expression");
        bool first = true;
        while (i < s.size()) {
            double sign = 1.0;
            if (s[i] == '+' || s[i] == '-') {
                sign = s[i] == '-' ? -1.0 : 1.0;
                ++i;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }

            double coef = 1.0;
            bool have_coef = false;
            if (number_ahead()) {
                coef = parse_number();
                have_coef = true;
                skip();
            }
            bool star = false;
            if (i < s.size() && s[i] == '*') {
                star = true;
                ++i;
                skip();
            }

            int power = -1;
            bool is_eps = false;
            if (i + 3 <= s.size() && s.compare(i, 3, "eps") == 0 &&
                (i + 3 == s.size() || !std::isalnum((unsigned char)s[i + 3]))) {
                is_eps = true;
                i += 3;
            } else if (i < s.size() && s[i] == 'x') {
                ++i;
                power = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    size_t pstart = i;
                    while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
                    if (i == pstart) fail("expected an exponent");
                    long p = std::stol(s.substr(pstart, i - pstart));
                    if (p > 64) fail("exponent too large");
                    power = (int)p;
                }
            }

            if (!is_eps && power < 0) {
                if (!have_coef || star) fail("expected 'x', 'eps', or a coefficient");
                power = 0; // bare constant
            }

            if (is_eps) {
                out.eps_weight += sign * coef;
            } else {
                if ((int)out.coeffs.size() <= power) out.coeffs.resize(power + 1, 0.0);
                out.coeffs[power] += sign * coef;
            }
            first = false;
            skip();
        }
        return out;
    }
};

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        std::ostringstream os;
        os << name << " must be a positive finite number";
        throw std::invalid_argument(os.str());
    }
}

void write_output(const std::string& path, std::ostream& out,
                  const std::function<void(std::ostream&)>& writer) {
    if (path == "-") {
        writer(out);
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open output file: " + path);
    writer(f);
}

void emit_json(const json& j, const std::string& path, std::ostream& out) {
    write_output(path, out, [&](std::ostream& os) { os << j.dump(2) << "\n"; });
}

FormalSeries load_g(const std::string& poly_text, const std::string& file,
                    std::optional<double> eps) {
    if (!file.empty()) {
        std::ifstream f(file);
        if (!f) throw std::invalid_argument("cannot open series file: " + file);
        json j = json::parse(f, nullptr, true);
        FormalSeries s = formal_series_from_json(j);
        if (s.offset != 0)
            throw std::invalid_argument("g from file must have offset 0");
        return s;
    }
    return poly_to_series(parse_poly(poly_text), eps, poly_text);
}

// Offset-1 view of the formal solution of x^2 y' + y = g: the offset-0
// recurrence output has c_0 = 0, so the tail c_1, c_2, ... carries it.
FormalSeries solution_series(const FormalSeries& g, int n_coeffs) {
    FormalSeries gp = g;
    if (gp.order() < n_coeffs)
        gp.coeffs.resize(n_coeffs + 1, 0.0);
    FormalSeries c = generalized_euler_coeffs(gp, n_coeffs);
    std::vector<cplx> tail(c.coeffs.begin() + 1, c.coeffs.end());
    return FormalSeries(1, std::move(tail), g.label);
}

} // namespace

PolySpec parse_poly(const std::string& text) { return PolyParser(text).run(); }

FormalSeries poly_to_series(const PolySpec& spec, std::optional<double> eps,
                            const std::string& label) {
    std::vector<cplx> c = spec.coeffs;
    if (c.empty()) c.push_back(0.0);
    if (spec.eps_weight != 0.0) {
        if (!eps)
            throw std::invalid_argument(
                "the polynomial uses 'eps' but this command has no eps parameter");
        c[0] += spec.eps_weight * *eps;
    }
    return FormalSeries(0, std::move(c), label);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "Divergent-series toolkit for x^2 y' + y = g(x) and its unfolding "
        "(x^2 - eps) y' + y = g(x): truncation diagnostics, directional "
        "Laplace resummation, jump measurement across the negative axis, "
        "and connection coefficients between the two singular points."};
    app.require_subcommand(1);

    std::string format = "csv", outpath = "-";

    auto* tbl = app.add_subcommand("euler-table",
                                   "Coefficients of the alternating-factorial solution, "
                                   "optionally with partial sums at a point");
    int tbl_n = 10;
    double tbl_x = 0.0;
    tbl->add_option("--order,--n", tbl_n, "highest order")->capture_default_str();
    auto* tblx = tbl->add_option("--x", tbl_x, "evaluation point (adds partial sums)");
    tbl->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    tbl->add_option("--out", outpath)->capture_default_str();

    auto* tr = app.add_subcommand("truncate",
                                  "Partial sums, error bounds, and remainder integrals "
                                  "order by order at a fixed point");
    double tr_x = 0.1;
    int tr_kmax = 20;
    tr->add_option("--x", tr_x, "evaluation point, 0 < x <= 0.5")->required();
    tr->add_option("--k-max", tr_kmax)->capture_default_str();
    tr->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    tr->add_option("--out", outpath)->capture_default_str();

    auto* bs = app.add_subcommand("borel-sum",
                                  "Directional resummation of the alternating-factorial "
                                  "series at a point");
    double bs_x = 0.1, bs_xim = 0.0, bs_theta = 0.0, bs_tol = 1e-10;
    int bs_order = 24;
    bs->add_option("--x", bs_x, "evaluation point (real part)")->required();
    bs->add_option("--x-im", bs_xim, "imaginary part of the point")->capture_default_str();
    bs->add_option("--theta", bs_theta, "ray angle in radians")->capture_default_str();
    bs->add_option("--order", bs_order)->capture_default_str();
    bs->add_option("--tol", bs_tol)->capture_default_str();
    std::string bs_format = "json";
    bs->add_option("--format", bs_format)->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    bs->add_option("--out", outpath)->capture_default_str();

    auto* st = app.add_subcommand("stokes",
                                  "Borel-plane singularities and exceptional directions; "
                                  "optionally the jump across an arc");
    int st_order = 20;
    std::string st_g = "x", st_gfile;
    double st_x = 0.0, st_tm = 0.0, st_tp = 0.0, st_tol = 1e-10;
    st->add_option("--order", st_order)->capture_default_str();
    st->add_option("--g", st_g, "right-hand side polynomial")->capture_default_str();
    st->add_option("--g-file", st_gfile, "JSON series file for g")->excludes("--g");
    auto* stx = st->add_option("--x", st_x, "jump evaluation point");
    auto* stm = st->add_option("--theta-minus", st_tm);
    auto* stp = st->add_option("--theta-plus", st_tp);
    st->add_option("--tol", st_tol)->capture_default_str();
    stm->needs(stx); stp->needs(stx); stx->needs(stm); stx->needs(stp);
    std::string st_format = "json";
    st->add_option("--format", st_format)->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    st->add_option("--out", outpath)->capture_default_str();

    auto* ax = app.add_subcommand("axioms",
                                  "Consistency suite for the generalized summation rules");
    int ax_order = 24, ax_inst = 3;
    double ax_tol = 1e-10;
    unsigned long long ax_seed = 12345;
    ax->add_option("--order", ax_order)->capture_default_str();
    ax->add_option("--tol", ax_tol)->capture_default_str();
    ax->add_option("--instances", ax_inst)->capture_default_str();
    ax->add_option("--seed", ax_seed)->capture_default_str();
    ax->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    ax->add_option("--out", outpath)->capture_default_str();

    auto* un = app.add_subcommand("unfold",
                                  "Connection coefficient of the singular branch between "
                                  "the two regular singular points");
    double un_eps = 0.0, un_radius = -1.0, un_clear = -1.0;
    int un_order = 40;
    std::string un_g = "x", un_gfile, un_side = "below";
    un->add_option("--eps", un_eps, "unfolding parameter, > 0")->required();
    un->add_option("--g", un_g)->capture_default_str();
    un->add_option("--g-file", un_gfile)->excludes("--g");
    un->add_option("--order", un_order)->capture_default_str();
    un->add_option("--radius", un_radius, "approach radius (default sqrt(eps))");
    un->add_option("--clearance", un_clear, "path clearance (default 0.1 sqrt(eps))");
    un->add_option("--side", un_side)->check(CLI::IsMember({"below", "above"}))
        ->capture_default_str();
    std::string un_format = "json";
    un->add_option("--format", un_format)->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    un->add_option("--out", outpath)->capture_default_str();

    auto* sw = app.add_subcommand("sweep",
                                  "Connection coefficients across a list of eps values");
    std::string sw_g = "x", sw_gfile, sw_eps, sw_rule = "half-gap";
    int sw_order = 40;
    sw->add_option("--g", sw_g)->capture_default_str();
    sw->add_option("--g-file", sw_gfile)->excludes("--g");
    sw->add_option("--eps-list", sw_eps, "comma-separated eps values")->required();
    sw->add_option("--rule", sw_rule, "approach radius rule")
        ->check(CLI::IsMember({"half-gap", "quarter-gap"}))->capture_default_str();
    sw->add_option("--order", sw_order)->capture_default_str();
    sw->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sw->add_option("--out", outpath)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(tbl)) {
            if (tbl_n < 0) throw std::invalid_argument("--n must be nonnegative");
            FormalSeries s = euler_formal_coeffs(tbl_n);
            std::optional<double> x;
            if (tblx->count() > 0) {
                require_positive(tbl_x, "--x");
                x = tbl_x;
            }
            if (format == "csv") {
                write_output(outpath, out,
                             [&](std::ostream& os) { write_coeff_table_csv(os, s, x); });
            } else {
                json j = {{"series", to_json(s)}};
                if (x) {
                    json rows = json::array();
                    for (int n = 0; n <= s.order(); ++n) {
                        cplx ps = eval_partial_sum(s, *x, n + 1);
                        rows.push_back({{"n", n},
                                        {"partial_sum", json::array({ps.real(), ps.imag()})},
                                        {"bound", remainder_bound(n, *x)}});
                    }
                    j["x"] = *x;
                    j["rows"] = rows;
                }
                emit_json(j, outpath, out);
            }
        } else if (app.got_subcommand(tr)) {
            std::vector<TruncationReport> rows = truncation_sweep(tr_x, tr_kmax);
            if (format == "csv") {
                write_output(outpath, out,
                             [&](std::ostream& os) { write_truncation_csv(os, rows); });
            } else {
                json jr = json::array();
                for (const auto& r : rows) jr.push_back(to_json(r));
                emit_json({{"x", tr_x},
                           {"optimal_k", optimal_k(tr_x)},
                           {"superasymptotic", superasymptotic_estimate(tr_x)},
                           {"rows", jr}},
                          outpath, out);
            }
        } else if (app.got_subcommand(bs)) {
            cplx x(bs_x, bs_xim);
            FormalSeries s = euler_formal_coeffs(std::max(bs_order, 4));
            SummationResult r = borel_sum(s, x, Ray(bs_theta), bs_order, bs_tol);
            if (bs_format == "csv") {
                write_output(outpath, out, [&](std::ostream& os) {
                    os << "value_re,value_im,err_estimate,direction,pade_L,pade_M\n"
                       << fmt_double(r.value.real()) << ',' << fmt_double(r.value.imag())
                       << ',' << fmt_double(r.err_estimate) << ','
                       << fmt_double(r.direction.theta) << ',' << r.pade_order.first
                       << ',' << r.pade_order.second << '\n';
                });
            } else {
                emit_json(to_json(r), outpath, out);
            }
        } else if (app.got_subcommand(st)) {
            FormalSeries g = load_g(st_g, st_gfile, std::nullopt);
            FormalSeries s = solution_series(g, std::max(st_order, 4) + 1);
            BorelSeries B = borel_transform(s);
            StokesReport rep = detect_stokes(B, st_order);
            if (stx->count() > 0) {
                if (st_format != "json")
                    throw std::invalid_argument("jump output requires --format json");
                cplx jump = stokes_jump(s, cplx(st_x, 0.0), Ray(st_tm), Ray(st_tp),
                                        st_order, st_tol);
                json j = {{"report", to_json(rep)},
                          {"jump", json::array({jump.real(), jump.imag()})},
                          {"abs_jump", std::abs(jump)}};
                emit_json(j, outpath, out);
            } else if (st_format == "csv") {
                write_output(outpath, out,
                             [&](std::ostream& os) { write_stokes_csv(os, rep); });
            } else {
                emit_json(to_json(rep), outpath, out);
            }
        } else if (app.got_subcommand(ax)) {
            AxiomSuiteConfig cfg;
            cfg.order = ax_order;
            cfg.tol = ax_tol;
            cfg.random_instances = ax_inst;
            cfg.seed = ax_seed;
            AxiomReport rep = run_axiom_suite(cfg);
            if (format == "csv") {
                write_output(outpath, out,
                             [&](std::ostream& os) { write_axioms_csv(os, rep); });
            } else {
                emit_json(to_json(rep), outpath, out);
            }
        } else if (app.got_subcommand(un)) {
            require_positive(un_eps, "--eps");
            FormalSeries g = load_g(un_g, un_gfile, un_eps);
            UnfoldingConfig cfg{un_eps, g, un_order, un_clear};
            double radius = un_radius > 0.0 ? un_radius : std::sqrt(un_eps);
            PathSide side = un_side == "below" ? PathSide::below : PathSide::above;
            ConnectionReport rep = connection_coefficient(cfg, radius, side);
            if (un_format == "csv") {
                write_output(outpath, out, [&](std::ostream& os) {
                    os << "eps,C2_re,C2_im,abs_C2,fit_residual,resonance,resonance_order\n"
                       << fmt_double(un_eps) << ',' << fmt_double(rep.C2.real()) << ','
                       << fmt_double(rep.C2.imag()) << ',' << fmt_double(std::abs(rep.C2))
                       << ',' << fmt_double(rep.fit_residual) << ','
                       << (rep.resonance ? "true" : "false") << ','
                       << (rep.resonance_order ? std::to_string(*rep.resonance_order)
                                               : std::string("nan"))
                       << '\n';
                });
            } else {
                json j = to_json(rep);
                j["eps"] = un_eps;
                j["g"] = g.label;
                emit_json(j, outpath, out);
            }
        } else if (app.got_subcommand(sw)) {
            PolySpec spec;
            FormalSeries gfile_series(0, {0.0});
            bool from_file = !sw_gfile.empty();
            if (from_file) gfile_series = load_g(sw_g, sw_gfile, std::nullopt);
            else spec = parse_poly(sw_g);

            std::vector<double> eps_list;
            std::stringstream ss(sw_eps);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                if (tok.empty()) continue;
                size_t pos = 0;
                double v = std::stod(tok, &pos);
                if (pos != tok.size())
                    throw std::invalid_argument("bad eps value: " + tok);
                eps_list.push_back(v);
            }

            // Materialize g per row so an eps token tracks the sweep.
            std::vector<SweepRow> rows;
            for (double eps : eps_list) {
                FormalSeries g = from_file ? gfile_series
                                           : poly_to_series(spec, eps, sw_g);
                std::vector<SweepRow> one =
                    unfolding_sweep(g, {eps}, sw_rule, sw_order);
                rows.push_back(std::move(one.front()));
            }
            for (const SweepRow& r : rows)
                if (!r.error.empty())
                    err << "eps=" << fmt_double(r.eps) << ": " << r.error << "\n";
            if (format == "csv") {
                write_output(outpath, out,
                             [&](std::ostream& os) { write_sweep_csv(os, rows); });
            } else {
                emit_json(sweep_to_json(rows), outpath, out);
            }
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const resum_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace resum
