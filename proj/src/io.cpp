#include "resum/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace resum {

namespace {

json jc(const cplx& z) { return json::array({z.real(), z.imag()}); }

std::string csv_quote(const std::string& s) {
    bool needs = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

} // namespace

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json to_json(const FormalSeries& s) {
    json re = json::array(), im = json::array();
    for (const cplx& c : s.coeffs) {
        re.push_back(c.real());
        im.push_back(c.imag());
    }
    return {{"offset", s.offset}, {"re", re}, {"im", im}, {"label", s.label}};
}

FormalSeries formal_series_from_json(const json& j) {
    int offset = j.at("offset").get<int>();
    auto re = j.at("re").get<std::vector<double>>();
    std::vector<double> im(re.size(), 0.0);
    if (j.contains("im")) {
        im = j.at("im").get<std::vector<double>>();
        if (im.size() != re.size())
            throw std::invalid_argument("series JSON: re and im lengths differ");
    }
    std::vector<cplx> c(re.size());
    for (size_t i = 0; i < re.size(); ++i) c[i] = cplx(re[i], im[i]);
    std::string label = j.value("label", std::string());
    return FormalSeries(offset, std::move(c), std::move(label));
}

json to_json(const QuadratureResult& q) {
    return {{"value", jc(q.value)}, {"err", q.err_estimate}, {"n_evals", q.n_evals}};
}

json to_json(const TruncationReport& r) {
    json j = {{"k", r.k},
              {"partial_sum", jc(r.partial_sum)},
              {"bound", r.bound},
              {"superasymptotic", r.superasymptotic}};
    j["actual_error"] = r.actual_error ? json(*r.actual_error) : json(nullptr);
    j["remainder_integral"] = r.remainder_integral ? jc(*r.remainder_integral) : json(nullptr);
    return j;
}

json to_json(const StokesReport& r) {
    json sing = json::array(), dirs = json::array();
    for (const cplx& p : r.singularities) sing.push_back(jc(p));
    for (const Ray& d : r.exceptional_directions) dirs.push_back(d.theta);
    return {{"singularities", sing},
            {"exceptional_directions", dirs},
            {"summable_elsewhere", r.summable_elsewhere}};
}

json to_json(const SummationResult& r) {
    return {{"value", jc(r.value)},
            {"direction", r.direction.theta},
            {"err_estimate", r.err_estimate},
            {"pade_order", json::array({r.pade_order.first, r.pade_order.second})},
            {"diagnostics", r.diagnostics}};
}

json to_json(const AxiomReport& r) {
    json props = json::array();
    for (const PropertyRecord& p : r.properties) {
        props.push_back({{"id", p.id},
                         {"instances", p.instances},
                         {"max_deviation", p.max_deviation},
                         {"tolerance", p.tolerance},
                         {"pass", p.pass},
                         {"note", p.note}});
    }
    return {{"seed", r.seed}, {"properties", props}};
}

json to_json(const ConnectionReport& r) {
    json j = {{"C2", jc(r.C2)},
              {"fit_residual", r.fit_residual},
              {"resonance", r.resonance},
              {"branch_note", r.branch_note}};
    j["resonance_order"] = r.resonance_order ? json(*r.resonance_order) : json(nullptr);
    return j;
}

json sweep_to_json(const std::vector<SweepRow>& rows) {
    json arr = json::array();
    for (const SweepRow& r : rows) {
        json j = {{"eps", r.eps}, {"nearest_resonance", r.nearest_resonance}};
        j["C2"] = r.C2 ? jc(*r.C2) : json(nullptr);
        j["abs_C2"] = r.C2 ? json(std::abs(*r.C2)) : json(nullptr);
        j["fit_residual"] = r.fit_residual ? json(*r.fit_residual) : json(nullptr);
        j["error"] = r.error.empty() ? json(nullptr) : json(r.error);
        arr.push_back(std::move(j));
    }
    return {{"rows", arr}};
}

void write_truncation_csv(std::ostream& os, const std::vector<TruncationReport>& rows) {
    os << "k,partial_sum_re,partial_sum_im,bound,actual_error,remainder_integral\n";
    for (const TruncationReport& r : rows) {
        os << r.k << ',' << fmt_double(r.partial_sum.real()) << ','
           << fmt_double(r.partial_sum.imag()) << ',' << fmt_double(r.bound) << ','
           << (r.actual_error ? fmt_double(*r.actual_error) : "nan") << ','
           << (r.remainder_integral ? fmt_double(r.remainder_integral->real()) : "nan")
           << '\n';
    }
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "eps,C2_re,C2_im,abs_C2,fit_residual,nearest_resonance\n";
    for (const SweepRow& r : rows) {
        os << fmt_double(r.eps) << ',';
        if (r.C2) {
            os << fmt_double(r.C2->real()) << ',' << fmt_double(r.C2->imag()) << ','
               << fmt_double(std::abs(*r.C2)) << ',';
        } else {
            os << "nan,nan,nan,";
        }
        os << (r.fit_residual ? fmt_double(*r.fit_residual) : "nan") << ','
           << fmt_double(r.nearest_resonance) << '\n';
    }
}

void write_stokes_csv(std::ostream& os, const StokesReport& rep) {
    os << "singularity_re,singularity_im,direction\n";
    for (const cplx& p : rep.singularities) {
        os << fmt_double(p.real()) << ',' << fmt_double(p.imag()) << ','
           << fmt_double(std::arg(p)) << '\n';
    }
}

void write_axioms_csv(std::ostream& os, const AxiomReport& rep) {
    os << "property,instances,max_deviation,tolerance,pass,note\n";
    for (const PropertyRecord& p : rep.properties) {
        os << p.id << ',' << csv_quote(p.instances) << ',' << fmt_double(p.max_deviation)
           << ',' << fmt_double(p.tolerance) << ',' << (p.pass ? "true" : "false") << ','
           << csv_quote(p.note) << '\n';
    }
}

void write_coeff_table_csv(std::ostream& os, const FormalSeries& s,
                           std::optional<double> x) {
    if (x) {
        os << "n,coeff_re,coeff_im,partial_sum_re,partial_sum_im,bound\n";
    } else {
        os << "n,coeff_re,coeff_im\n";
    }
    for (int n = 0; n < (int)s.coeffs.size(); ++n) {
        os << n << ',' << fmt_double(s.coeffs[n].real()) << ','
           << fmt_double(s.coeffs[n].imag());
        if (x) {
            cplx ps = eval_partial_sum(s, *x, n + 1);
            os << ',' << fmt_double(ps.real()) << ',' << fmt_double(ps.imag()) << ','
               << fmt_double(remainder_bound(n, *x));
        }
        os << '\n';
    }
}

} // namespace resum
