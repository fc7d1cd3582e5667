#pragma once

#include "resum/axioms.hpp"
#include "resum/borel.hpp"
#include "resum/exact.hpp"
#include "resum/series.hpp"
#include "resum/truncation.hpp"
#include "resum/unfolding.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace resum {

using json = nlohmann::json;

// Complex values serialize as [re, im] throughout.
json to_json(const FormalSeries& s);          // {"offset","re","im","label"}
json to_json(const QuadratureResult& q);      // {"value","err","n_evals"}
json to_json(const TruncationReport& r);
json to_json(const StokesReport& r);
json to_json(const SummationResult& r);
json to_json(const AxiomReport& r);
json to_json(const ConnectionReport& r);
json sweep_to_json(const std::vector<SweepRow>& rows);

FormalSeries formal_series_from_json(const json& j);

// 17 significant digits, round-trippable; "nan" for missing optionals.
std::string fmt_double(double v);

void write_truncation_csv(std::ostream& os, const std::vector<TruncationReport>& rows);
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_stokes_csv(std::ostream& os, const StokesReport& rep);
void write_axioms_csv(std::ostream& os, const AxiomReport& rep);

// n, coefficient, and (when x is given) the running partial sum and the
// k! x^(k+1) error scale at each order.
void write_coeff_table_csv(std::ostream& os, const FormalSeries& s,
                           std::optional<double> x);

} // namespace resum
