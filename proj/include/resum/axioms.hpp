#pragma once

#include "resum/series.hpp"

#include <string>
#include <vector>

namespace resum {

// A plain coefficient sequence a_0, a_1, ... with no attached power of x:
// the object whose generalized sum is sum a_n.
struct NumericSeries {
    std::vector<cplx> terms;
    std::string label;

    NumericSeries() = default;
    NumericSeries(std::vector<cplx> t, std::string lab = {});
};

// Generalized sum of a_0 + a_1 + a_2 + ...: when the tail is geometric-safe
// (ratios bounded by 0.98) the plain partial sum is used; otherwise the
// terms are divided by n!, continued rationally, and integrated against
// e^{-z} along the positive real axis. A continuation pole on that axis
// means the sum does not exist in this sense: summability_error.
cplx borel_sum_numeric(const NumericSeries& a, int order, double tol);

// True when sum |a_n| admits the same generalized sum along the axis.
bool abs_summable_on_axis(const NumericSeries& a, int order);

struct AxiomSuiteConfig {
    int random_instances = 3;
    int order = 24;
    double tol = 1e-10;
    unsigned long long seed = 12345;
};

struct PropertyRecord {
    int id = 0;
    std::string instances;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note; // instance-level summation failures land here
};

struct AxiomReport {
    std::vector<PropertyRecord> properties;
    unsigned long long seed = 0;
};

// Checks the defining properties of the generalized sum on concrete
// instances: agreement with convergent sums, linearity, absolute-sum
// classification, products of convergent series, the tail shift
// S(a_1,a_2,...) = S(a) - a_0, and commutation with d/dx on power series.
AxiomReport run_axiom_suite(const AxiomSuiteConfig& config);

} // namespace resum
