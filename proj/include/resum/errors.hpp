#pragma once

#include <stdexcept>
#include <string>

namespace resum {

// Base for all numeric failures specific to this toolkit. Precondition
// violations use std::invalid_argument / std::domain_error directly so
// callers can distinguish "bad input" from "the computation broke".
struct resum_error : std::runtime_error {
    explicit resum_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Refinement did not converge; carries the best value reached.
struct accuracy_error : resum_error {
    double best_err;
    accuracy_error(const std::string& msg, double best)
        : resum_error(msg), best_err(best) {}
};

// Integrand blew up at a quadrature node: the ray hits a singularity.
struct pole_on_ray_error : resum_error {
    using resum_error::resum_error;
};

// Requested summation ray is within the angular clearance of an
// exceptional direction.
struct stokes_direction_error : resum_error {
    using resum_error::resum_error;
};

// Jump measurement asked for an arc that brackets zero or several
// exceptional directions while singularities exist.
struct configuration_error : resum_error {
    using resum_error::resum_error;
};

// Rational fit failed to reproduce its own input series.
struct degenerate_order_error : resum_error {
    using resum_error::resum_error;
};

// Laplace integral along the positive axis does not exist.
struct summability_error : resum_error {
    using resum_error::resum_error;
};

// Local recurrence denominator 1 - 2*sqrt(eps)*n vanished with a
// non-vanishing numerator; `order` is the resonant index.
struct resonance_error : resum_error {
    int order;
    resonance_error(const std::string& msg, int n) : resum_error(msg), order(n) {}
};

// Continuation path passes through (or intolerably near) a singular point.
struct path_error : resum_error {
    using resum_error::resum_error;
};

// Adaptive step control underflowed or exceeded its step budget.
struct stiffness_error : resum_error {
    using resum_error::resum_error;
};

} // namespace resum
