#pragma once

#include <stdexcept>
#include <string>

namespace mlim {

// Structural misuse of an operation (variable-list mismatch, wrong degree,
// zero input where nonzero is required, ...).
struct structural_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exact arithmetic failure (division by a value proved to be zero).
struct arithmetic_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Floating-point evaluation left the domain of an elementary function.
struct eval_domain_error : std::domain_error {
    explicit eval_domain_error(const std::string& what, const std::string& node_)
        : std::domain_error(what), node(node_) {}
    std::string node;
};

struct parse_error : std::runtime_error {
    parse_error(const std::string& what, std::size_t pos_)
        : std::runtime_error(what + " (at position " + std::to_string(pos_) + ")"), pos(pos_) {}
    std::size_t pos;
};

// Taylor expansion hit a Fun node whose argument is not centered at the
// function's rational center, or a Div by a series with zero constant term.
struct center_violation : std::domain_error {
    center_violation(const std::string& what, const std::string& node_)
        : std::domain_error(what), node(node_) {}
    std::string node;
};

struct division_by_zero_series : std::domain_error {
    explicit division_by_zero_series(const std::string& node_)
        : std::domain_error("division by a series with zero constant term"), node(node_) {}
    std::string node;
};

// Puiseux branch certification exceeded the configured exponent budget.
struct deepening_budget_exceeded : std::runtime_error {
    explicit deepening_budget_exceeded(long budget)
        : std::runtime_error("branch deepening budget exceeded (N_max = " +
                             std::to_string(budget) + ")"),
          n_max(budget) {}
    long n_max;
};

// The bivariate exact tier proved that the denominator's real zero at the
// origin is not isolated.
struct non_isolated_denominator : std::runtime_error {
    explicit non_isolated_denominator(const std::string& witness_)
        : std::runtime_error("denominator zero set is not isolated at the origin"),
          witness(witness_) {}
    std::string witness;
};

// Too many numeric samples landed on (or too close to) the zero set of the
// denominator.
struct denominator_zero_hit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised under engine=exact_only when no exact tier can pin both bounds.
struct exact_bounds_unavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace mlim
