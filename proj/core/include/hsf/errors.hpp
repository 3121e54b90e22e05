#pragma once

#include <stdexcept>
#include <string>

namespace hsf {

// Precondition violations on operation inputs.
class invalid_input : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Evaluation at (or within the guard distance of) a pole of a special
// function or of the eigenvalue equation.
class pole_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// A series failed to converge within its term cap; the partial sum is kept
// so callers can decide whether it is still usable.
class truncation_error : public std::runtime_error {
  public:
    truncation_error(const std::string& what, double partial_sum, int terms_used)
        : std::runtime_error(what), partial_sum_(partial_sum), terms_used_(terms_used) {}

    double partial_sum() const noexcept { return partial_sum_; }
    int terms_used() const noexcept { return terms_used_; }

  private:
    double partial_sum_;
    int terms_used_;
};

// Root-finding failures: a bracket lost its sign change or turned out
// numerically degenerate.
class solver_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// The matching function had no sign change inside the seeded energy bracket.
class bracket_error : public solver_error {
  public:
    using solver_error::solver_error;
};

// A converged eigenvalue has a node count different from the requested level.
class ordering_error : public solver_error {
  public:
    using solver_error::solver_error;
};

// The field is too weak for the logarithmic strong-field regime.
class regime_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Inconsistent shooting configuration (step/cutoff mismatch and friends).
class config_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Node counting saw a crossing too shallow to classify.
class degenerate_sampling_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace hsf
