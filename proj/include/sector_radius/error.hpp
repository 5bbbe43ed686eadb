#pragma once

#include <stdexcept>
#include <string>

namespace sector_radius {

/// Operand shapes that do not fit together (mismatched n, wrong entry count).
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Input outside the domain of an operation (non-Hermitian, not accretive, ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Iterative kernel hit its hard iteration cap.
class ConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace sector_radius
