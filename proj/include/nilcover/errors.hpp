#pragma once

#include <stdexcept>
#include <string>

namespace nilcover {

/// Argument outside the domain where an operation is defined (e.g. R > 2π).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A solver finished without a root that meets its acceptance criteria.
class NoSolution : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Generators whose projections onto the (x, y) plane are parallel.
class DegenerateLattice : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Point configuration for which the circumball system is singular.
class DegenerateConfiguration : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace nilcover
