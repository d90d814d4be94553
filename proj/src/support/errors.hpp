#ifndef FBMLAB_SUPPORT_ERRORS_HPP
#define FBMLAB_SUPPORT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fbmlab {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A precondition of a registered model/operation pairing was violated
// (e.g. requesting the elliptic J route on a non-elliptic model).
class ContractError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// An iterative solver failed to reach its tolerance within its budget.
class SolverError : public std::runtime_error {
public:
  SolverError(const std::string& what, double attained)
      : std::runtime_error(what), attained_error(attained) {}
  double attained_error;
};

class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A Crank-Nicolson step whose contraction margin is violated; the caller
// decides whether to abort or fall back to the constant trajectory.
class InadmissibleStepError : public std::runtime_error {
public:
  InadmissibleStepError(const std::string& what, std::size_t step)
      : std::runtime_error(what), step_index(step) {}
  std::size_t step_index;
};

} // namespace fbmlab

#endif
