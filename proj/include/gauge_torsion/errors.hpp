#ifndef GAUGE_TORSION_ERRORS_HPP
#define GAUGE_TORSION_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gauge {

  // Operands live in different rings (different prime or variable count).
  struct StructuralError : std::logic_error {
    using std::logic_error::logic_error;
  };

  // Argument outside the mathematical domain of an operation.
  struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
  };

  struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
  };

  // A documented precondition (e.g. p | n, unitriangularity) does not hold.
  struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
  };

  // A mechanized derivation produced a result that contradicts a proven
  // identity. Seeing one of these means the computation is wrong.
  struct ContradictionError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  // The multiplicative order search exhausted its bound without finding a
  // p-power.
  struct NotAPPowerError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

} // namespace gauge

#endif // GAUGE_TORSION_ERRORS_HPP
