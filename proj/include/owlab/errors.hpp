// owlab - Følner sets, fillings and Ornstein-Weiss limits on semigroups
//
// Exception hierarchy. The CLI maps each family onto an exit status:
// DomainError -> 2, ResourceError -> 3, ConfigError -> 1.

#ifndef OWLAB_ERRORS_HPP_
#define OWLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace owlab {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! An argument lies outside the mathematical domain of an operation.
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  //! An element payload is not valid for the semigroup it is used with.
  class InvalidElement : public DomainError {
   public:
    using DomainError::DomainError;
  };

  //! Left division in a finite table where the divisor is not
  //! left-cancellable, so the equation a*s = b may have several solutions.
  class MultiSolutionError : public DomainError {
   public:
    using DomainError::DomainError;
  };

  //! A strict-mode Filling Theorem run whose hypotheses do not hold.
  class HypothesisViolation : public DomainError {
   public:
    using DomainError::DomainError;
  };

  //! A certificate precondition failed; the message names the link.
  class CertificateRefused : public DomainError {
   public:
    using DomainError::DomainError;
  };

  //! A computation would exceed its configured work budget.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

  //! Malformed user input (grammar, JSON, missing fields).
  class ConfigError : public Error {
   public:
    using Error::Error;
  };

}  // namespace owlab

#endif  // OWLAB_ERRORS_HPP_
