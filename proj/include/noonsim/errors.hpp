#pragma once

#include <stdexcept>
#include <string>

namespace noonsim {

// Index or cutoff outside the representable Fock space.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Scheme requires odd/even photon number and got the other.
class ParityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A truncated Fock expansion would drop more probability than allowed.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, int required_cutoff, double tail_mass)
      : std::runtime_error(what), required_cutoff_(required_cutoff), tail_mass_(tail_mass) {}

  int required_cutoff() const noexcept { return required_cutoff_; }
  double tail_mass() const noexcept { return tail_mass_; }

 private:
  int required_cutoff_;
  double tail_mass_;
};

// Operator handed to a routine that requires Hermitian / unitary input.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Every point of a sensitivity curve diverged.
class NoInformationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Observed counts have zero likelihood at every grid phase.
class ModelMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InsufficientGridError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace noonsim
