#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace horadam {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two quadratic-ring elements with different ring constants were combined.
class DiscMismatch : public Error {
 public:
  using Error::Error;
};

// Inversion of a ring element whose norm is zero (zero itself, or a zero
// divisor when the ring constant is a perfect square).
class NotInvertible : public Error {
 public:
  using Error::Error;
};

// A value that must be rational came out with a nonzero surd component.
class SurdResidue : public Error {
 public:
  using Error::Error;
};

// Rejected sequence parameters (p = 0 or q = 0).
class InvalidParam : public Error {
 public:
  using Error::Error;
};

// p^2 - 4q = 0: the characteristic roots coincide.
class DegenerateDiscriminant : public Error {
 public:
  using Error::Error;
};

// Argument outside the supported domain (e.g. upper limit k < -1, negative
// power, division by zero).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Text that does not match the expected grammar; carries the offset of the
// first offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A closed form's denominator is zero at the given arguments, so the
// quotient form is undefined (the sum itself may still be finite and
// computable by direct accumulation).
class DenominatorVanishes : public Error {
 public:
  // Which factor vanished: the geometric ratio of the first base
  // (x^r z = 1), of the second base (y^r z = 1), or the full quadratic
  // denominator of a sequence-level sum.
  enum class Factor { First, Second, Quadratic };

  DenominatorVanishes(Factor factor, std::optional<long long> term_index,
                      const std::string& what)
      : Error(what), factor_(factor), term_index_(term_index) {}

  Factor factor() const { return factor_; }

  // The binomial term i whose denominator vanished, when applicable.
  std::optional<long long> term_index() const { return term_index_; }

 private:
  Factor factor_;
  std::optional<long long> term_index_;
};

}  // namespace horadam
