#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "horadam/errors.hpp"
#include "horadam/rational.hpp"

namespace horadam {

// Element c0 + c1*sqrt(D) of the quadratic ring Q[sqrt(D)]. The ring
// constant D travels with every value, so mixing elements from different
// rings is detected (DiscMismatch). D may be a perfect square, in which
// case the ring has zero divisors and inversion can fail (NotInvertible);
// D = 0 is rejected outright.
class QuadExt {
 public:
  QuadExt(Rational c0, Rational c1, Rational disc)
      : c0_(std::move(c0)), c1_(std::move(c1)), disc_(std::move(disc)) {
    if (disc_.is_zero()) throw DomainError("ring constant D must be nonzero");
  }

  static QuadExt from_rational(Rational value, Rational disc) {
    return QuadExt(std::move(value), Rational(0), std::move(disc));
  }
  static QuadExt zero(Rational disc) {
    return from_rational(Rational(0), std::move(disc));
  }
  static QuadExt one(Rational disc) {
    return from_rational(Rational(1), std::move(disc));
  }
  static QuadExt sqrt_disc(Rational disc) {
    return QuadExt(Rational(0), Rational(1), std::move(disc));
  }

  // Accepts the grammar produced by str(): "c0 + c1*sqrt(D)".
  static QuadExt parse(std::string_view text);

  const Rational& c0() const { return c0_; }
  const Rational& c1() const { return c1_; }
  const Rational& disc() const { return disc_; }

  bool is_rational() const { return c1_.is_zero(); }
  bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }
  bool is_one() const { return c0_.is_one() && c1_.is_zero(); }

  // The rational value of an element with no surd part; throws SurdResidue
  // otherwise.
  const Rational& to_rational() const {
    if (!c1_.is_zero())
      throw SurdResidue("expected rational value, got " + str());
    return c0_;
  }

  QuadExt conj() const { return QuadExt(c0_, -c1_, disc_); }
  Rational norm() const { return c0_ * c0_ - disc_ * c1_ * c1_; }

  QuadExt inv() const {
    Rational n = norm();
    if (n.is_zero()) throw NotInvertible("zero norm: " + str());
    return QuadExt(c0_ / n, -c1_ / n, disc_);
  }

  QuadExt operator-() const { return QuadExt(-c0_, -c1_, disc_); }

  friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
    a.require_same_ring(b);
    return QuadExt(a.c0_ + b.c0_, a.c1_ + b.c1_, a.disc_);
  }
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
    a.require_same_ring(b);
    return QuadExt(a.c0_ - b.c0_, a.c1_ - b.c1_, a.disc_);
  }
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    a.require_same_ring(b);
    return QuadExt(a.c0_ * b.c0_ + a.c1_ * b.c1_ * a.disc_,
                   a.c0_ * b.c1_ + a.c1_ * b.c0_, a.disc_);
  }
  friend QuadExt operator/(const QuadExt& a, const QuadExt& b) {
    return a * b.inv();
  }

  friend QuadExt operator+(const QuadExt& a, const Rational& b) {
    return QuadExt(a.c0_ + b, a.c1_, a.disc_);
  }
  friend QuadExt operator-(const QuadExt& a, const Rational& b) {
    return QuadExt(a.c0_ - b, a.c1_, a.disc_);
  }
  friend QuadExt operator*(const QuadExt& a, const Rational& b) {
    return QuadExt(a.c0_ * b, a.c1_ * b, a.disc_);
  }
  friend QuadExt operator*(const Rational& a, const QuadExt& b) {
    return b * a;
  }
  friend QuadExt operator/(const QuadExt& a, const Rational& b) {
    return QuadExt(a.c0_ / b, a.c1_ / b, a.disc_);
  }

  // Exact e-th power by binary exponentiation; e = 0 gives the identity,
  // e < 0 requires nonzero norm.
  QuadExt pow(long long e) const;

  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }

  // Elements are equal when both components match and they live in the same
  // ring; purely rational elements compare equal across rings.
  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    if (a.c0_ != b.c0_ || a.c1_ != b.c1_) return false;
    return a.disc_ == b.disc_ || (a.c1_.is_zero() && b.c1_.is_zero());
  }
  friend bool operator!=(const QuadExt& a, const QuadExt& b) {
    return !(a == b);
  }

  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const QuadExt& x);

 private:
  void require_same_ring(const QuadExt& o) const {
    if (disc_ != o.disc_)
      throw DiscMismatch("ring constants differ: sqrt(" + disc_.str() +
                         ") vs sqrt(" + o.disc_.str() + ")");
  }

  Rational c0_, c1_, disc_;
};

}  // namespace horadam
