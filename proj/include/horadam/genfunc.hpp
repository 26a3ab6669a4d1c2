#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "horadam/rational.hpp"
#include "horadam/sequence.hpp"

namespace horadam {

// Dense univariate polynomial with exact rational coefficients, ascending
// degree, canonical form (no trailing zeros; the zero polynomial is empty).
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> ascending)
      : c_(ascending) {
    trim();
  }
  explicit Poly(std::vector<Rational> ascending) : c_(std::move(ascending)) {
    trim();
  }
  static Poly constant(const Rational& value) { return Poly{value}; }

  long long degree() const { return static_cast<long long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& coeff(long long i) const;

  Poly operator-() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Rational& s);
  friend Poly operator*(const Rational& s, const Poly& a) { return a * s; }
  friend Poly operator/(const Poly& a, const Rational& s);

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p);

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

// Quotient and remainder of exact division over the rationals.
std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den);

// Monic greatest common divisor (zero when both inputs are zero).
Poly poly_gcd(Poly a, Poly b);

// Ratio of two polynomials; the denominator's constant term is 1, which is
// what series expansion requires. Built via make_rational_fn.
struct RationalFn {
  Poly num;
  Poly den;

  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const RationalFn& a, const RationalFn& b) {
    return !(a == b);
  }
};

// Scales both polynomials so den(0) = 1; DomainError when den(0) = 0.
RationalFn make_rational_fn(Poly num, Poly den);

// GCD-reduced, renormalized copy; the canonical representative of the
// function, suitable for equality tests.
RationalFn reduce(const RationalFn& fn);

// Generating function of w_{r*j+s} as j runs over 0, 1, 2, ...: the
// kind-specific quotient with denominator q^r z^2 - v_r z + 1, in its
// direct two-coefficient form (no reduction).
RationalFn gf_linear(const HoradamParams& params, SeqKind kind, long long r,
                     long long s);
RationalFn gf_linear(TermCache& cache, SeqKind kind, long long r, long long s);

// Generating function of w_{r*j+s}^n: the n+1 binomial partial fractions
// combined over the product of distinct quadratic factors
// q^{rn} z^2 - q^{ri} v_{r(n-2i)} z + 1 (factors for i and n-i coincide),
// divided through by the kind prefactor, then GCD-reduced and normalized.
RationalFn gf_power(const HoradamParams& params, SeqKind kind, long long n,
                    long long r, long long s);
RationalFn gf_power(TermCache& cache, SeqKind kind, long long n, long long r,
                    long long s);

// First m coefficients of the formal power series of fn.
std::vector<Rational> series_coeffs(const RationalFn& fn, long long m);

std::string to_string(const Poly& p, std::string_view var = "z");
std::string to_string(const RationalFn& fn);

std::ostream& operator<<(std::ostream& os, const RationalFn& fn);

}  // namespace horadam
