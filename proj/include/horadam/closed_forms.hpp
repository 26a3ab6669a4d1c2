#pragma once

#include "horadam/quadext.hpp"
#include "horadam/rational.hpp"
#include "horadam/sequence.hpp"

namespace horadam {

// One partial sum  sum_{j=0}^{k} w_{r*j+s}^n * z^j  of a sequence family.
// k = -1 denotes the empty sum; k < -1 is rejected (DomainError).
struct SumSpec {
  SeqKind kind = SeqKind::U;
  long long n = 1;  // power, >= 0
  long long r = 1;  // index step
  long long s = 0;  // index offset
  long long k = -1; // upper limit, >= -1
  Rational z = Rational(1);
};

// Arguments of the generic engine: sums over j of
//   (f*x^{r*j+s} + g*y^{r*j+s})^n * z^j
// for arbitrary ring elements f, g, x, y sharing one ring constant.
// x and y must be invertible wherever negative exponents arise.
struct PairSumArgs {
  QuadExt f, g, x, y;
  long long r = 1;
  long long s = 0;
  long long k = -1;
  Rational z = Rational(1);
  long long n = 1;  // power (power-sum entry points only)
};

// Degenerate-safe partial geometric sum  sum_{j=0}^{k} x^{r*j+s} * z^j.
// Uses the quotient (x^{rk+r+s} z^{k+1} - x^s) / (x^r z - 1) when the ratio
// x^r z differs from 1 and falls back to (k+1)*x^s when it equals 1.
QuadExt geometric_sum(const QuadExt& x, long long r, long long s, long long k,
                      const Rational& z);

// sum_{j=0}^{k} (f*x^{r*j+s} + g*y^{r*j+s}) * z^j as the four-term closed
// form over the quadratic denominator (xy)^r z^2 - (x^r + y^r) z + 1.
// Throws DenominatorVanishes (tagged First/Second) when x^r z = 1 or
// y^r z = 1; the value always equals f*geometric_sum(x,..) + g*geometric_sum(y,..).
QuadExt pair_sum(const PairSumArgs& args);

// Formal limit of pair_sum as k grows: the generating-function numerator
// f x^s + g y^s - (xy)^r (f x^{s-r} + g y^{s-r}) z over the same quadratic.
// Convergence is the caller's concern.
QuadExt pair_sum_limit(const PairSumArgs& args);

// sum_{j=0}^{k} (f*x^{r*j+s} + g*y^{r*j+s})^n * z^j via the symmetrized
// binomial expansion, each term evaluated as two degenerate-safe geometric
// sums and the total halved. Finite sums therefore succeed even where the
// quotient form is undefined.
QuadExt pair_power_sum(const PairSumArgs& args);

// The same power sum as the four-part quotient over the per-term
// quadratic denominators. Requires every
// binomial term's quadratic denominator
//   (xy)^{rn} z^2 - (xy)^{ri} (x^{r(n-2i)} + y^{r(n-2i)}) z + 1
// to be nonzero; throws DenominatorVanishes carrying the offending i.
QuadExt pair_power_sum_quotient(const PairSumArgs& args);

// Formal limit of the power sum as k grows (terms in z^{k+1}, z^{k+2}
// dropped); same per-term denominator conditions as the quotient form.
QuadExt pair_power_sum_limit(const PairSumArgs& args);

// Sequence-level closed form for n = 1 (DomainError otherwise): the
// kind-specific quotient with denominator q^r z^2 - v_r z + 1. Throws
// DenominatorVanishes when that quadratic is zero.
Rational sum_linear(const HoradamParams& params, const SumSpec& spec);
Rational sum_linear(TermCache& cache, const SumSpec& spec);

// Sequence-level closed form for any power n >= 0. U dispatches on the
// parity of n and divides out the 2(p^2-4q)^m prefactor, V divides by 2,
// W evaluates the general four-part quotient with A, B, alpha, beta and
// extracts the rational part. Requires q^{rn} z^2 - q^{ri} v_{r(n-2i)} z + 1
// to be nonzero for every i in [0, n]; throws DenominatorVanishes carrying
// the offending i.
Rational sum_power(const HoradamParams& params, const SumSpec& spec);
Rational sum_power(TermCache& cache, const SumSpec& spec);

// Direct-accumulation oracle: evaluates the sum term by term through the
// recurrence. Defined for every z; no denominator conditions.
Rational brute_sum(const HoradamParams& params, const SumSpec& spec);
Rational brute_sum(TermCache& cache, const SumSpec& spec);

}  // namespace horadam
