#include "horadam/closed_forms.hpp"

#include <string>
#include <vector>

namespace horadam {

namespace {

void require_valid_limits(long long n, long long k) {
  if (n < 0) throw DomainError("power n must be nonnegative");
  if (k < -1) throw DomainError("upper limit k must be >= -1");
}

// sum_{j=0}^{k} ratio^j with the (k+1) fallback at ratio = 1. When D is a
// perfect square, ratio - 1 can be a nonzero zero divisor and the quotient
// does not exist in the ring; the sum still does, so accumulate termwise.
QuadExt geometric_of_ratio(const QuadExt& ratio, long long k) {
  if (ratio.is_one())
    return QuadExt::from_rational(Rational(k + 1), ratio.disc());
  QuadExt one = QuadExt::one(ratio.disc());
  QuadExt step = ratio - one;
  if (!step.norm().is_zero()) return (ratio.pow(k + 1) - one) / step;
  QuadExt acc = QuadExt::zero(ratio.disc());
  QuadExt power = one;
  for (long long j = 0; j <= k; ++j) {
    acc += power;
    power *= ratio;
  }
  return acc;
}

// The four numerator pieces S1..S4 of the power-sum quotient form for
// binomial term i, with the f/g exponents grouped as f^{n-i} g^i so that
// zero bases never meet a negative exponent.
struct QuotientTermParts {
  QuadExt s1, s2, s3, s4;
};

QuotientTermParts quotient_term_parts(const PairSumArgs& a, long long i) {
  long long n = a.n, r = a.r, s = a.s, k = a.k;
  QuadExt t1 = a.f.pow(n - i) * a.g.pow(i);
  QuadExt t2 = a.f.pow(i) * a.g.pow(n - i);
  auto sym = [&](long long ex, long long ey) {
    return t1 * a.x.pow(ex) * a.y.pow(ey) + t2 * a.x.pow(ey) * a.y.pow(ex);
  };
  return QuotientTermParts{
      sym(s * (n - i) + r * n * (k + 1) - r * i * k, s * i + r * (i * k + n)),
      sym(s * (n - i) + (r * n - r * i) * (k + 1), s * i + r * i * (k + 1)),
      sym(s * (n - i) + r * i, s * i + r * (n - i)),
      sym(s * (n - i), s * i)};
}

QuadExt term_denominator(const PairSumArgs& a, long long i) {
  QuadExt xy = a.x * a.y;
  QuadExt one = QuadExt::one(a.x.disc());
  return xy.pow(a.r * a.n) * (a.z * a.z) -
         xy.pow(a.r * i) *
             (a.x.pow(a.r * (a.n - 2 * i)) + a.y.pow(a.r * (a.n - 2 * i))) *
             a.z +
         one;
}

[[noreturn]] void throw_vanished(DenominatorVanishes::Factor factor,
                                 long long i, const std::string& what) {
  throw DenominatorVanishes(factor, i, what);
}

}  // namespace

QuadExt geometric_sum(const QuadExt& x, long long r, long long s, long long k,
                      const Rational& z) {
  if (k < -1) throw DomainError("upper limit k must be >= -1");
  return x.pow(s) * geometric_of_ratio(x.pow(r) * z, k);
}

QuadExt pair_sum(const PairSumArgs& args) {
  if (args.k < -1) throw DomainError("upper limit k must be >= -1");
  const QuadExt &f = args.f, &g = args.g, &x = args.x, &y = args.y;
  long long r = args.r, s = args.s, k = args.k;
  const Rational& z = args.z;

  QuadExt xr = x.pow(r);
  QuadExt yr = y.pow(r);
  if ((xr * z).is_one())
    throw DenominatorVanishes(DenominatorVanishes::Factor::First, std::nullopt,
                              "x^r z = 1");
  if ((yr * z).is_one())
    throw DenominatorVanishes(DenominatorVanishes::Factor::Second,
                              std::nullopt, "y^r z = 1");

  QuadExt one = QuadExt::one(x.disc());
  QuadExt xyr = xr * yr;
  QuadExt den = xyr * (z * z) - (xr + yr) * z + one;
  QuadExt num = xyr * (f * x.pow(r * k + s) + g * y.pow(r * k + s)) *
                    z.pow(k + 2) -
                (f * x.pow(r * k + r + s) + g * y.pow(r * k + r + s)) *
                    z.pow(k + 1) -
                xyr * (f * x.pow(s - r) + g * y.pow(s - r)) * z +
                (f * x.pow(s) + g * y.pow(s));
  return num / den;
}

QuadExt pair_sum_limit(const PairSumArgs& args) {
  const QuadExt &f = args.f, &g = args.g, &x = args.x, &y = args.y;
  long long r = args.r, s = args.s;
  const Rational& z = args.z;

  QuadExt xr = x.pow(r);
  QuadExt yr = y.pow(r);
  if ((xr * z).is_one())
    throw DenominatorVanishes(DenominatorVanishes::Factor::First, std::nullopt,
                              "x^r z = 1");
  if ((yr * z).is_one())
    throw DenominatorVanishes(DenominatorVanishes::Factor::Second,
                              std::nullopt, "y^r z = 1");

  QuadExt one = QuadExt::one(x.disc());
  QuadExt xyr = xr * yr;
  QuadExt den = xyr * (z * z) - (xr + yr) * z + one;
  QuadExt num = (f * x.pow(s) + g * y.pow(s)) -
                xyr * (f * x.pow(s - r) + g * y.pow(s - r)) * z;
  return num / den;
}

QuadExt pair_power_sum(const PairSumArgs& args) {
  require_valid_limits(args.n, args.k);
  const QuadExt &f = args.f, &g = args.g, &x = args.x, &y = args.y;
  long long n = args.n, r = args.r, s = args.s, k = args.k;

  QuadExt total = QuadExt::zero(x.disc());
  for (long long i = 0; i <= n; ++i) {
    QuadExt c1 = f.pow(n - i) * g.pow(i) * x.pow(s * (n - i)) * y.pow(s * i);
    QuadExt c2 = f.pow(i) * g.pow(n - i) * x.pow(s * i) * y.pow(s * (n - i));
    QuadExt rho1 = x.pow(r * (n - i)) * y.pow(r * i) * args.z;
    QuadExt rho2 = x.pow(r * i) * y.pow(r * (n - i)) * args.z;
    total += binomial(n, i) *
             (c1 * geometric_of_ratio(rho1, k) + c2 * geometric_of_ratio(rho2, k));
  }
  return total / Rational(2);
}

QuadExt pair_power_sum_quotient(const PairSumArgs& args) {
  require_valid_limits(args.n, args.k);
  long long n = args.n, k = args.k;
  const Rational& z = args.z;

  std::vector<QuadExt> dens;
  dens.reserve(static_cast<std::size_t>(n) + 1);
  for (long long i = 0; i <= n; ++i) {
    dens.push_back(term_denominator(args, i));
    if (dens.back().is_zero())
      throw_vanished(DenominatorVanishes::Factor::Quadratic, i,
                     "quadratic denominator vanishes at binomial term " +
                         std::to_string(i));
  }

  Rational zk1 = z.pow(k + 1);
  Rational zk2 = z.pow(k + 2);
  QuadExt total = QuadExt::zero(args.x.disc());
  for (long long i = 0; i <= n; ++i) {
    QuotientTermParts parts = quotient_term_parts(args, i);
    QuadExt num = parts.s1 * zk2 - parts.s2 * zk1 - parts.s3 * z + parts.s4;
    total += binomial(n, i) * (num / dens[static_cast<std::size_t>(i)]);
  }
  return total / Rational(2);
}

QuadExt pair_power_sum_limit(const PairSumArgs& args) {
  if (args.n < 0) throw DomainError("power n must be nonnegative");
  long long n = args.n;
  const Rational& z = args.z;

  QuadExt total = QuadExt::zero(args.x.disc());
  for (long long i = 0; i <= n; ++i) {
    QuadExt den = term_denominator(args, i);
    if (den.is_zero())
      throw_vanished(DenominatorVanishes::Factor::Quadratic, i,
                     "quadratic denominator vanishes at binomial term " +
                         std::to_string(i));
    QuotientTermParts parts = quotient_term_parts(args, i);
    total += binomial(n, i) * ((parts.s4 - parts.s3 * z) / den);
  }
  return total / Rational(2);
}

namespace {

// Denominator q^{rn} z^2 - q^{ri} v_{r(n-2i)} z + 1 of binomial term i;
// throws when it vanishes.
Rational checked_denominator(TermCache& cache, const SumSpec& spec,
                             long long i) {
  Rational den = cache.q_pow(spec.r * spec.n) * spec.z * spec.z -
                 cache.q_pow(spec.r * i) * cache.v(spec.r * (spec.n - 2 * i)) *
                     spec.z +
                 Rational(1);
  if (den.is_zero())
    throw_vanished(DenominatorVanishes::Factor::Quadratic, i,
                   "q^{rn} z^2 - q^{ri} v_{r(n-2i)} z + 1 = 0 at i = " +
                       std::to_string(i));
  return den;
}

Rational sum_power_uv(TermCache& cache, const SumSpec& spec,
                      const std::vector<Rational>& dens) {
  long long n = spec.n, r = spec.r, s = spec.s, k = spec.k;
  const Rational& z = spec.z;
  bool u_kind = spec.kind == SeqKind::U;
  bool odd = (n % 2) != 0;
  Rational zk1 = z.pow(k + 1);
  Rational zk2 = z.pow(k + 2);

  Rational acc(0);
  for (long long i = 0; i <= n; ++i) {
    // v-terms for the V kind and even powers of u; u-terms for odd powers.
    auto base_term = [&](long long m) -> const Rational& {
      return u_kind && odd ? cache.u(m) : cache.v(m);
    };
    long long stretch = n - 2 * i;
    Rational boundary = cache.q_pow(r * (n + k * i)) *
                            base_term((r * k + s) * stretch) * zk2 -
                        cache.q_pow(r * i * (k + 1)) *
                            base_term((r * k + r + s) * stretch) * zk1;
    Rational tail = cache.q_pow(s * stretch + r * i) *
                    base_term((r - s) * stretch) * z;
    // The tail enters negatively in the v-shaped forms, positively in the
    // odd u form.
    Rational num = u_kind && odd ? boundary + tail + base_term(s * stretch)
                                 : boundary - tail + base_term(s * stretch);
    Rational term = num / dens[static_cast<std::size_t>(i)] * binomial(n, i) *
                    cache.q_pow(s * i);
    if (u_kind && (i % 2) != 0) term = -term;
    acc += term;
  }

  if (!u_kind) return acc / Rational(2);
  // Divide out 2(p^2-4q)^m: m = n/2 for even n, (n-1)/2 for odd n.
  long long m = odd ? (n - 1) / 2 : n / 2;
  return acc / (Rational(2) * cache.params().disc.pow(m));
}

Rational sum_power_w(TermCache& cache, const SumSpec& spec,
                     const std::vector<Rational>& dens) {
  long long n = spec.n, r = spec.r, s = spec.s, k = spec.k;
  const Rational& z = spec.z;
  const BinetCoeffs& coeffs = cache.binet();
  const Rational& disc = cache.params().disc;

  // Small powers of A and B, indexed 0..n.
  std::vector<QuadExt> apow{QuadExt::one(disc)}, bpow{QuadExt::one(disc)};
  for (long long i = 1; i <= n; ++i) {
    apow.push_back(apow.back() * coeffs.A);
    bpow.push_back(bpow.back() * coeffs.B);
  }

  Rational zk1 = z.pow(k + 1);
  Rational zk2 = z.pow(k + 2);
  QuadExt acc = QuadExt::zero(disc);
  for (long long i = 0; i <= n; ++i) {
    QuadExt t1 = apow[static_cast<std::size_t>(n - i)] *
                 bpow[static_cast<std::size_t>(i)];
    QuadExt t2 = apow[static_cast<std::size_t>(i)] *
                 bpow[static_cast<std::size_t>(n - i)];
    long long stretch = n - 2 * i;
    // The four quotient numerators factor pairwise: the boundary exponents are
    // the inner exponents shifted by (ri, r(n-i)), so with
    //   w1 = alpha^{ri} beta^{r(n-i)},
    //   p2 = alpha^{s(n-2i)+(rn-ri)(k+1)} beta^{ri(k+1)},
    //   p4 = alpha^{s(n-2i)}
    // one half of the numerator is t1*(G1*p2 + G2*p4) and the other half is
    // its conjugate image weighted by t2.
    QuadExt w1 = cache.alpha_pow(r * i) * cache.beta_pow(r * (n - i));
    QuadExt p2 = cache.alpha_pow(s * stretch + (r * n - r * i) * (k + 1)) *
                 cache.beta_pow(r * i * (k + 1));
    const QuadExt& p4 = cache.alpha_pow(s * stretch);
    QuadExt g1 = w1 * zk2 - zk1;
    QuadExt g2 = w1 * (-z) + Rational(1);
    QuadExt inner = g1 * p2 + g2 * p4;
    QuadExt num = t1 * inner + t2 * inner.conj();
    acc += num * (binomial(n, i) * cache.q_pow(s * i) /
                  dens[static_cast<std::size_t>(i)]);
  }
  return (acc / Rational(2)).to_rational();
}

}  // namespace

Rational sum_linear(TermCache& cache, const SumSpec& spec) {
  if (spec.n != 1) throw DomainError("sum_linear requires power n = 1");
  if (spec.k < -1) throw DomainError("upper limit k must be >= -1");
  long long r = spec.r, s = spec.s, k = spec.k;
  const Rational& z = spec.z;

  Rational den =
      cache.q_pow(r) * z * z - cache.v(r) * z + Rational(1);
  if (den.is_zero())
    throw DenominatorVanishes(DenominatorVanishes::Factor::Quadratic,
                              std::nullopt, "q^r z^2 - v_r z + 1 = 0");

  Rational zk1 = z.pow(k + 1);
  Rational zk2 = z.pow(k + 2);
  Rational num;
  switch (spec.kind) {
    case SeqKind::U:
      num = cache.q_pow(r) * cache.u(r * k + s) * zk2 -
            cache.u(r * k + r + s) * zk1 +
            cache.q_pow(s) * cache.u(r - s) * z + cache.u(s);
      break;
    case SeqKind::V:
      num = cache.q_pow(r) * cache.v(r * k + s) * zk2 -
            cache.v(r * k + r + s) * zk1 -
            cache.q_pow(s) * cache.v(r - s) * z + cache.v(s);
      break;
    case SeqKind::W:
      num = cache.q_pow(r) * cache.w(r * k + s) * zk2 -
            cache.w(r * k + r + s) * zk1 -
            cache.q_pow(r) * cache.w(s - r) * z + cache.w(s);
      break;
  }
  return num / den;
}

Rational sum_power(TermCache& cache, const SumSpec& spec) {
  require_valid_limits(spec.n, spec.k);

  std::vector<Rational> dens;
  dens.reserve(static_cast<std::size_t>(spec.n) + 1);
  for (long long i = 0; i <= spec.n; ++i)
    dens.push_back(checked_denominator(cache, spec, i));

  if (spec.kind == SeqKind::W) return sum_power_w(cache, spec, dens);
  return sum_power_uv(cache, spec, dens);
}

Rational brute_sum(TermCache& cache, const SumSpec& spec) {
  require_valid_limits(spec.n, spec.k);
  Rational acc(0);
  Rational zp(1);
  for (long long j = 0; j <= spec.k; ++j) {
    acc += cache.term(spec.kind, spec.r * j + spec.s).pow(spec.n) * zp;
    zp *= spec.z;
  }
  return acc;
}

Rational sum_linear(const HoradamParams& params, const SumSpec& spec) {
  TermCache cache(params);
  return sum_linear(cache, spec);
}

Rational sum_power(const HoradamParams& params, const SumSpec& spec) {
  TermCache cache(params);
  return sum_power(cache, spec);
}

Rational brute_sum(const HoradamParams& params, const SumSpec& spec) {
  TermCache cache(params);
  return brute_sum(cache, spec);
}

}  // namespace horadam
