#include <doctest.h>

#include <random>
#include <vector>

#include "horadam/closed_forms.hpp"

using horadam::brute_sum;
using horadam::DenominatorVanishes;
using horadam::DomainError;
using horadam::geometric_sum;
using horadam::HoradamParams;
using horadam::make_params;
using horadam::PairSumArgs;
using horadam::pair_power_sum;
using horadam::pair_power_sum_limit;
using horadam::pair_power_sum_quotient;
using horadam::pair_sum;
using horadam::pair_sum_limit;
using horadam::QuadExt;
using horadam::Rational;
using horadam::SeqKind;
using horadam::sum_linear;
using horadam::sum_power;
using horadam::SumSpec;
using horadam::TermCache;

namespace {

const Rational kFive(5);

QuadExt embed(long long num, long long den = 1) {
  return QuadExt::from_rational(Rational(num, den), kFive);
}

HoradamParams fibonacci() {
  return make_params(Rational(0), Rational(1), Rational(1), Rational(-1));
}

std::vector<HoradamParams> sample_params() {
  return {
      fibonacci(),
      make_params(Rational(3), Rational(2), Rational(1), Rational(-1)),
      make_params(Rational(0), Rational(1), Rational(3), Rational(2)),
      make_params(Rational(-1), Rational(4), Rational(2), Rational(-2)),
  };
}

QuadExt accumulate(const PairSumArgs& a) {
  QuadExt acc = QuadExt::zero(a.x.disc());
  Rational zp(1);
  for (long long j = 0; j <= a.k; ++j) {
    acc += (a.f * a.x.pow(a.r * j + a.s) + a.g * a.y.pow(a.r * j + a.s))
               .pow(a.n) *
           zp;
    zp *= a.z;
  }
  return acc;
}

}  // namespace

TEST_CASE("geometric sums") {
  CHECK(geometric_sum(embed(2), 1, 0, 3, Rational(1)) == embed(15));
  // Degenerate ratio x^r z = 1: five terms of 1.
  CHECK(geometric_sum(embed(2), 1, 0, 4, Rational(1, 2)) == embed(5));
  // 3 + 27/3 + 243/9
  CHECK(geometric_sum(embed(3), 2, 1, 2, Rational(1, 3)) == embed(39));
  CHECK(geometric_sum(embed(2), 1, 0, -1, Rational(1)) == embed(0));
  CHECK_THROWS_AS(geometric_sum(embed(2), 1, 0, -2, Rational(1)), DomainError);

  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> limit(-1, 6);
  for (int i = 0; i < 100; ++i) {
    QuadExt x(Rational(small(rng), 2), Rational(small(rng), 2), kFive);
    if (x.norm().is_zero()) continue;
    long long r = small(rng), s = small(rng), k = limit(rng);
    Rational z(small(rng), 2);
    QuadExt direct = QuadExt::zero(kFive);
    Rational zp(1);
    for (long long j = 0; j <= k; ++j) {
      direct += x.pow(r * j + s) * zp;
      zp *= z;
    }
    CHECK(geometric_sum(x, r, s, k, z) == direct);
  }
}

TEST_CASE("pair sum closed form") {
  PairSumArgs basic{embed(1), embed(1), embed(2), embed(3),
                    1,        0,        2,        Rational(1)};
  CHECK(pair_sum(basic) == embed(20));

  PairSumArgs empty = basic;
  empty.k = -1;
  CHECK(pair_sum(empty) == embed(0));

  // Fibonacci numbers scaled by sqrt(5): sum of f_0..f_4 is 7.
  auto [alpha, beta] =
      std::pair{QuadExt(Rational(1, 2), Rational(1, 2), kFive),
                QuadExt(Rational(1, 2), Rational(-1, 2), kFive)};
  PairSumArgs fib{embed(1), embed(-1), alpha, beta, 1, 0, 4, Rational(1)};
  CHECK(pair_sum(fib) == QuadExt(Rational(0), Rational(7), kFive));

  // Vanishing factors are reported with their side.
  PairSumArgs degenerate_x{embed(1), embed(1), embed(2), embed(3),
                           1,        0,        4,        Rational(1, 2)};
  CHECK_THROWS_AS(pair_sum(degenerate_x), DenominatorVanishes);
  try {
    pair_sum(degenerate_x);
  } catch (const DenominatorVanishes& e) {
    CHECK(e.factor() == DenominatorVanishes::Factor::First);
  }
  PairSumArgs degenerate_y{embed(1), embed(1), embed(5), embed(3),
                           1,        0,        4,        Rational(1, 3)};
  try {
    pair_sum(degenerate_y);
  } catch (const DenominatorVanishes& e) {
    CHECK(e.factor() == DenominatorVanishes::Factor::Second);
  }

  // Equality with the geometric split on random arguments.
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> limit(-1, 5);
  for (int i = 0; i < 100; ++i) {
    QuadExt x(Rational(small(rng)), Rational(small(rng), 2), kFive);
    QuadExt y(Rational(small(rng)), Rational(small(rng), 2), kFive);
    if (x.norm().is_zero() || y.norm().is_zero()) continue;
    PairSumArgs args{QuadExt(Rational(small(rng)), Rational(small(rng)), kFive),
                     QuadExt(Rational(small(rng)), Rational(small(rng)), kFive),
                     x,
                     y,
                     small(rng),
                     small(rng),
                     limit(rng),
                     Rational(small(rng), 3)};
    try {
      QuadExt closed = pair_sum(args);
      CHECK(closed ==
            args.f * geometric_sum(args.x, args.r, args.s, args.k, args.z) +
                args.g * geometric_sum(args.y, args.r, args.s, args.k, args.z));
      CHECK(closed == accumulate(args));
    } catch (const DenominatorVanishes&) {
      // exercised above; the engine path is covered in its own test
    }
  }
}

TEST_CASE("pair sum limits") {
  // sum of (2/3)^j = 3
  PairSumArgs simple{embed(1), embed(0), embed(2), embed(1),
                     1,        0,        -1,       Rational(1, 3)};
  CHECK(pair_sum_limit(simple) == embed(3));

  PairSumArgs zero{embed(0), embed(0), embed(2), embed(3),
                   1,        0,        -1,       Rational(1, 5)};
  CHECK(pair_sum_limit(zero) == embed(0));

  // Fibonacci generating function at z = 1/4: 4/11.
  HoradamParams fib = fibonacci();
  auto [alpha, beta] = roots(fib);
  auto coeffs = binet_coeffs(fib, SeqKind::U);
  PairSumArgs gf{coeffs.A, coeffs.B, alpha, beta, 1, 0, -1, Rational(1, 4)};
  CHECK(pair_sum_limit(gf).to_rational() == Rational(4, 11));

  // Formal value: sum of 4^j / 3^j "converges" to -3 as a formal series.
  PairSumArgs formal{embed(1), embed(0), embed(2), embed(1), 1, 0, -1,
                     Rational(1, 3), 2};
  CHECK(pair_power_sum_limit(formal) == embed(-3));

  // At n = 1 the power-sum limit and the pair-sum limit are the same form.
  std::mt19937_64 rng_limits(47);
  std::uniform_int_distribution<int> small_limits(-3, 3);
  for (int i = 0; i < 60; ++i) {
    QuadExt x(Rational(small_limits(rng_limits)),
              Rational(small_limits(rng_limits), 2), kFive);
    QuadExt y(Rational(small_limits(rng_limits)),
              Rational(small_limits(rng_limits), 2), kFive);
    if (x.norm().is_zero() || y.norm().is_zero()) continue;
    PairSumArgs args{embed(small_limits(rng_limits)),
                     embed(small_limits(rng_limits)),
                     x,
                     y,
                     small_limits(rng_limits),
                     small_limits(rng_limits),
                     -1,
                     Rational(small_limits(rng_limits), 3),
                     1};
    try {
      QuadExt linear_form = pair_sum_limit(args);
      QuadExt power_form = pair_power_sum_limit(args);
      CHECK(linear_form == power_form);
    } catch (const DenominatorVanishes&) {
    }
  }

  // The finite closed form differs from the limit exactly by the boundary
  // terms of the quotient numerator.
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> small(-3, 3);
  for (int i = 0; i < 50; ++i) {
    QuadExt x(Rational(small(rng)), Rational(small(rng), 2), kFive);
    QuadExt y(Rational(small(rng)), Rational(small(rng), 2), kFive);
    if (x.norm().is_zero() || y.norm().is_zero()) continue;
    PairSumArgs args{embed(small(rng)), embed(small(rng)),
                     x,                 y,
                     small(rng),        small(rng),
                     4,                 Rational(small(rng), 3)};
    try {
      QuadExt finite = pair_sum(args);
      QuadExt limit = pair_sum_limit(args);
      QuadExt xr = args.x.pow(args.r);
      QuadExt yr = args.y.pow(args.r);
      QuadExt one = QuadExt::one(kFive);
      QuadExt den = xr * yr * (args.z * args.z) - (xr + yr) * args.z + one;
      QuadExt boundary =
          xr * yr *
              (args.f * args.x.pow(args.r * args.k + args.s) +
               args.g * args.y.pow(args.r * args.k + args.s)) *
              args.z.pow(args.k + 2) -
          (args.f * args.x.pow(args.r * args.k + args.r + args.s) +
           args.g * args.y.pow(args.r * args.k + args.r + args.s)) *
              args.z.pow(args.k + 1);
      CHECK(finite == limit + boundary / den);
    } catch (const DenominatorVanishes&) {
    }
  }
}

TEST_CASE("pair power sums") {
  PairSumArgs squares{embed(1), embed(1), embed(2), embed(3), 1, 0, 1,
                      Rational(1), 2};
  CHECK(pair_power_sum(squares) == embed(29));  // 2^2 + 5^2

  // n = 0 with z = 1 degenerates every quotient denominator, but the sum
  // is plainly k+1 terms of 1.
  PairSumArgs constant{embed(1), embed(1), embed(2), embed(3), 1, 0, 3,
                       Rational(1), 0};
  CHECK(pair_power_sum(constant) == embed(4));
  CHECK_THROWS_AS(pair_power_sum_quotient(constant), DenominatorVanishes);

  // A degenerate interior ratio: x y z = 1 at i = 1, while the engine still
  // sums correctly and the quotient names the offending term.
  PairSumArgs interior{embed(1), embed(1), embed(2), embed(3), 1, 0, 4,
                       Rational(1, 6), 2};
  CHECK(pair_power_sum(interior) == accumulate(interior));
  try {
    pair_power_sum_quotient(interior);
    CHECK(false);
  } catch (const DenominatorVanishes& e) {
    CHECK(e.factor() == DenominatorVanishes::Factor::Quadratic);
    CHECK(e.term_index() == 1);
  }

  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> limit(-1, 5);
  std::uniform_int_distribution<int> power(0, 4);
  for (int i = 0; i < 100; ++i) {
    QuadExt x(Rational(small(rng)), Rational(small(rng), 2), kFive);
    QuadExt y(Rational(small(rng)), Rational(small(rng), 2), kFive);
    if (x.norm().is_zero() || y.norm().is_zero()) continue;
    PairSumArgs args{embed(small(rng), 2), embed(small(rng), 2),
                     x,                    y,
                     small(rng),           small(rng),
                     limit(rng),           Rational(small(rng), 3),
                     power(rng)};
    QuadExt direct = accumulate(args);
    CHECK(pair_power_sum(args) == direct);
    try {
      QuadExt quotient = pair_power_sum_quotient(args);
      CHECK(quotient == direct);
    } catch (const DenominatorVanishes&) {
    }
    if (args.n == 1) {
      try {
        QuadExt closed = pair_sum(args);
        CHECK(closed == direct);
      } catch (const DenominatorVanishes&) {
      }
    }
  }
}

TEST_CASE("linear sums") {
  TermCache fib(fibonacci());
  CHECK(sum_linear(fib, {SeqKind::U, 1, 1, 0, 4, Rational(1)}) == Rational(7));

  TermCache lucas(
      make_params(Rational(2), Rational(1), Rational(1), Rational(-1)));
  CHECK(sum_linear(lucas, {SeqKind::V, 1, 2, 1, 2, Rational(1)}) ==
        Rational(16));  // l_1 + l_3 + l_5

  TermCache w32(
      make_params(Rational(3), Rational(2), Rational(1), Rational(-1)));
  CHECK(sum_linear(w32, {SeqKind::W, 1, 1, 0, 2, Rational(1)}) ==
        Rational(10));  // 3 + 2 + 5

  CHECK(sum_linear(fib, {SeqKind::U, 1, 1, 0, -1, Rational(1)}) ==
        Rational(0));
  CHECK_THROWS_AS(sum_linear(fib, {SeqKind::U, 2, 1, 0, 4, Rational(1)}),
                  DomainError);
  CHECK_THROWS_AS(sum_linear(fib, {SeqKind::U, 1, 1, 0, -2, Rational(1)}),
                  DomainError);
}

TEST_CASE("power sums") {
  TermCache fib(fibonacci());
  CHECK(sum_power(fib, {SeqKind::U, 2, 1, 0, 3, Rational(1)}) == Rational(6));
  CHECK(sum_power(fib, {SeqKind::U, 2, 1, 0, 5, Rational(1)}) ==
        Rational(40));  // f_5 * f_6

  TermCache w32(
      make_params(Rational(3), Rational(2), Rational(1), Rational(-1)));
  SumSpec cube{SeqKind::W, 3, 2, -1, 2, Rational(1, 2)};
  Rational oracle = brute_sum(w32, cube);
  CHECK(oracle == Rational(355, 4));
  CHECK(sum_power(w32, cube) == oracle);
}

TEST_CASE("direct summation oracle") {
  TermCache fib(fibonacci());
  CHECK(brute_sum(fib, {SeqKind::W, 3, 2, 5, -1, Rational(7)}) == Rational(0));
  CHECK(brute_sum(fib, {SeqKind::U, 1, 1, 0, 4, Rational(1)}) == Rational(7));

  TermCache p3q2(
      make_params(Rational(0), Rational(1), Rational(3), Rational(2)));
  CHECK(brute_sum(p3q2, {SeqKind::U, 1, 1, 0, 3, Rational(1, 2)}) ==
        Rational(17, 8));
}

TEST_CASE("degenerate closed forms report and the oracle still works") {
  TermCache p3q2(
      make_params(Rational(0), Rational(1), Rational(3), Rational(2)));
  SumSpec spec{SeqKind::U, 1, 1, 0, 3, Rational(1, 2)};
  // q^r z^2 - v_r z + 1 = 2/4 - 3/2 + 1 = 0
  CHECK_THROWS_AS(sum_linear(p3q2, spec), DenominatorVanishes);
  try {
    sum_power(p3q2, spec);
    CHECK(false);
  } catch (const DenominatorVanishes& e) {
    CHECK(e.term_index() == 0);
  }
  CHECK(brute_sum(p3q2, spec) == Rational(17, 8));
}

TEST_CASE("limit and power validation") {
  TermCache fib(fibonacci());
  CHECK_THROWS_AS(sum_power(fib, {SeqKind::U, 2, 1, 0, -5, Rational(1)}),
                  DomainError);
  CHECK_THROWS_AS(sum_power(fib, {SeqKind::U, -1, 1, 0, 3, Rational(1)}),
                  DomainError);
  CHECK_THROWS_AS(brute_sum(fib, {SeqKind::U, 1, 1, 0, -2, Rational(1)}),
                  DomainError);
  CHECK_THROWS_AS(brute_sum(fib, {SeqKind::U, -3, 1, 0, 3, Rational(1)}),
                  DomainError);
}

TEST_CASE("zero step: constant subsequence") {
  // r = 0 gives the constant sequence w_s, with denominator (z - 1)^2; the
  // closed form is undefined at z = 1 and the direct sum still works.
  TermCache fib(fibonacci());
  SumSpec at_one{SeqKind::U, 1, 0, 3, 4, Rational(1)};
  CHECK_THROWS_AS(sum_linear(fib, at_one), DenominatorVanishes);
  CHECK_THROWS_AS(sum_power(fib, at_one), DenominatorVanishes);
  CHECK(brute_sum(fib, at_one) == Rational(10));  // five copies of u_3 = 2

  SumSpec away{SeqKind::U, 1, 0, 3, 4, Rational(1, 2)};
  CHECK(sum_linear(fib, away) == brute_sum(fib, away));
  CHECK(sum_power(fib, away) == brute_sum(fib, away));
  CHECK(brute_sum(fib, away) == Rational(2) * Rational(31, 16));
}

TEST_CASE("power sum at n = 1 equals the linear sum") {
  for (const HoradamParams& params : sample_params()) {
    TermCache cache(params);
    for (SeqKind kind : {SeqKind::U, SeqKind::V, SeqKind::W}) {
      for (long long r = -2; r <= 2; ++r) {
        for (long long k : {-1LL, 0LL, 3LL}) {
          for (const Rational& z : {Rational(1), Rational(1, 2)}) {
            SumSpec spec{kind, 1, r, 1, k, z};
            try {
              Rational linear = sum_linear(cache, spec);
              CHECK(linear == sum_power(cache, spec));
            } catch (const DenominatorVanishes&) {
              CHECK_THROWS_AS(sum_power(cache, spec), DenominatorVanishes);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("sequence sums through the generic engine") {
  for (const HoradamParams& params : sample_params()) {
    TermCache cache(params);
    auto [alpha, beta] = roots(params);
    auto coeffs = binet_coeffs(params);
    QuadExt one = QuadExt::one(params.disc);
    QuadExt root = QuadExt::sqrt_disc(params.disc);
    for (long long n = 0; n <= 3; ++n) {
      for (long long r : {-2LL, 1LL, 2LL}) {
        SumSpec spec{SeqKind::W, n, r, 1, 4, Rational(1, 2)};
        PairSumArgs args{coeffs.A, coeffs.B, alpha, beta, r, 1, 4,
                         Rational(1, 2), n};
        try {
          Rational closed = sum_power(cache, spec);
          CHECK(closed == pair_power_sum(args).to_rational());
        } catch (const DenominatorVanishes&) {
        }

        // u^n sums carry a sqrt(D)^n factor through the engine.
        spec.kind = SeqKind::U;
        PairSumArgs u_args{one, -one, alpha, beta, r, 1, 4, Rational(1, 2), n};
        try {
          Rational closed = sum_power(cache, spec);
          CHECK(closed == (pair_power_sum(u_args) / root.pow(n)).to_rational());
        } catch (const DenominatorVanishes&) {
        }

        spec.kind = SeqKind::V;
        PairSumArgs v_args{one, one, alpha, beta, r, 1, 4, Rational(1, 2), n};
        try {
          Rational closed = sum_power(cache, spec);
          CHECK(closed == pair_power_sum(v_args).to_rational());
        } catch (const DenominatorVanishes&) {
        }
      }
    }
  }
}

TEST_CASE("shared denominators of paired binomial terms") {
  // q^{r(n-i)} v_{r(2i-n)} = q^{ri} v_{r(n-2i)}, the identity that makes the
  // i and n-i partial fractions coincide.
  for (const HoradamParams& params : sample_params()) {
    TermCache cache(params);
    for (long long n = 0; n <= 5; ++n)
      for (long long r = -3; r <= 3; ++r)
        for (long long i = 0; i <= n; ++i)
          CHECK(cache.q_pow(r * (n - i)) * cache.v(r * (2 * i - n)) ==
                cache.q_pow(r * i) * cache.v(r * (n - 2 * i)));
  }
}
