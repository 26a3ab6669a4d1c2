#include "horadam/verify.hpp"

#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "horadam/closed_forms.hpp"
#include "horadam/genfunc.hpp"
#include "horadam/quadext.hpp"
#include "horadam/sequence.hpp"

namespace horadam::verify {

namespace {

constexpr std::size_t kMaxSamples = 5;

void record(BlockResult& block, bool ok, const std::string& context) {
  ++block.checked;
  if (ok) return;
  ++block.failed;
  if (block.samples.size() < kMaxSamples) block.samples.push_back(context);
}

// Hot-loop variant: the failure description is only built when needed.
template <typename MakeContext>
void record_lazy(BlockResult& block, bool ok, MakeContext&& make_context) {
  ++block.checked;
  if (ok) return;
  ++block.failed;
  if (block.samples.size() < kMaxSamples)
    block.samples.push_back(make_context());
}

struct GridPoint {
  HoradamParams params;
  SeqKind kind;
};

std::vector<GridPoint> parameter_grid(Scale scale) {
  std::vector<Rational> ps, qs;
  if (scale == Scale::Full) {
    ps = {Rational(1), Rational(2), Rational(3), Rational(-1)};
    qs = {Rational(-1), Rational(1), Rational(2), Rational(-2)};
  } else {
    ps = {Rational(1), Rational(3)};
    qs = {Rational(-1), Rational(2)};
  }
  std::vector<GridPoint> grid;
  for (const Rational& p : ps) {
    for (const Rational& q : qs) {
      if ((p * p - Rational(4) * q).is_zero()) continue;  // coincident roots
      grid.push_back({make_params(Rational(0), Rational(1), p, q), SeqKind::U});
      grid.push_back({make_params(Rational(2), p, p, q), SeqKind::V});
      grid.push_back({make_params(Rational(3), Rational(2), p, q), SeqKind::W});
      grid.push_back(
          {make_params(Rational(-1), Rational(4), p, q), SeqKind::W});
    }
  }
  return grid;
}

std::vector<Rational> z_values(Scale scale) {
  if (scale == Scale::Full)
    return {Rational(1), Rational(-1), Rational(1, 2), Rational(-2, 3)};
  return {Rational(1), Rational(1, 2)};
}

std::string describe(const HoradamParams& params, const SumSpec& spec) {
  std::ostringstream os;
  os << "w(" << params.a << "," << params.b << ";" << params.p << ","
     << params.q << ") kind=" << to_string(spec.kind) << " n=" << spec.n
     << " r=" << spec.r << " s=" << spec.s << " k=" << spec.k
     << " z=" << spec.z;
  return os.str();
}

bool power_denominator_vanishes(TermCache& cache, const SumSpec& spec) {
  for (long long i = 0; i <= spec.n; ++i) {
    Rational den = cache.q_pow(spec.r * spec.n) * spec.z * spec.z -
                   cache.q_pow(spec.r * i) *
                       cache.v(spec.r * (spec.n - 2 * i)) * spec.z +
                   Rational(1);
    if (den.is_zero()) return true;
  }
  return false;
}

}  // namespace

BlockResult check_oracle_grid(Scale scale) {
  BlockResult block{"oracle grid: closed-form sums vs direct summation"};
  std::vector<long long> rs, ss, ks, ns;
  if (scale == Scale::Full) {
    for (long long r = -3; r <= 3; ++r) rs.push_back(r);
    for (long long s = -4; s <= 4; ++s) ss.push_back(s);
    for (long long k = -1; k <= 8; ++k) ks.push_back(k);
    for (long long n = 0; n <= 5; ++n) ns.push_back(n);
  } else {
    rs = {-2, 0, 1};
    ss = {-1, 0, 2};
    ks = {-1, 0, 1, 3};
    ns = {0, 1, 2, 3};
  }
  std::vector<Rational> zs = z_values(scale);

  for (const GridPoint& point : parameter_grid(scale)) {
    TermCache cache(point.params);
    for (long long r : rs) {
      for (long long s : ss) {
        for (const Rational& z : zs) {
          for (long long n : ns) {
            for (long long k : ks) {
              SumSpec spec{point.kind, n, r, s, k, z};
              Rational oracle = brute_sum(cache, spec);
              bool expect_vanish = power_denominator_vanishes(cache, spec);
              try {
                Rational closed = sum_power(cache, spec);
                record_lazy(block, !expect_vanish && closed == oracle, [&] {
                  return describe(point.params, spec) + ": power sum " +
                         closed.str() + " vs oracle " + oracle.str();
                });
              } catch (const DenominatorVanishes&) {
                record_lazy(block, expect_vanish, [&] {
                  return describe(point.params, spec) +
                         ": unexpected DenominatorVanishes";
                });
              }
              if (n == 1) {
                try {
                  Rational closed = sum_linear(cache, spec);
                  record_lazy(block, !expect_vanish && closed == oracle, [&] {
                    return describe(point.params, spec) + ": linear sum " +
                           closed.str() + " vs oracle " + oracle.str();
                  });
                } catch (const DenominatorVanishes&) {
                  record_lazy(block, expect_vanish, [&] {
                    return describe(point.params, spec) +
                           ": unexpected DenominatorVanishes (linear)";
                  });
                }
              }
            }
          }
        }
      }
    }
  }
  return block;
}

BlockResult check_term_consistency(Scale scale) {
  BlockResult block{"term evaluation: closed form vs recurrence, reflections"};
  const std::vector<SeqKind> kinds{SeqKind::U, SeqKind::V, SeqKind::W};

  for (const GridPoint& point : parameter_grid(scale)) {
    const HoradamParams& params = point.params;
    TermCache cache(params);
    std::ostringstream tag;
    tag << "w(" << params.a << "," << params.b << ";" << params.p << ","
        << params.q << ")";

    for (SeqKind kind : kinds) {
      auto [a, b] = initial_values(params, kind);
      for (long long n = -20; n <= 20; ++n) {
        Rational rec = term_by_recurrence(params, kind, n);
        record(block, term_by_binet(params, kind, n) == rec,
               tag.str() + " closed form != recurrence at n=" +
                   std::to_string(n));
        record(block, cache.term(kind, n) == rec,
               tag.str() + " cached term != recurrence at n=" +
                   std::to_string(n));
      }
      // w_{-n} = q^{-n} (a v_n - w_n), checked multiplied through by q^n.
      for (long long n = -20; n <= 20; ++n) {
        Rational lhs = cache.term(kind, -n) * cache.q_pow(n);
        Rational rhs = a * cache.v(n) - cache.term(kind, n);
        record(block, lhs == rhs,
               tag.str() + " negative-index identity fails at n=" +
                   std::to_string(n));
      }
      // The u-quotient variant, where its denominator is nonzero.
      for (long long n = 0; n <= 15; ++n) {
        Rational den = b * cache.u(n) - a * params.q * cache.u(n - 1);
        if (!den.is_zero()) {
          Rational frac =
              (a * params.p - b) * cache.u(n) - a * params.q * cache.u(n - 1);
          Rational expected =
              frac / den * cache.q_pow(-n) * cache.term(kind, n);
          record(block, cache.term(kind, -n) == expected,
                 tag.str() + " quotient negative-index identity fails at n=" +
                     std::to_string(n));
        }
      }
    }

    for (long long n = 0; n <= 15; ++n) {
      record(block, cache.u(-n) == -(cache.q_pow(-n) * cache.u(n)),
             tag.str() + " u reflection fails at n=" + std::to_string(n));
      record(block, cache.v(-n) == cache.q_pow(-n) * cache.v(n),
             tag.str() + " v reflection fails at n=" + std::to_string(n));
    }

    // U and V are the general sequence with overridden initial values.
    HoradamParams as_u =
        make_params(Rational(0), Rational(1), params.p, params.q);
    HoradamParams as_v = make_params(Rational(2), params.p, params.p, params.q);
    for (long long n = -10; n <= 10; ++n) {
      record(block,
             term_by_recurrence(params, SeqKind::U, n) ==
                 term_by_recurrence(as_u, SeqKind::W, n),
             tag.str() + " u != w(0,1) at n=" + std::to_string(n));
      record(block,
             term_by_recurrence(params, SeqKind::V, n) ==
                 term_by_recurrence(as_v, SeqKind::W, n),
             tag.str() + " v != w(2,p) at n=" + std::to_string(n));
    }
  }
  return block;
}

namespace {

struct EngineCase {
  PairSumArgs args;
  bool crafted_degenerate = false;
};

std::vector<EngineCase> engine_cases(Scale scale) {
  std::mt19937_64 rng(0x5eed5eed);
  const std::vector<Rational> discs{Rational(5),  Rational(2),  Rational(3),
                                    Rational(13), Rational(-1), Rational(-3)};
  std::uniform_int_distribution<int> num_dist(-4, 4);
  std::uniform_int_distribution<int> den_dist(1, 3);
  std::uniform_int_distribution<int> r_dist(-3, 3);
  std::uniform_int_distribution<int> s_dist(-4, 4);
  std::uniform_int_distribution<int> k_dist(-1, 6);
  std::uniform_int_distribution<int> n_dist(0, 4);
  std::uniform_int_distribution<std::size_t> disc_dist(0, discs.size() - 1);

  auto rat = [&] { return Rational(num_dist(rng), den_dist(rng)); };
  auto elem = [&](const Rational& d) { return QuadExt(rat(), rat(), d); };
  auto invertible = [&](const Rational& d) {
    QuadExt e = elem(d);
    while (e.norm().is_zero()) e = elem(d);
    return e;
  };

  std::vector<EngineCase> cases;
  std::size_t random_count = scale == Scale::Full ? 188 : 50;
  for (std::size_t c = 0; c < random_count; ++c) {
    Rational d = discs[disc_dist(rng)];
    PairSumArgs args{elem(d),       elem(d), invertible(d), invertible(d),
                     r_dist(rng),   s_dist(rng), k_dist(rng),
                     rat(),         n_dist(rng)};
    cases.push_back({args, false});
  }

  // Hand-picked degenerate geometric ratios hitting the (k+1)*x^s path.
  Rational d5(5);
  auto embed = [&](long long numer, long long denom) {
    return QuadExt::from_rational(Rational(numer, denom), d5);
  };
  QuadExt one = QuadExt::one(d5);
  std::vector<PairSumArgs> crafted{
      // x^r z = 1
      {one, one, embed(2, 1), embed(3, 1), 1, 0, 4, Rational(1, 2), 1},
      {embed(2, 1), embed(-1, 1), embed(1, 3), embed(5, 1), 1, 2, 5,
       Rational(3), 1},
      {one, embed(1, 2), embed(2, 1), embed(5, 1), 2, -1, 3, Rational(1, 4),
       1},
      // y^r z = 1
      {one, one, embed(3, 1), embed(2, 1), 1, 0, 4, Rational(1, 2), 1},
      {embed(1, 3), one, embed(7, 2), embed(1, 5), -1, 1, 6, Rational(1, 5),
       1},
      // both factors degenerate
      {one, embed(2, 1), embed(2, 1), embed(1, 2), 1, 1, 3, Rational(1, 2),
       1},
      {one, one, embed(1, 1), embed(1, 1), 3, -2, 5, Rational(1), 2},
      // cross-term ratio x^{r(n-i)} y^{ri} z = 1 at an interior i
      {one, one, embed(2, 1), embed(3, 1), 1, 0, 4, Rational(1, 6), 2},
      {embed(1, 2), embed(3, 1), embed(4, 1), embed(1, 2), 1, 1, 3,
       Rational(1, 2), 2},
      // n = 0 with z = 1: every ratio is 1
      {one, one, embed(2, 1), embed(3, 1), 1, 0, 3, Rational(1), 0},
      // surd bases with a degenerate rational ratio x^r z = 1 via x^2 = 5
      {one, one, QuadExt::sqrt_disc(d5), embed(2, 1), 2, 0, 4, Rational(1, 5),
       1},
      {one, -one, QuadExt::sqrt_disc(d5), QuadExt(Rational(1), Rational(1), d5),
       2, 1, 3, Rational(1, 5), 3},
  };
  for (const PairSumArgs& args : crafted) cases.push_back({args, true});
  return cases;
}

QuadExt accumulate_pair_sum(const PairSumArgs& args) {
  QuadExt acc = QuadExt::zero(args.x.disc());
  Rational zp(1);
  for (long long j = 0; j <= args.k; ++j) {
    QuadExt base = args.f * args.x.pow(args.r * j + args.s) +
                   args.g * args.y.pow(args.r * j + args.s);
    acc += base.pow(args.n) * zp;
    zp *= args.z;
  }
  return acc;
}

}  // namespace

BlockResult check_pair_engine(Scale scale) {
  BlockResult block{"pair-sum engine vs direct accumulation"};
  long long degenerate_hits = 0;

  for (const EngineCase& c : engine_cases(scale)) {
    const PairSumArgs& args = c.args;
    QuadExt one = QuadExt::one(args.x.disc());
    QuadExt direct = accumulate_pair_sum(args);
    bool x_degenerate = (args.x.pow(args.r) * args.z) == one;
    bool y_degenerate = (args.y.pow(args.r) * args.z) == one;
    bool any_ratio_degenerate = false;
    for (long long i = 0; i <= args.n && !any_ratio_degenerate; ++i) {
      any_ratio_degenerate =
          (args.x.pow(args.r * (args.n - i)) * args.y.pow(args.r * i) *
           args.z) == one ||
          (args.x.pow(args.r * i) * args.y.pow(args.r * (args.n - i)) *
           args.z) == one;
    }
    if (any_ratio_degenerate) ++degenerate_hits;

    std::ostringstream tag;
    tag << "f=" << args.f << " g=" << args.g << " x=" << args.x
        << " y=" << args.y << " r=" << args.r << " s=" << args.s
        << " k=" << args.k << " z=" << args.z << " n=" << args.n;

    // The binomial engine is degenerate-safe and must always match.
    record(block, pair_power_sum(args) == direct,
           tag.str() + ": power engine != direct sum");

    if (args.n == 1) {
      try {
        QuadExt closed = pair_sum(args);
        record(block, !x_degenerate && !y_degenerate && closed == direct,
               tag.str() + ": four-term closed form mismatch");
        QuadExt via_geoms =
            args.f * geometric_sum(args.x, args.r, args.s, args.k, args.z) +
            args.g * geometric_sum(args.y, args.r, args.s, args.k, args.z);
        record(block, closed == via_geoms,
               tag.str() + ": closed form != geometric split");
      } catch (const DenominatorVanishes& e) {
        bool right_factor =
            (e.factor() == DenominatorVanishes::Factor::First &&
             x_degenerate) ||
            (e.factor() == DenominatorVanishes::Factor::Second &&
             y_degenerate);
        record(block, right_factor,
               tag.str() + ": wrong or spurious vanished factor");
      }
    }

    // The quotient form agrees wherever it is defined, and reports the
    // offending term elsewhere.
    try {
      QuadExt quotient = pair_power_sum_quotient(args);
      record(block, quotient == direct,
             tag.str() + ": quotient form != direct sum");
    } catch (const DenominatorVanishes& e) {
      long long i = e.term_index().value_or(-1);
      bool vanished = false;
      if (i >= 0 && i <= args.n) {
        QuadExt xy = args.x * args.y;
        QuadExt den =
            xy.pow(args.r * args.n) * (args.z * args.z) -
            xy.pow(args.r * i) *
                (args.x.pow(args.r * (args.n - 2 * i)) +
                 args.y.pow(args.r * (args.n - 2 * i))) *
                args.z +
            one;
        vanished = den.is_zero();
      }
      record(block, vanished, tag.str() + ": spurious quotient denominator");
    }

    // Geometric sums against their own direct accumulation.
    QuadExt geo_direct = QuadExt::zero(args.x.disc());
    Rational zp(1);
    for (long long j = 0; j <= args.k; ++j) {
      geo_direct += args.x.pow(args.r * j + args.s) * zp;
      zp *= args.z;
    }
    record(block,
           geometric_sum(args.x, args.r, args.s, args.k, args.z) == geo_direct,
           tag.str() + ": geometric sum != direct sum");
  }

  record(block, degenerate_hits >= 10,
         "fewer than 10 degenerate-ratio cases exercised (" +
             std::to_string(degenerate_hits) + ")");
  return block;
}

BlockResult check_genfunc_roundtrip(Scale scale) {
  BlockResult block{"generating functions: series coefficients vs terms"};
  std::vector<long long> rs, ss, ns;
  if (scale == Scale::Full) {
    rs = {-2, -1, 0, 1, 2};
    ss = {-2, -1, 0, 1, 2};
    ns = {0, 1, 2, 3, 4};
  } else {
    rs = {-1, 0, 1};
    ss = {-1, 0, 1};
    ns = {0, 1, 2};
  }
  constexpr long long kTerms = 12;

  for (const GridPoint& point : parameter_grid(scale)) {
    TermCache cache(point.params);
    for (long long n : ns) {
      for (long long r : rs) {
        for (long long s : ss) {
          RationalFn fn = gf_power(cache, point.kind, n, r, s);
          std::ostringstream tag;
          tag << describe(point.params, SumSpec{point.kind, n, r, s, 0,
                                                Rational(0)});

          long long max_den_degree = 2 * ((n + 2) / 2);
          record(block, fn.den.degree() <= max_den_degree,
                 tag.str() + ": denominator degree " +
                     std::to_string(fn.den.degree()) + " too high");
          record(block, fn.den.coeff(0).is_one(),
                 tag.str() + ": denominator constant term not 1");

          std::vector<Rational> coeffs = series_coeffs(fn, kTerms);
          bool all_match = true;
          for (long long j = 0; j < kTerms; ++j) {
            if (coeffs[static_cast<std::size_t>(j)] !=
                cache.term(point.kind, r * j + s).pow(n)) {
              all_match = false;
              break;
            }
          }
          record(block, all_match, tag.str() + ": series coefficient mismatch");

          if (n == 1) {
            RationalFn linear = gf_linear(cache, point.kind, r, s);
            record(block, linear.den.coeff(0).is_one() &&
                              linear.den.degree() <= 2,
                   tag.str() + ": linear denominator malformed");
            record(block, reduce(linear) == fn,
                   tag.str() + ": gf_linear != gf_power at n=1");
          }
        }
      }
    }
  }
  return block;
}

namespace {

// The fixed r = 1, s = 0 specializations. N is the power of the summand.
Rational special_denominator(TermCache& cache, long long N, long long i,
                             const Rational& z) {
  return cache.q_pow(N) * z * z - cache.q_pow(i) * cache.v(N - 2 * i) * z +
         Rational(1);
}

bool special_vanishes(TermCache& cache, long long N, const Rational& z) {
  for (long long i = 0; i <= N; ++i)
    if (special_denominator(cache, N, i, z).is_zero()) return true;
  return false;
}

// Finite sums of u^N (even/odd) and v^N at r=1, s=0.
Rational special_finite(TermCache& cache, SeqKind kind, long long N,
                        long long k, const Rational& z) {
  bool u_kind = kind == SeqKind::U;
  bool odd = (N % 2) != 0;
  Rational zk1 = z.pow(k + 1);
  Rational zk2 = z.pow(k + 2);
  Rational acc(0);
  for (long long i = 0; i <= N; ++i) {
    auto base = [&](long long m) -> const Rational& {
      return u_kind && odd ? cache.u(m) : cache.v(m);
    };
    Rational den = special_denominator(cache, N, i, z);
    Rational num = cache.q_pow(N + k * i) * base(k * (N - 2 * i)) * zk2 -
                   cache.q_pow(i * (k + 1)) * base((k + 1) * (N - 2 * i)) *
                       zk1;
    if (u_kind && odd)
      num += cache.q_pow(i) * base(N - 2 * i) * z;
    else
      num -= cache.q_pow(i) * base(N - 2 * i) * z - Rational(2);
    Rational term = num / den * binomial(N, i);
    if (u_kind && (i % 2) != 0) term = -term;
    acc += term;
  }
  Rational prefactor(2);
  if (u_kind) prefactor = prefactor * cache.params().disc.pow(odd ? (N - 1) / 2
                                                                  : N / 2);
  return acc / prefactor;
}

// Generating functions of u^N (even/odd) and v^N at r=1, s=0.
RationalFn special_genfunc(TermCache& cache, SeqKind kind, long long N) {
  bool u_kind = kind == SeqKind::U;
  bool odd = (N % 2) != 0;
  struct RatPart {
    Poly den;
    Poly num;
  };
  std::vector<RatPart> parts;
  for (long long i = 0; i <= N; ++i) {
    Poly den{Rational(1), -(cache.q_pow(i) * cache.v(N - 2 * i)),
             cache.q_pow(N)};
    Rational constant = u_kind && odd ? Rational(0) : Rational(2);
    Rational linear = cache.q_pow(i) *
                      (u_kind && odd ? cache.u(N - 2 * i)
                                     : -cache.v(N - 2 * i));
    Poly num = Poly{constant, linear} * binomial(N, i);
    if (u_kind && (i % 2) != 0) num = -num;
    bool merged = false;
    for (RatPart& part : parts) {
      if (part.den == den) {
        part.num += num;
        merged = true;
        break;
      }
    }
    if (!merged) parts.push_back({std::move(den), std::move(num)});
  }
  Poly common{Rational(1)};
  for (const RatPart& part : parts) common *= part.den;
  Poly num;
  for (const RatPart& part : parts) {
    Poly others{Rational(1)};
    for (const RatPart& other : parts)
      if (&other != &part) others *= other.den;
    num += part.num * others;
  }
  Rational prefactor(2);
  if (u_kind) prefactor = prefactor * cache.params().disc.pow(odd ? (N - 1) / 2
                                                                  : N / 2);
  return reduce(make_rational_fn(num / prefactor, common));
}

}  // namespace

BlockResult check_special_cases(Scale scale) {
  BlockResult block{"r=1, s=0 specializations vs general operations"};
  std::vector<long long> ks =
      scale == Scale::Full ? std::vector<long long>{-1, 0, 1, 2, 3, 4, 5, 6}
                           : std::vector<long long>{-1, 0, 2, 3};
  std::vector<Rational> zs = z_values(scale);
  long long max_n = scale == Scale::Full ? 5 : 3;

  for (const GridPoint& point : parameter_grid(scale)) {
    if (point.kind == SeqKind::W) continue;  // specializations exist for u, v
    TermCache cache(point.params);
    for (long long n = 0; n <= max_n; ++n) {
      for (const Rational& z : zs) {
        for (long long k : ks) {
          SumSpec spec{point.kind, n, 1, 0, k, z};
          if (special_vanishes(cache, n, z)) {
            try {
              sum_power(cache, spec);
              record(block, false,
                     describe(point.params, spec) +
                         ": general form did not report vanishing");
            } catch (const DenominatorVanishes&) {
              record(block, true, "");
            }
            continue;
          }
          Rational special = special_finite(cache, point.kind, n, k, z);
          record(block, special == sum_power(cache, spec),
                 describe(point.params, spec) + ": specialized form " +
                     special.str() + " != general sum");
        }
      }
      RationalFn special_fn = special_genfunc(cache, point.kind, n);
      RationalFn general_fn = gf_power(cache, point.kind, n, 1, 0);
      record(block, special_fn == general_fn,
             describe(point.params,
                      SumSpec{point.kind, n, 1, 0, 0, Rational(0)}) +
                 ": special generating function mismatch");
    }
  }
  return block;
}

BlockResult check_surd_free(Scale scale) {
  BlockResult block{"surd cancellation in rational-returning operations"};
  std::vector<long long> rs = scale == Scale::Full
                                  ? std::vector<long long>{-3, -1, 1, 2, 3}
                                  : std::vector<long long>{-1, 1, 2};
  std::vector<long long> ss = scale == Scale::Full
                                  ? std::vector<long long>{-4, -1, 0, 2, 4}
                                  : std::vector<long long>{-1, 0, 2};
  std::vector<Rational> zs = z_values(scale);
  long long max_n = scale == Scale::Full ? 5 : 3;

  for (const GridPoint& point : parameter_grid(scale)) {
    TermCache cache(point.params);
    std::ostringstream tag;
    tag << "w(" << point.params.a << "," << point.params.b << ";"
        << point.params.p << "," << point.params.q << ")";

    for (SeqKind kind : {SeqKind::U, SeqKind::V, SeqKind::W}) {
      for (long long n = -20; n <= 20; ++n) {
        try {
          term_by_binet(point.params, kind, n);
          record(block, true, "");
        } catch (const SurdResidue&) {
          record(block, false,
                 tag.str() + ": surd residue in closed-form term at n=" +
                     std::to_string(n));
        }
      }
    }

    for (long long n = 0; n <= max_n; ++n) {
      for (long long r : rs) {
        for (long long s : ss) {
          for (const Rational& z : zs) {
            SumSpec spec{point.kind, n, r, s, 4, z};
            try {
              sum_power(cache, spec);
              record(block, true, "");
            } catch (const DenominatorVanishes&) {
              record(block, true, "");  // vanishing is allowed here
            } catch (const SurdResidue&) {
              record(block, false,
                     describe(point.params, spec) +
                         ": surd residue in power sum");
            }
          }
          try {
            gf_power(cache, point.kind, n, r, s);
            record(block, true, "");
          } catch (const SurdResidue&) {
            record(block, false,
                   describe(point.params,
                            SumSpec{point.kind, n, r, s, 0, Rational(0)}) +
                       ": surd residue in generating function");
          }
        }
      }
    }
  }
  return block;
}

Report run_all(Scale scale) {
  Report report;
  report.blocks.push_back(check_term_consistency(scale));
  report.blocks.push_back(check_pair_engine(scale));
  report.blocks.push_back(check_oracle_grid(scale));
  report.blocks.push_back(check_genfunc_roundtrip(scale));
  report.blocks.push_back(check_special_cases(scale));
  report.blocks.push_back(check_surd_free(scale));
  return report;
}

long long Report::checked() const {
  return std::accumulate(blocks.begin(), blocks.end(), 0LL,
                         [](long long acc, const BlockResult& b) {
                           return acc + b.checked;
                         });
}

long long Report::failed() const {
  return std::accumulate(blocks.begin(), blocks.end(), 0LL,
                         [](long long acc, const BlockResult& b) {
                           return acc + b.failed;
                         });
}

bool print_report(const Report& report, std::ostream& os) {
  for (const BlockResult& block : report.blocks) {
    os << (block.ok() ? "ok  " : "FAIL") << "  " << block.name << ": "
       << block.checked << " checks, " << block.failed << " failures\n";
    for (const std::string& sample : block.samples)
      os << "      " << sample << "\n";
  }
  os << (report.ok() ? "PASS" : "FAIL") << "  total: " << report.checked()
     << " checks, " << report.failed() << " failures\n";
  return report.ok();
}

}  // namespace horadam::verify
