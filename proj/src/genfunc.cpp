#include "horadam/genfunc.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "horadam/closed_forms.hpp"
#include "horadam/quadext.hpp"

namespace horadam {

namespace {
const Rational kZero(0);
}

const Rational& Poly::coeff(long long i) const {
  if (i < 0 || i >= static_cast<long long>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(i)];
}

Poly Poly::operator-() const {
  std::vector<Rational> out;
  out.reserve(c_.size());
  for (const Rational& c : c_) out.push_back(-c);
  return Poly(std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.c_.size()) out[i] += a.c_[i];
    if (i < b.c_.size()) out[i] += b.c_[i];
  }
  return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(out));
}

Poly operator*(const Poly& a, const Rational& s) {
  std::vector<Rational> out;
  out.reserve(a.c_.size());
  for (const Rational& c : a.c_) out.push_back(c * s);
  return Poly(std::move(out));
}

Poly operator/(const Poly& a, const Rational& s) { return a * s.inv(); }

std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  if (num.degree() < den.degree()) return {Poly(), num};
  std::vector<Rational> rem(num.coeffs());
  std::vector<Rational> quot(
      static_cast<std::size_t>(num.degree() - den.degree()) + 1);
  const Rational lead_inv = den.coeff(den.degree()).inv();
  for (long long d = num.degree(); d >= den.degree(); --d) {
    Rational factor = rem[static_cast<std::size_t>(d)] * lead_inv;
    if (factor.is_zero()) continue;
    quot[static_cast<std::size_t>(d - den.degree())] = factor;
    for (long long j = 0; j <= den.degree(); ++j)
      rem[static_cast<std::size_t>(d - den.degree() + j)] -=
          factor * den.coeff(j);
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a / a.coeff(a.degree());  // monic
}

RationalFn make_rational_fn(Poly num, Poly den) {
  const Rational& c0 = den.coeff(0);
  if (c0.is_zero())
    throw DomainError("denominator constant term must be nonzero");
  if (!c0.is_one()) {
    Rational inv = c0.inv();
    num = num * inv;
    den = den * inv;
  }
  return RationalFn{std::move(num), std::move(den)};
}

RationalFn reduce(const RationalFn& fn) {
  if (fn.num.is_zero()) return RationalFn{Poly(), Poly{Rational(1)}};
  Poly g = poly_gcd(fn.num, fn.den);
  if (g.degree() < 1) return make_rational_fn(fn.num, fn.den);
  return make_rational_fn(poly_divmod(fn.num, g).first,
                          poly_divmod(fn.den, g).first);
}

std::vector<Rational> series_coeffs(const RationalFn& fn, long long m) {
  if (m < 0) throw DomainError("coefficient count must be nonnegative");
  if (!fn.den.coeff(0).is_one())
    throw DomainError("denominator constant term must be 1");
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(m));
  for (long long j = 0; j < m; ++j) {
    Rational cj = fn.num.coeff(j);
    long long tmax = std::min(j, fn.den.degree());
    for (long long t = 1; t <= tmax; ++t)
      cj -= fn.den.coeff(t) * c[static_cast<std::size_t>(j - t)];
    c.push_back(std::move(cj));
  }
  return c;
}

namespace {

// Polynomials with ring-element coefficients, used while the surd parts of
// the general-sequence numerators are still in flight.
using QPoly = std::vector<QuadExt>;

QPoly qpoly_scale(const QPoly& a, const QuadExt& s) {
  QPoly out;
  out.reserve(a.size());
  for (const QuadExt& c : a) out.push_back(c * s);
  return out;
}

QPoly qpoly_add(const QPoly& a, const QPoly& b, const Rational& disc) {
  QPoly out(std::max(a.size(), b.size()), QuadExt::zero(disc));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

QPoly qpoly_mul_poly(const QPoly& a, const Poly& b, const Rational& disc) {
  if (a.empty() || b.is_zero()) return {};
  QPoly out(a.size() + static_cast<std::size_t>(b.degree()),
            QuadExt::zero(disc));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (long long j = 0; j <= b.degree(); ++j)
      out[i + static_cast<std::size_t>(j)] += a[i] * b.coeff(j);
  return out;
}

Poly qpoly_extract_rational(const QPoly& a) {
  std::vector<Rational> out;
  out.reserve(a.size());
  for (const QuadExt& c : a) out.push_back(c.to_rational());
  return Poly(std::move(out));
}

// One partial fraction of the power generating function: a quadratic
// denominator shared by the binomial terms i and n-i, with the numerators
// of all terms mapped onto it accumulated.
struct Part {
  Poly den;
  QPoly num;
};

void add_part(std::vector<Part>& parts, Poly den, QPoly num,
              const Rational& disc) {
  for (Part& part : parts) {
    if (part.den == den) {
      part.num = qpoly_add(part.num, num, disc);
      return;
    }
  }
  parts.push_back(Part{std::move(den), std::move(num)});
}

// Combines sum of num_i/den_i over the product of the (distinct) den_i.
RationalFn combine_parts(const std::vector<Part>& parts, const Rational& disc,
                         const Rational& prefactor) {
  Poly common{Rational(1)};
  for (const Part& part : parts) common *= part.den;
  QPoly num;
  for (const Part& part : parts) {
    Poly others{Rational(1)};
    for (const Part& other : parts)
      if (&other != &part) others *= other.den;
    num = qpoly_add(num, qpoly_mul_poly(part.num, others, disc), disc);
  }
  Poly num_rat = qpoly_extract_rational(num) / prefactor;
  return reduce(make_rational_fn(std::move(num_rat), std::move(common)));
}

Poly quadratic_denominator(TermCache& cache, long long n, long long r,
                           long long i) {
  return Poly{Rational(1),
              -(cache.q_pow(r * i) * cache.v(r * (n - 2 * i))),
              cache.q_pow(r * n)};
}

}  // namespace

RationalFn gf_linear(TermCache& cache, SeqKind kind, long long r, long long s) {
  Poly den{Rational(1), -cache.v(r), cache.q_pow(r)};
  Poly num;
  switch (kind) {
    case SeqKind::U:
      num = Poly{cache.u(s), cache.q_pow(s) * cache.u(r - s)};
      break;
    case SeqKind::V:
      num = Poly{cache.v(s), -(cache.q_pow(s) * cache.v(r - s))};
      break;
    case SeqKind::W:
      num = Poly{cache.w(s), -(cache.q_pow(r) * cache.w(s - r))};
      break;
  }
  return make_rational_fn(std::move(num), std::move(den));
}

RationalFn gf_power(TermCache& cache, SeqKind kind, long long n, long long r,
                    long long s) {
  if (n < 0) throw DomainError("power n must be nonnegative");
  const Rational& disc = cache.params().disc;
  bool u_kind = kind == SeqKind::U;
  bool odd = (n % 2) != 0;

  std::vector<Part> parts;
  if (kind == SeqKind::W) {
    const BinetCoeffs& coeffs = cache.binet();
    std::vector<QuadExt> apow{QuadExt::one(disc)}, bpow{QuadExt::one(disc)};
    for (long long i = 1; i <= n; ++i) {
      apow.push_back(apow.back() * coeffs.A);
      bpow.push_back(bpow.back() * coeffs.B);
    }
    for (long long i = 0; i <= n; ++i) {
      QuadExt t1 = apow[static_cast<std::size_t>(n - i)] *
                   bpow[static_cast<std::size_t>(i)];
      QuadExt t2 = apow[static_cast<std::size_t>(i)] *
                   bpow[static_cast<std::size_t>(n - i)];
      auto sym = [&](long long ea, long long eb) {
        return t1 * cache.alpha_pow(ea) * cache.beta_pow(eb) +
               t2 * cache.alpha_pow(eb) * cache.beta_pow(ea);
      };
      long long stretch = n - 2 * i;
      QuadExt constant = sym(s * stretch, 0);
      QuadExt linear = -sym(s * stretch + r * i, r * (n - i));
      QuadExt scale = QuadExt::from_rational(
          binomial(n, i) * cache.q_pow(s * i), disc);
      add_part(parts, quadratic_denominator(cache, n, r, i),
               qpoly_scale(QPoly{constant, linear}, scale), disc);
    }
  } else {
    for (long long i = 0; i <= n; ++i) {
      long long stretch = n - 2 * i;
      auto base_term = [&](long long m) -> const Rational& {
        return u_kind && odd ? cache.u(m) : cache.v(m);
      };
      Rational tail = cache.q_pow(s * stretch + r * i) *
                      base_term((r - s) * stretch);
      if (!(u_kind && odd)) tail = -tail;
      Rational scale = binomial(n, i) * cache.q_pow(s * i);
      if (u_kind && (i % 2) != 0) scale = -scale;
      QPoly num{QuadExt::from_rational(base_term(s * stretch) * scale, disc),
                QuadExt::from_rational(tail * scale, disc)};
      add_part(parts, quadratic_denominator(cache, n, r, i), std::move(num),
               disc);
    }
  }

  Rational prefactor(2);
  if (u_kind) {
    long long m = odd ? (n - 1) / 2 : n / 2;
    prefactor = prefactor * disc.pow(m);
  }
  return combine_parts(parts, disc, prefactor);
}

RationalFn gf_linear(const HoradamParams& params, SeqKind kind, long long r,
                     long long s) {
  TermCache cache(params);
  return gf_linear(cache, kind, r, s);
}

RationalFn gf_power(const HoradamParams& params, SeqKind kind, long long n,
                    long long r, long long s) {
  TermCache cache(params);
  return gf_power(cache, kind, n, r, s);
}

namespace {

// Classic ascending pretty-printer: "1 - z - z^2", "z", "-3/2*z^3".
void append_term(std::string& out, const Rational& c, long long deg,
                 std::string_view var) {
  bool negative = c.sgn() < 0;
  Rational mag = negative ? -c : c;
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (deg == 0) {
    out += mag.str();
    return;
  }
  if (!mag.is_one()) {
    out += mag.str();
    out += "*";
  }
  out += var;
  if (deg > 1) out += "^" + std::to_string(deg);
}

}  // namespace

std::string to_string(const Poly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long long d = 0; d <= p.degree(); ++d)
    if (!p.coeff(d).is_zero()) append_term(out, p.coeff(d), d, var);
  return out;
}

std::string to_string(const RationalFn& fn) {
  return "(" + to_string(fn.num) + ") / (" + to_string(fn.den) + ")";
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  return os << to_string(p);
}

std::ostream& operator<<(std::ostream& os, const RationalFn& fn) {
  return os << to_string(fn);
}

}  // namespace horadam
