#pragma once

#include <deque>
#include <optional>
#include <unordered_map>
#include <utility>

#include "horadam/quadext.hpp"
#include "horadam/rational.hpp"

namespace horadam {

// Which sequence of the family w_n = p*w_{n-1} - q*w_{n-2} is meant:
//   U: first-kind Lucas sequence, initial values (0, 1);
//   V: second-kind Lucas sequence, initial values (2, p);
//   W: the general sequence with the caller's (a, b).
enum class SeqKind { U, V, W };

const char* to_string(SeqKind kind);

// One sequence family: initial values (a, b), recurrence coefficients
// (p, q), and the derived discriminant D = p^2 - 4q. Construct through
// make_params, which enforces p != 0, q != 0 and D != 0.
struct HoradamParams {
  Rational a, b, p, q, disc;
};

HoradamParams make_params(const Rational& a, const Rational& b,
                          const Rational& p, const Rational& q);

// Initial values (w_0, w_1) after kind dispatch: U and V override (a, b).
std::pair<Rational, Rational> initial_values(const HoradamParams& params,
                                             SeqKind kind);

// Characteristic roots alpha = p/2 + (1/2)sqrt(D), beta = p/2 - (1/2)sqrt(D).
std::pair<QuadExt, QuadExt> roots(const HoradamParams& params);

// Constants of the closed form w_n = A*alpha^n + B*beta^n.
struct BinetCoeffs {
  QuadExt A, B;
};

BinetCoeffs binet_coeffs(const HoradamParams& params);
BinetCoeffs binet_coeffs(const HoradamParams& params, SeqKind kind);

// Exact term at any integer index by forward or backward recurrence,
// O(|n|) rational operations.
Rational term_by_recurrence(const HoradamParams& params, SeqKind kind,
                            long long n);

// The same term through the closed form; must agree with the recurrence
// for every valid parameter set.
Rational term_by_binet(const HoradamParams& params, SeqKind kind, long long n);

// Memoized terms and scalar powers around one parameter set. Lookups are
// amortized O(1); ranges grow lazily in both directions. Storage is deque so
// returned references stay valid while the cache grows; a cache can be
// shared across many sum evaluations but not across threads.
class TermCache {
 public:
  explicit TermCache(HoradamParams params);

  const HoradamParams& params() const { return params_; }

  const Rational& u(long long m) { return at(u_, m); }
  const Rational& v(long long m) { return at(v_, m); }
  const Rational& w(long long m) { return at(w_, m); }
  const Rational& term(SeqKind kind, long long m);

  const Rational& q_pow(long long e);

  const QuadExt& alpha();
  const QuadExt& beta();
  const BinetCoeffs& binet();

  // alpha^e in O(1) via the expansion alpha^e = u_e*alpha - q*u_{e-1},
  // memoized per exponent; beta^e is its conjugate.
  const QuadExt& alpha_pow(long long e);
  QuadExt beta_pow(long long e) { return alpha_pow(e).conj(); }

 private:
  struct Track {
    std::deque<Rational> fwd;  // fwd[i] = t_i
    std::deque<Rational> bwd;  // bwd[i] = t_{-1-i}
  };

  const Rational& at(Track& track, long long m);

  HoradamParams params_;
  Track u_, v_, w_;
  std::deque<Rational> qpow_fwd_, qpow_bwd_;
  std::unordered_map<long long, QuadExt> alpha_pow_memo_;
  std::optional<std::pair<QuadExt, QuadExt>> roots_;
  std::optional<BinetCoeffs> binet_;
};

}  // namespace horadam
