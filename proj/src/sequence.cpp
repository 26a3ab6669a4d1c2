#include "horadam/sequence.hpp"

#include <utility>

namespace horadam {

const char* to_string(SeqKind kind) {
  switch (kind) {
    case SeqKind::U: return "u";
    case SeqKind::V: return "v";
    case SeqKind::W: return "w";
  }
  return "?";
}

HoradamParams make_params(const Rational& a, const Rational& b,
                          const Rational& p, const Rational& q) {
  if (p.is_zero()) throw InvalidParam("p must be nonzero");
  if (q.is_zero()) throw InvalidParam("q must be nonzero");
  Rational disc = p * p - Rational(4) * q;
  if (disc.is_zero())
    throw DegenerateDiscriminant("p^2 - 4q = 0: coincident roots");
  return HoradamParams{a, b, p, q, disc};
}

std::pair<Rational, Rational> initial_values(const HoradamParams& params,
                                             SeqKind kind) {
  switch (kind) {
    case SeqKind::U: return {Rational(0), Rational(1)};
    case SeqKind::V: return {Rational(2), params.p};
    case SeqKind::W: break;
  }
  return {params.a, params.b};
}

std::pair<QuadExt, QuadExt> roots(const HoradamParams& params) {
  Rational half(1, 2);
  Rational p_half = params.p * half;
  return {QuadExt(p_half, half, params.disc),
          QuadExt(p_half, -half, params.disc)};
}

BinetCoeffs binet_coeffs(const HoradamParams& params, SeqKind kind) {
  auto [alpha, beta] = roots(params);
  auto [a, b] = initial_values(params, kind);
  QuadExt b_elem = QuadExt::from_rational(b, params.disc);
  QuadExt root_diff = QuadExt::sqrt_disc(params.disc);  // alpha - beta
  QuadExt A = (b_elem - beta * a) / root_diff;
  QuadExt B = (alpha * a - b_elem) / root_diff;
  return BinetCoeffs{A, B};
}

BinetCoeffs binet_coeffs(const HoradamParams& params) {
  return binet_coeffs(params, SeqKind::W);
}

Rational term_by_recurrence(const HoradamParams& params, SeqKind kind,
                            long long n) {
  auto [t0, t1] = initial_values(params, kind);
  if (n == 0) return t0;
  if (n == 1) return t1;
  if (n > 1) {
    for (long long i = 2; i <= n; ++i) {
      Rational next = params.p * t1 - params.q * t0;
      t0 = std::move(t1);
      t1 = std::move(next);
    }
    return t1;
  }
  // Backward: w_{m-2} = (p*w_{m-1} - w_m) / q.
  for (long long i = -1; i >= n; --i) {
    Rational prev = (params.p * t0 - t1) / params.q;
    t1 = std::move(t0);
    t0 = std::move(prev);
  }
  return t0;
}

Rational term_by_binet(const HoradamParams& params, SeqKind kind, long long n) {
  auto [alpha, beta] = roots(params);
  BinetCoeffs coeffs = binet_coeffs(params, kind);
  return (coeffs.A * alpha.pow(n) + coeffs.B * beta.pow(n)).to_rational();
}

TermCache::TermCache(HoradamParams params) : params_(std::move(params)) {
  auto seed = [&](Track& track, SeqKind kind) {
    auto [t0, t1] = initial_values(params_, kind);
    track.fwd = {std::move(t0), std::move(t1)};
  };
  seed(u_, SeqKind::U);
  seed(v_, SeqKind::V);
  seed(w_, SeqKind::W);
  qpow_fwd_ = {Rational(1)};
}

const Rational& TermCache::at(Track& track, long long m) {
  if (m >= 0) {
    std::size_t idx = static_cast<std::size_t>(m);
    while (track.fwd.size() <= idx) {
      std::size_t sz = track.fwd.size();
      track.fwd.push_back(params_.p * track.fwd[sz - 1] -
                          params_.q * track.fwd[sz - 2]);
    }
    return track.fwd[idx];
  }
  std::size_t idx = static_cast<std::size_t>(-m - 1);
  while (track.bwd.size() <= idx) {
    std::size_t j = track.bwd.size();  // computing t_{-(j+1)}
    const Rational& next = j == 0 ? track.fwd[0] : track.bwd[j - 1];
    const Rational& next2 =
        j == 0 ? track.fwd[1] : (j == 1 ? track.fwd[0] : track.bwd[j - 2]);
    track.bwd.push_back((params_.p * next - next2) / params_.q);
  }
  return track.bwd[idx];
}

const Rational& TermCache::term(SeqKind kind, long long m) {
  switch (kind) {
    case SeqKind::U: return u(m);
    case SeqKind::V: return v(m);
    case SeqKind::W: break;
  }
  return w(m);
}

const Rational& TermCache::q_pow(long long e) {
  if (e >= 0) {
    std::size_t idx = static_cast<std::size_t>(e);
    while (qpow_fwd_.size() <= idx)
      qpow_fwd_.push_back(qpow_fwd_.back() * params_.q);
    return qpow_fwd_[idx];
  }
  std::size_t idx = static_cast<std::size_t>(-e - 1);
  while (qpow_bwd_.size() <= idx) {
    const Rational& prev = qpow_bwd_.empty() ? qpow_fwd_[0] : qpow_bwd_.back();
    qpow_bwd_.push_back(prev / params_.q);
  }
  return qpow_bwd_[idx];
}

const QuadExt& TermCache::alpha() {
  if (!roots_) roots_ = roots(params_);
  return roots_->first;
}

const QuadExt& TermCache::beta() {
  if (!roots_) roots_ = roots(params_);
  return roots_->second;
}

const BinetCoeffs& TermCache::binet() {
  if (!binet_) binet_ = binet_coeffs(params_);
  return *binet_;
}

const QuadExt& TermCache::alpha_pow(long long e) {
  auto it = alpha_pow_memo_.find(e);
  if (it != alpha_pow_memo_.end()) return it->second;
  // alpha^e = u_e * alpha - q * u_{e-1}, valid for every integer e.
  Rational half(1, 2);
  const Rational& ue = u(e);
  Rational c0 = params_.p * ue * half - params_.q * u(e - 1);
  return alpha_pow_memo_
      .emplace(e, QuadExt(std::move(c0), ue * half, params_.disc))
      .first->second;
}

}  // namespace horadam
