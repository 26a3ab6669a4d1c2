#include "horadam/rational.hpp"

#include <cctype>
#include <ostream>

namespace horadam {

namespace {

// Parses "sign? digits (/ digits)?" starting at pos; advances pos past the
// consumed characters.
Rational parse_prefix(std::string_view text, std::size_t& pos) {
  auto digits = [&](const char* what) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) throw ParseError(std::string("expected ") + what, start);
    return std::string(text.substr(start, pos - start));
  };

  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  mpz_class num(digits("digits"), 10);
  if (negative) num = -num;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::size_t den_pos = pos;
    mpz_class den(digits("denominator digits"), 10);
    if (den == 0) throw ParseError("denominator must be nonzero", den_pos);
    return Rational(num, den);
  }
  return Rational(num, mpz_class(1));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  Rational r = parse_prefix(text, pos);
  if (pos != text.size())
    throw ParseError("unexpected trailing characters", pos);
  return r;
}

Rational Rational::pow(long long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw DomainError("zero has no negative powers");
    return Rational(0);
  }
  Rational base = e < 0 ? inv() : *this;
  unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.v_.get_num_mpz_t(), ue);
  mpz_pow_ui(den.get_mpz_t(), base.v_.get_den_mpz_t(), ue);
  // base is canonical, so the powers are coprime with positive denominator.
  mpq_class r;
  r.get_num() = num;
  r.get_den() = den;
  return Rational(r);
}

std::string Rational::str() const {
  std::string s = v_.get_num().get_str();
  if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational binomial(long long n, long long i) {
  if (n < 0 || i < 0 || i > n)
    throw DomainError("binomial requires 0 <= i <= n");
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(i));
  return Rational(b);
}

}  // namespace horadam
