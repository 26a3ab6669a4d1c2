#include "horadam/quadext.hpp"

#include <cctype>
#include <ostream>

namespace horadam {

namespace {

void skip_spaces(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && text[pos] == ' ') ++pos;
}

Rational parse_rational_at(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  while (pos < text.size() &&
         (std::isdigit(static_cast<unsigned char>(text[pos])) ||
          text[pos] == '/'))
    ++pos;
  if (pos == start) throw ParseError("expected rational", start);
  try {
    return Rational::parse(text.substr(start, pos - start));
  } catch (const ParseError& e) {
    throw ParseError("invalid rational", start + e.position());
  }
}

void expect(std::string_view text, std::size_t& pos, std::string_view token) {
  if (text.substr(pos, token.size()) != token)
    throw ParseError("expected '" + std::string(token) + "'", pos);
  pos += token.size();
}

}  // namespace

QuadExt QuadExt::parse(std::string_view text) {
  std::size_t pos = 0;
  skip_spaces(text, pos);
  Rational c0 = parse_rational_at(text, pos);
  skip_spaces(text, pos);
  expect(text, pos, "+");
  skip_spaces(text, pos);
  Rational c1 = parse_rational_at(text, pos);
  expect(text, pos, "*sqrt(");
  Rational disc = parse_rational_at(text, pos);
  expect(text, pos, ")");
  skip_spaces(text, pos);
  if (pos != text.size())
    throw ParseError("unexpected trailing characters", pos);
  return QuadExt(std::move(c0), std::move(c1), std::move(disc));
}

QuadExt QuadExt::pow(long long e) const {
  if (e == 0) return one(disc_);
  QuadExt base = e < 0 ? inv() : *this;
  unsigned long long ue = static_cast<unsigned long long>(e < 0 ? -e : e);
  QuadExt acc = one(disc_);
  while (ue > 0) {
    if (ue & 1) acc *= base;
    ue >>= 1;
    if (ue) base *= base;
  }
  return acc;
}

std::string QuadExt::str() const {
  return c0_.str() + " + " + c1_.str() + "*sqrt(" + disc_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
  return os << x.str();
}

}  // namespace horadam
