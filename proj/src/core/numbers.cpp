#include "subq/core/numbers.hpp"

#include <cctype>

namespace subq {

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
    skip();
  }
  auto digits = [&](Integer& out) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw ParseError("expected digits", i);
    out = Integer(std::string(text.substr(start, i - start)));
  };
  Integer num;
  Integer den = 1;
  digits(num);
  skip();
  if (i < text.size() && text[i] == '/') {
    ++i;
    skip();
    digits(den);
    if (den == 0) throw ParseError("zero denominator", i);
    skip();
  }
  if (i != text.size()) throw ParseError("trailing characters in rational", i);
  if (negative) num = -num;
  return make_rational(num, den);
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational round_down_dyadic(const Rational& q, unsigned bits) {
  Integer scale = 1;
  scale <<= bits;
  Rational scaled = q * scale;
  return make_rational(floor(scaled), scale);
}

Rational round_up_dyadic(const Rational& q, unsigned bits) {
  Integer scale = 1;
  scale <<= bits;
  Rational scaled = q * scale;
  return make_rational(ceil(scaled), scale);
}

}  // namespace subq
