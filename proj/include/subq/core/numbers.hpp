#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace subq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for input that does not conform to a documented grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised when an operation's mathematical precondition fails.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Height |p| + q of a reduced fraction p/q.
inline Integer rational_height(const Rational& q) {
  return Integer(abs(q.get_num())) + q.get_den();
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// `3`, `-7/2`.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses `p` or `p/q` with an optional sign. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Floor and ceiling of a rational.
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Rounds `q` down (resp. up) to a dyadic rational with denominator 2^bits.
Rational round_down_dyadic(const Rational& q, unsigned bits);
Rational round_up_dyadic(const Rational& q, unsigned bits);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

}  // namespace subq
