#include "subq/algnum/interval.hpp"

#include <algorithm>

namespace subq {

Interval operator*(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator*(const Rational& s, const Interval& a) {
  if (s >= 0) return {s * a.lo, s * a.hi};
  return {s * a.hi, s * a.lo};
}

std::string ComplexBox::to_string() const {
  return re.lo.get_str() + ", " + re.hi.get_str() + ", " + im.lo.get_str() + ", " + im.hi.get_str();
}

ComplexBox evaluate(const QPoly& p, const ComplexBox& z, unsigned bits) {
  ComplexBox acc = ComplexBox::point(0);
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    acc = acc * z + ComplexBox::point(p.coeffs()[k]);
    acc = acc.rounded(bits);
  }
  return acc;
}

}  // namespace subq
