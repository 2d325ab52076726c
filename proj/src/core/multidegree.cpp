#include "subq/core/multidegree.hpp"

namespace subq {

std::strong_ordering compare_multidegree(const MultiDegree& a, const MultiDegree& b) {
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t k = n; k-- > 0;) {
    int x = k < a.size() ? a[k] : 0;
    int y = k < b.size() ? b[k] : 0;
    if (x != y) return x <=> y;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const MultiDegree& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(d[i]);
  }
  return out + ")";
}

std::string to_string(const MultiDegreeMultiset& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.items().size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.items()[i]);
  }
  return out + "]";
}

}  // namespace subq
