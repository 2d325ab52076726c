#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace subq {

/// Exponent vector (c, d1, ..., dm) of a monomial X^c Y1^d1 ... Ym^dm.
using MultiDegree = std::vector<int>;

/// Right-to-left comparison: the last coordinate is the most significant.
/// Vectors of different length are padded with zeros on the right.
std::strong_ordering compare_multidegree(const MultiDegree& a, const MultiDegree& b);

struct MultiDegreeLess {
  bool operator()(const MultiDegree& a, const MultiDegree& b) const {
    return compare_multidegree(a, b) < 0;
  }
};

struct MultiDegreeGreater {
  bool operator()(const MultiDegree& a, const MultiDegree& b) const {
    return compare_multidegree(a, b) > 0;
  }
};

/// `(1, 5)`.
std::string to_string(const MultiDegree& d);

/// Finite multiset kept as a non-increasing sequence under `Compare`,
/// a three-way comparator returning std::strong_ordering.
template <class T, class Compare>
class OrderedMultiset {
 public:
  OrderedMultiset() = default;
  explicit OrderedMultiset(std::vector<T> items, Compare cmp = Compare{})
      : items_(std::move(items)), cmp_(cmp) {
    std::stable_sort(items_.begin(), items_.end(),
                     [this](const T& a, const T& b) { return cmp_(a, b) > 0; });
  }

  void insert(T item) {
    auto pos = std::upper_bound(items_.begin(), items_.end(), item,
                                [this](const T& a, const T& b) { return cmp_(a, b) > 0; });
    items_.insert(pos, std::move(item));
  }

  const std::vector<T>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const Compare& comparator() const noexcept { return cmp_; }

 private:
  std::vector<T> items_;
  Compare cmp_{};
};

/// Lexicographic comparison of the descending sequences; a proper initial
/// segment is smaller.
template <class T, class Compare>
std::strong_ordering compare_multiset(const OrderedMultiset<T, Compare>& a,
                                      const OrderedMultiset<T, Compare>& b) {
  const auto& x = a.items();
  const auto& y = b.items();
  const auto& cmp = a.comparator();
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = cmp(x[i], y[i]);
    if (c != 0) return c;
  }
  return x.size() <=> y.size();
}

struct MultiDegreeCompare {
  std::strong_ordering operator()(const MultiDegree& a, const MultiDegree& b) const {
    return compare_multidegree(a, b);
  }
};

using MultiDegreeMultiset = OrderedMultiset<MultiDegree, MultiDegreeCompare>;

/// `[(1), (0, 2)]` in stored (descending) order.
std::string to_string(const MultiDegreeMultiset& s);

}  // namespace subq
