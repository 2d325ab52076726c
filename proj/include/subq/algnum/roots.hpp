#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "subq/algnum/interval.hpp"
#include "subq/core/upoly.hpp"

namespace subq {

/// Ascending isolating intervals for the real roots of a squarefree
/// polynomial. Each is a point (exact root) or has non-root endpoints and
/// exactly one root inside.
std::vector<Interval> isolate_real_roots(const QPoly& squarefree);

/// Shrinks an isolating interval from isolate_real_roots to width <= w.
void refine_real_root(const QPoly& squarefree, Interval& iv, const Rational& w);

/// Roots of a squarefree polynomial in a closed region. Proper rectangles
/// with a root on the boundary give nullopt. Segments and points are counted
/// exactly.
std::optional<int> count_roots_in_region(const QPoly& squarefree, const ComplexBox& region);

/// Winding count of a squarefree polynomial around a proper rectangle whose
/// boundary is root-free.
int winding_count(const QPoly& p, const ComplexBox& box);

/// All complex roots of a squarefree integer polynomial, in canonical order:
/// ascending real part, then ascending imaginary part.
class RootSet {
 public:
  /// Shared, cached instance per polynomial.
  static std::shared_ptr<const RootSet> of(const ZPoly& squarefree);
  explicit RootSet(ZPoly squarefree);

  const ZPoly& polynomial() const noexcept { return poly_; }
  const QPoly& qpoly() const noexcept { return q_; }
  std::size_t size() const noexcept { return roots_.size(); }
  bool is_real(std::size_t i) const { return roots_[i].real; }
  /// Index of the complex conjugate (itself for real roots).
  std::size_t conjugate(std::size_t i) const { return roots_[i].conj; }
  /// Box fixed at isolation time; printed in literals.
  const ComplexBox& initial_box(std::size_t i) const { return roots_[i].initial; }
  /// Isolating box of width at most `max_width`.
  ComplexBox box(std::size_t i, const Rational& max_width) const;
  /// Exact value for rational roots.
  std::optional<Rational> exact(std::size_t i) const;

 private:
  struct Root {
    bool real = false;
    bool upper = false;
    std::size_t conj = 0;
    ComplexBox initial;
    ComplexBox current;
  };

  void refine_locked(std::size_t i, const Rational& max_width) const;
  bool less_locked(std::size_t i, std::size_t j) const;
  std::size_t real_part_index_locked(std::size_t i) const;

  ZPoly poly_;
  QPoly q_;
  mutable std::vector<Root> roots_;
  mutable std::optional<QPoly> real_part_poly_;
  mutable std::vector<Interval> real_part_roots_;
  mutable std::mutex mu_;
};

}  // namespace subq
