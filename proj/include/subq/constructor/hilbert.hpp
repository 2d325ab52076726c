#pragma once

#include <optional>

#include "subq/constructor/certificate.hpp"

namespace subq {

class BudgetExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

struct SearchOptions {
  std::optional<std::size_t> budget;  // candidate tuples; unset uses the predicate default
  bool parallel = true;
  std::size_t batch = 0;  // candidates tested together in parallel mode; 0 means twice the thread count
};

/// Polynomial in Ym obtained by substituting x and the rational witnesses.
KPoly specialize(const MultiPoly& f, const Rational& x, const std::vector<Rational>& ys);

/// Q(context includes, context excludes, parameters of the formula), with the
/// formula's polynomials moved into it.
struct SearchField {
  NumberFieldPtr field;
  MultiPoly equation;
  MultiPoly inequation;
};
SearchField search_field(const BasicRankable& beta, const BasicOpen& context);

/// True when no field of the context contains the formula's parameters.
bool parameters_excluded(const BasicRankable& beta, const BasicOpen& context);

struct HilbertResult {
  Certificate certificate;
  std::size_t candidates = 0;  // tuples examined, including the winner
};

/// Searches x on the requested side and rational Y1..Y(m-1), in the fixed
/// candidate order, for which f(x, y..., Ym) keeps its degree in Ym, is
/// irreducible over Q(context, parameters), is coprime to the specialized
/// inequation, and whose canonical root keeps the context nonempty. The
/// parallel and serial modes return the same (first) candidate.
HilbertResult hilbert_specialize(const BasicRankable& beta, const BasicOpen& context, const ZPredicate& z, Side side,
                                 const SearchOptions& options = {});

/// The candidate tuples (x, y1, ..., y(m-1)) in search order: by total height,
/// then by the heights left to right, then by the rational listing.
class CandidateStream {
 public:
  explicit CandidateStream(std::size_t length);
  std::vector<Rational> next();

 private:
  void refill();
  std::size_t length_;
  unsigned total_;
  std::vector<std::vector<Rational>> pending_;
  std::size_t pos_ = 0;
};

}  // namespace subq
