#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subq/algnum/numberfield.hpp"

namespace subq {

/// The fields containing every include and no exclude. Both lists are kept
/// duplicate-free.
struct BasicOpen {
  std::vector<AlgebraicNumber> includes;
  std::vector<AlgebraicNumber> excludes;

  BasicOpen() = default;
  BasicOpen(std::vector<AlgebraicNumber> inc, std::vector<AlgebraicNumber> exc);

  friend bool operator==(const BasicOpen& a, const BasicOpen& b) {
    return a.includes == b.includes && a.excludes == b.excludes;
  }
};

struct Emptiness {
  bool empty = false;
  std::optional<std::size_t> offending;  // an exclude lying in Q(includes)
  GeneratedField witness;                // Q(includes), a member when nonempty
};

/// Empty exactly when some exclude lies in Q(includes).
Emptiness decide_emptiness(const BasicOpen& u);
bool is_empty(const BasicOpen& u);

/// Appends an include. Throws DomainError naming the exclude that would
/// become a member.
BasicOpen extend(const BasicOpen& u, const AlgebraicNumber& a);

/// Same subset of Sub(Q-bar): equal include fields and, modulo that field,
/// equivalent excludes.
bool same_open(const BasicOpen& a, const BasicOpen& b);

/// Images of u under conjugation of a primitive element of Q(includes,
/// excludes), in conjugate order, duplicates (same_open) removed.
std::vector<BasicOpen> galois_orbit(const BasicOpen& u);

/// `inc: a, b; exc: c`; either part may be empty or missing.
BasicOpen parse_open(std::string_view text);
std::string to_string(const BasicOpen& u);

/// Splits at commas outside parentheses; trims blanks.
std::vector<std::string> split_top_level(std::string_view text, char sep);

}  // namespace subq
