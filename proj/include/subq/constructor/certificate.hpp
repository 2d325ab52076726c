#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "subq/formulas/rankable.hpp"
#include "subq/topology/topology.hpp"

namespace subq {

/// A computable set of rationals. Only the integers are built in.
struct ZPredicate {
  std::string name;
  std::function<bool(const Rational&)> contains;
  std::optional<std::size_t> default_budget;

  static ZPredicate integers();
  /// Built-in predicates by name; throws DomainError for unknown names.
  static ZPredicate by_name(const std::string& name);
};

/// Where the witness x must lie.
enum class Side { InZ, NotInZ };

enum class StageKind { AvoidZ, AvoidComplement, DecideElement };

std::string to_string(StageKind k);  // avoid-Z, avoid-complement, decide-element
StageKind stage_kind_from_string(const std::string& s);
/// AvoidZ needs x outside Z, AvoidComplement needs x in Z.
Side side_of(StageKind k);

/// One stage record. Stage 0 marks a standalone search result.
struct Certificate {
  std::size_t stage = 0;
  StageKind kind = StageKind::AvoidZ;
  BasicOpen context;  // before the stage

  // avoid stages
  std::size_t formula_index = 0;  // 0 when the formula is not from the listing
  BasicRankable formula;
  bool vacuous = false;  // no field of the context contains the parameters
  Rational x;
  std::vector<Rational> ys;  // Y1 .. Y(m-1)
  AlgebraicNumber y;         // value of Ym

  // decide stages
  std::size_t element_index = 0;
  AlgebraicNumber element;
  bool included = false;
};

/// The context after the stage.
BasicOpen next_context(const Certificate& c);

struct Verdict {
  bool pass = true;
  std::string reason;
};

/// Re-derives every claim of the record from its own fields.
Verdict verify_certificate(const Certificate& c, const ZPredicate& z);

}  // namespace subq
