#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "subq/constructor/construction.hpp"

namespace subq {

/// Canonical-order conventions shared by every transcript.
const std::string& conventions_text();
/// FNV-1a 64 of conventions_text(), as 16 hex digits.
std::string conventions_fingerprint();

struct Transcript {
  std::string conventions = conventions_fingerprint();
  std::string predicate = "integers";
  std::optional<BasicOpen> initial;  // set for construction runs
  std::vector<Certificate> records;
};

Transcript transcript_of(const ConstructionState& state);

/// Line format:
///   # subq transcript v1
///   conventions <hex>
///   predicate <name>
///   init <U-spec>            (construction runs only)
///   stage <s> ... end        (one block per record)
std::string write_text(const Transcript& t);
Transcript read_text(std::string_view text);

/// JSON rendering with the same fields in the same order.
std::string write_json(const Transcript& t);
Transcript read_json(std::string_view text);

/// Reads either rendering.
Transcript read_transcript(std::string_view text);

/// Checks every record and, for construction runs, that records are numbered
/// 1, 2, ... and that each context follows from the previous stage.
Verdict verify_transcript(const Transcript& t);

}  // namespace subq
