#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include "azimuth/states.hpp"

namespace azimuth {

/// Malformed state document: unparseable JSON, wrong field shapes or
/// types, duplicate m entries, unknown kind, non-finite numbers.
class document_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class StateKind { angular, landau };

/// On-disk description of a state. JSON schema:
///
///   {
///     "kind": "angular" | "landau",
///     "coefficients": [[m, re, im], ...],
///     "normalize": true
///   }
///
/// m must be an integer (unique per entry), re/im finite numbers.
/// "normalize" is optional and defaults to true; with false the listed
/// coefficients must already have unit norm. Unknown extra keys are
/// ignored.
struct StateDocument {
  StateKind kind = StateKind::angular;
  std::vector<Coefficient> coefficients;
  bool normalize = true;
};

/// Parses and shape-checks a document; throws document_error.
StateDocument parse_state_document(const std::string& json_text);

/// Reads the file and parses it; unreadable files throw document_error.
StateDocument load_state_document(const std::filesystem::path& path);

using AnyState = std::variant<AngularState, LandauState>;

/// Builds the described state. Structurally fine documents that describe
/// invalid physics (no nonzero amplitude, landau with m < 0, claimed
/// normalized but not) throw invalid_state_error.
AnyState make_state(const StateDocument& document);

}  // namespace azimuth
