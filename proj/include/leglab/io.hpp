#pragma once

// File formats, caps from the environment, and the JSON reports the CLI
// prints.

#include <optional>
#include <string>

#include "json.hpp"
#include "leglab/dga.hpp"
#include "leglab/front.hpp"
#include "leglab/lagrangian.hpp"

namespace leglab {

using Json = nlohmann::ordered_json;

enum class InputKind { Dga, Lagrangian, Front };

/// By the first meaningful line: '{' for DGA JSON, "lagrangian", "front".
InputKind sniff_kind(const std::string& text);
std::string kind_name(InputKind k);

/// DGA JSON: {"modulus", "generators": [{"name","degree"}], "diffs": {name: [[names...]]}}.
DGA parse_dga(const std::string& text);
std::string serialize_dga(const DGA& d);
Json dga_to_json(const DGA& d);

std::string read_file(const std::string& path);

struct Caps {
  int max_degree_zero = kDefaultMaxDegreeZero;  // augmentation scan: 2^z subsets
  int max_crossings = kDefaultMaxCrossings;     // census: 2^n switch sets
  std::optional<int> max_corners;               // disk walks; default 2 + n
  bool force = false;                           // run past caps, report a warning

  /// LEGLAB_MAX_SUBSETS (a subset count, e.g. 16777216) and LEGLAB_MAX_CORNERS.
  static Caps from_environment();
};

/// Thrown by the report builders for a validation failure that still has a
/// structured report attached (exit code 2).
struct ReportedFailure {
  Json report;
};

/// Full invariant report for one input.  Throws ParseError, ValidationError,
/// CapExceeded or ReportedFailure.
Json invariant_report(const std::string& text, const std::string& input_id, const Caps& caps);

struct ReportOutcome {
  int exit_code;  // 0 ok, 1 parse error, 2 validation failure, 3 cap exceeded
  Json report;
};

/// invariant_report with every failure mapped to an exit code and a JSON body.
ReportOutcome run_invariants(const std::string& text, const std::string& input_id, const Caps& caps);

/// "0", "1 + a7 + a7 a6 a5": sums of space-separated generator words.
Polynomial parse_polynomial(const DGA& d, const std::string& text);

/// Each corpus sidecar NAME.expected.json names an input file, the expected
/// exit code and a subset of the report that must match exactly.
struct CorpusCheck {
  std::string name;
  bool ok;
  std::string detail;
};
std::vector<CorpusCheck> verify_corpus(const std::string& dir, const Caps& caps);

/// {"verdict": "distinguished" | "not_distinguished", "witness": ..., "a": ..., "b": ...}
Json compare_reports(const Json& a, const Json& b);

}  // namespace leglab
