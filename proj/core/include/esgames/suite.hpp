#pragma once

#include <optional>
#include <string>
#include <vector>

#include "esgames/io.hpp"

namespace esgames {

/// One named validator run on one document.
struct CheckResult {
  std::string document;
  DocKind kind;
  std::string check;
  /// Axioms the check covers, in a fixed order. Failed axioms that are not
  /// listed here are appended.
  std::vector<std::string> axioms;
  Report report;
  bool expect_fail = false;

  bool passed() const { return report.ok(); }
  /// Verdict against the expectation.
  bool ok() const { return passed() != expect_fail; }
};

struct SuiteResult {
  std::vector<CheckResult> checks;

  bool ok() const;
};

/// Check names run for a kind:
///   event-structure  "event-structure"
///   group            "group"
///   action           "action"
///   law              "law"
///   game             "game"
///   strategy         "strategy"
///   weak-map         "weak-map"
///   uniform-strategy "uniform", "locality"
///   lift-witness     "witness", "uniform"
///   family           "iso-family"
///   thin-game        "thin-game"
const std::vector<std::string>& checks_for(DocKind kind);

/// Runs every check of every document (of `only`, if given). A document's
/// expect_fail tags must name checks of its kind, else InputError.
/// BoundExceeded propagates; other library errors inside a check are
/// recorded as the violation "error".
SuiteResult run_suite(const Bundle& bundle, std::optional<DocKind> only = std::nullopt);

std::string format_text(const SuiteResult& r);
/// The versioned JSON report; see data/report.schema.json.
std::string format_json(const SuiteResult& r);

}  // namespace esgames
