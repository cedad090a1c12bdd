#pragma once

#include <optional>
#include <string>
#include <vector>

#include "esgames/dot.hpp"
#include "esgames/suite.hpp"

namespace esgames::workbench {

enum Exit : int { pass = 0, failure = 1, input_error = 2, bound_exceeded = 3 };

/// What a command produced. `out` goes to stdout, `err` to stderr.
struct Outcome {
  int code = pass;
  std::string out;
  std::string err;
};

enum class ReportFormat { text, json };

Outcome validate(const std::vector<std::string>& paths, std::optional<DocKind> kind, ReportFormat format);

struct BuildArgs {
  std::string construction;
  std::string input;
  /// Documents to build from; empty means the last suitable document.
  std::vector<std::string> refs;
  std::size_t copies = 2;
  std::string id = "result";
};

/// Constructions: dual, par, bang, copycat, uniform-copycat, lift, colift,
/// tcg. On success `out` holds the bundle text.
Outcome build(const BuildArgs& args);

struct SearchArgs {
  std::string input;
  std::string ref;
  std::optional<std::uint64_t> bound;
};

/// On success `out` holds a uniform-strategy bundle, or the certificate
/// when the search found nothing. `certificate` is always filled.
struct SearchOutcome : Outcome {
  std::string certificate;
  bool found = false;
};
SearchOutcome search_uniform(const SearchArgs& args);

Outcome export_dot(const std::string& input, const std::string& ref, DotView view);

/// Writes one <name>.json per catalog entry into dir.
Outcome write_catalog(const std::string& dir);

}  // namespace esgames::workbench
