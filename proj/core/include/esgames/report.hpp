#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace esgames {

struct Violation {
  std::string axiom;
  std::string message;
};

/// Diagnostics returned by every validator. Empty means all axioms hold.
///
/// Each axiom keeps at most kWitnessesPerAxiom messages; further violations
/// of the same axiom are only counted.
class Report {
 public:
  static constexpr std::size_t kWitnessesPerAxiom = 8;

  void add(std::string axiom, std::string message);
  /// Appends another report, optionally prefixing its axiom names.
  void merge(const Report& other, std::string_view prefix = {});

  bool ok() const { return violations_.empty() && suppressed_ == 0; }
  bool failed(std::string_view axiom) const;
  /// First recorded message for the axiom, or empty.
  std::string witness(std::string_view axiom) const;
  std::vector<std::string> failed_axioms() const;

  const std::vector<Violation>& violations() const { return violations_; }
  std::size_t suppressed() const { return suppressed_; }
  std::string str() const;

 private:
  std::vector<Violation> violations_;
  std::size_t suppressed_ = 0;
  std::vector<std::string> suppressed_axioms_;
};

}  // namespace esgames
