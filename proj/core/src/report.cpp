#include "esgames/report.hpp"

#include <algorithm>
#include <sstream>

namespace esgames {

void Report::add(std::string axiom, std::string message) {
  const auto recorded = std::count_if(violations_.begin(), violations_.end(),
                                      [&](const Violation& v) { return v.axiom == axiom; });
  if (static_cast<std::size_t>(recorded) >= kWitnessesPerAxiom) {
    ++suppressed_;
    return;
  }
  violations_.push_back({std::move(axiom), std::move(message)});
}

void Report::merge(const Report& other, std::string_view prefix) {
  for (const auto& v : other.violations_) add(std::string(prefix) + v.axiom, v.message);
  suppressed_ += other.suppressed_;
}

bool Report::failed(std::string_view axiom) const {
  return std::any_of(violations_.begin(), violations_.end(),
                     [&](const Violation& v) { return v.axiom == axiom; });
}

std::string Report::witness(std::string_view axiom) const {
  for (const auto& v : violations_)
    if (v.axiom == axiom) return v.message;
  return {};
}

std::vector<std::string> Report::failed_axioms() const {
  std::vector<std::string> out;
  for (const auto& v : violations_)
    if (std::find(out.begin(), out.end(), v.axiom) == out.end()) out.push_back(v.axiom);
  return out;
}

std::string Report::str() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (const auto& v : violations_) os << v.axiom << ": " << v.message << '\n';
  if (suppressed_ > 0) os << "(" << suppressed_ << " further violations not shown)\n";
  return os.str();
}

}  // namespace esgames
