#include "esgames/suite.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "esgames/errors.hpp"

namespace esgames {

namespace {

using json = nlohmann::ordered_json;

const std::map<std::string, std::vector<std::string>>& axiom_lists() {
  static const std::map<std::string, std::vector<std::string>> lists{
      {"event-structure", {"order", "conflict", "heredity"}},
      {"group", {"closure", "associativity", "unit", "inverse"}},
      {"action", {"totality", "automorphism", "unit", "homomorphism"}},
      {"law", {"shape", "unit-n", "unit-p", "mult-n", "mult-p"}},
      {"game",
       {"event-structure", "groups", "actions", "negative-action", "positive-action", "law", "permutation-square"}},
      {"strategy", {"projection-map", "receptivity", "courtesy", "uniqueness"}},
      {"weak-map", {"same-game", "map", "responses", "square"}},
      {"uniform", {"strategy", "totality", "event-map", "weak-map", "unit-law", "multiplication-law"}},
      {"locality", {"locality"}},
      {"witness",
       {"map", "strategy", "L-homomorphism", "M-homomorphism", "negative-square", "positive-square", "hexagon"}},
      {"iso-family", {"well-formed", "polarity", "identities", "inverse", "composition", "restriction", "extension"}},
      {"thin-game", {"full", "pos", "neg", "inclusion", "intersection", "pos-extension", "neg-extension"}},
  };
  return lists;
}

// Axiom names in reports may carry a "part/" prefix.
std::string head(const std::string& axiom) { return axiom.substr(0, axiom.find('/')); }

std::vector<std::string> axioms_of(const std::string& check, const Report& r) {
  std::vector<std::string> out = axiom_lists().at(check);
  for (const auto& a : r.failed_axioms())
    if (std::find(out.begin(), out.end(), head(a)) == out.end() &&
        std::find(out.begin(), out.end(), a) == out.end())
      out.push_back(a);
  return out;
}

template <class F>
Report guarded(F&& f) {
  try {
    return f();
  } catch (const BoundExceeded&) {
    throw;
  } catch (const Error& e) {
    Report r;
    r.add("error", e.what());
    return r;
  }
}

Report run_check(const Document& d, const std::string& check) {
  return guarded([&]() -> Report {
    switch (d.kind) {
      case DocKind::event_structure:
        return validate_event_structure(*std::get<EventStructurePtr>(d.value));
      case DocKind::group:
        return validate_group(*std::get<GroupPtr>(d.value));
      case DocKind::action:
        return validate_action(*std::get<std::shared_ptr<const GroupAction>>(d.value));
      case DocKind::law:
        return validate_distributive_law(*std::get<std::shared_ptr<const DistributiveLaw>>(d.value));
      case DocKind::game:
        return validate_game(*std::get<GamePtr>(d.value));
      case DocKind::strategy:
        return validate_strategy(*std::get<std::shared_ptr<const Strategy>>(d.value));
      case DocKind::weak_map:
        return validate_weak_map(*std::get<std::shared_ptr<const WeakMap>>(d.value));
      case DocKind::uniform_strategy: {
        const auto& u = *std::get<std::shared_ptr<const UniformStrategy>>(d.value);
        if (check == "uniform") return validate_uniform(u);
        const Report base = validate_uniform(u);
        if (!base.ok()) {
          Report r;
          r.add("locality", "not checked: the uniform structure is invalid");
          return r;
        }
        return validate_locality(u);
      }
      case DocKind::lift_witness: {
        const auto& doc = *std::get<std::shared_ptr<const LiftDoc>>(d.value);
        const bool lift = doc.direction == LiftDirection::lift;
        if (check == "witness") return lift ? validate_lift_witness(doc.witness) : validate_colift_witness(doc.witness);
        return validate_uniform(lift ? uniform_lift(doc.witness) : uniform_colift(doc.witness));
      }
      case DocKind::family:
        return validate_iso_family(*std::get<std::shared_ptr<const IsomorphismFamily>>(d.value));
      case DocKind::thin_game:
        return validate_thin_game(*std::get<std::shared_ptr<const ThinConcurrentGame>>(d.value));
    }
    throw InternalError("unhandled document kind");
  });
}

}  // namespace

bool SuiteResult::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok(); });
}

const std::vector<std::string>& checks_for(DocKind kind) {
  static const std::vector<std::vector<std::string>> table{
      {"event-structure"}, {"group"},    {"action"},           {"law"},        {"game"},       {"strategy"},
      {"weak-map"},        {"uniform", "locality"}, {"witness", "uniform"}, {"iso-family"}, {"thin-game"}};
  return table[static_cast<std::size_t>(kind)];
}

SuiteResult run_suite(const Bundle& bundle, std::optional<DocKind> only) {
  SuiteResult out;
  for (const auto& d : bundle.documents()) {
    if (only && d.kind != *only) continue;
    const auto& checks = checks_for(d.kind);
    for (const auto& tag : d.expect_fail)
      if (std::find(checks.begin(), checks.end(), tag) == checks.end())
        throw InputError("'" + d.id + "': expect_fail names '" + tag + "', which is not a check of a " +
                         std::string(to_string(d.kind)));
    for (const auto& check : checks) {
      CheckResult c{d.id, d.kind, check, {}, run_check(d, check), false};
      c.expect_fail = std::find(d.expect_fail.begin(), d.expect_fail.end(), check) != d.expect_fail.end();
      c.axioms = axioms_of(check, c.report);
      out.checks.push_back(std::move(c));
    }
  }
  return out;
}

namespace {

bool axiom_failed(const Report& r, const std::string& axiom) {
  for (const auto& f : r.failed_axioms())
    if (f == axiom || head(f) == axiom) return true;
  return false;
}

std::string axiom_witness(const Report& r, const std::string& axiom) {
  for (const auto& v : r.violations())
    if (v.axiom == axiom || head(v.axiom) == axiom) return v.axiom == axiom ? v.message : v.axiom + ": " + v.message;
  return {};
}

}  // namespace

std::string format_text(const SuiteResult& r) {
  std::ostringstream os;
  std::size_t bad = 0;
  for (const auto& c : r.checks) {
    const char* verdict = c.passed() ? "pass" : "FAIL";
    os << (c.ok() ? "ok   " : "BAD  ") << c.document << " [" << to_string(c.kind) << "] " << c.check << ": "
       << verdict;
    if (c.expect_fail) os << " (expected to fail)";
    os << "\n";
    for (const auto& v : c.report.violations()) os << "       " << v.axiom << ": " << v.message << "\n";
    if (c.report.suppressed()) os << "       ... " << c.report.suppressed() << " more\n";
    if (!c.ok()) ++bad;
  }
  os << r.checks.size() << " checks, " << bad << " not as expected\n";
  return os.str();
}

std::string format_json(const SuiteResult& r) {
  json docs = json::array();
  for (std::size_t i = 0; i < r.checks.size();) {
    const std::string& id = r.checks[i].document;
    json checks = json::array();
    const DocKind kind = r.checks[i].kind;
    for (; i < r.checks.size() && r.checks[i].document == id; ++i) {
      const CheckResult& c = r.checks[i];
      json axioms = json::array();
      for (const auto& a : c.axioms) {
        json entry{{"name", a}, {"passed", !axiom_failed(c.report, a)}};
        if (axiom_failed(c.report, a)) entry["witness"] = axiom_witness(c.report, a);
        axioms.push_back(entry);
      }
      json violations = json::array();
      for (const auto& v : c.report.violations()) violations.push_back(json{{"axiom", v.axiom}, {"message", v.message}});
      checks.push_back(json{{"check", c.check},
                            {"expected", c.expect_fail ? "fail" : "pass"},
                            {"passed", c.passed()},
                            {"ok", c.ok()},
                            {"axioms", axioms},
                            {"violations", violations},
                            {"suppressed", c.report.suppressed()}});
    }
    docs.push_back(json{{"id", id}, {"kind", std::string(to_string(kind))}, {"checks", checks}});
  }
  json out{{"schema_version", kSchemaVersion}, {"ok", r.ok()}, {"documents", docs}};
  return out.dump(2) + "\n";
}

}  // namespace esgames
