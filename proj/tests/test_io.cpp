#include <gtest/gtest.h>

#include <algorithm>

#include "esgames/dot.hpp"
#include "esgames/errors.hpp"
#include "esgames/fixtures.hpp"
#include "esgames/suite.hpp"

using namespace esgames;

namespace {

std::vector<std::pair<std::string, bool>> verdicts(const SuiteResult& r) {
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& c : r.checks) out.emplace_back(c.document + "/" + c.check, c.passed());
  return out;
}

const char* kTinyEs = R"({"schema_version": 1, "documents": [
  {"id": "es", "kind": "event-structure", "body": {
    "events": [{"id": "a", "polarity": "-"}, {"id": "b", "polarity": "+"}],
    "covers": [["a", "b"]], "conflict": []}}]})";

std::string error_of(const std::string& text) {
  try {
    parse_bundle(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Io, CatalogRoundTrip) {
  for (const auto& [name, bundle] : fixture_catalog()) {
    const std::string text = dump_bundle(bundle);
    const Bundle again = parse_bundle(text);
    EXPECT_EQ(dump_bundle(again), text) << name;
    EXPECT_EQ(verdicts(run_suite(again)), verdicts(run_suite(bundle))) << name;
  }
}

TEST(Io, CatalogVerdictsAsExpected) {
  for (const auto& [name, bundle] : fixture_catalog()) {
    const SuiteResult r = run_suite(bundle);
    EXPECT_TRUE(r.ok()) << name << "\n" << format_text(r);
  }
}

TEST(Io, ParsesMinimalBundle) {
  const Bundle b = parse_bundle(kTinyEs);
  const auto es = b.get<EventStructure>("es");
  ASSERT_EQ(es->size(), 2u);
  EXPECT_TRUE(es->below(0, 1));
}

TEST(Io, MalformedJson) {
  EXPECT_THROW(parse_bundle("{\"documents\": ["), InputError);
  EXPECT_THROW(parse_bundle("[]"), InputError);
}

TEST(Io, UnknownKind) {
  EXPECT_NE(error_of(R"({"documents": [{"id": "x", "kind": "monad", "body": {}}]})").find("unknown kind"),
            std::string::npos);
}

TEST(Io, UnresolvedReference) {
  const std::string text = R"({"documents": [
    {"id": "s", "kind": "strategy", "refs": {"game": "g", "internal": "g"}, "body": {}}]})";
  EXPECT_NE(error_of(text).find("unresolved reference 'g'"), std::string::npos) << error_of(text);
}

TEST(Io, CyclicReference) {
  const std::string text = R"({"documents": [
    {"id": "a", "kind": "action", "refs": {"group": "b", "target": "b"}, "body": {}},
    {"id": "b", "kind": "action", "refs": {"group": "a", "target": "a"}, "body": {}}]})";
  EXPECT_NE(error_of(text).find("cyclic reference"), std::string::npos) << error_of(text);
}

TEST(Io, UnknownEvent) {
  std::string text = kTinyEs;
  text.replace(text.find(R"(["a", "b"])"), 10, R"(["a", "z"])");
  EXPECT_NE(error_of(text).find("unknown event"), std::string::npos) << error_of(text);
}

TEST(Io, UnsupportedSchemaVersion) {
  std::string text = kTinyEs;
  text.replace(text.find("1,"), 1, "7");
  EXPECT_NE(error_of(text).find("schema_version"), std::string::npos);
}

TEST(Io, AddDeduplicates) {
  Bundle b;
  const std::string first = b.add("g", pairs_game());
  const std::string second = b.add("h", pairs_game());
  EXPECT_EQ(first, second);
  const std::string other = b.add("g", token_game(1));
  EXPECT_NE(other, first);
}

TEST(Suite, ExpectFailTags) {
  Bundle b;
  const std::string id = b.add("s", sub_strategy(pairs_game(), {"o0", "p0"}));
  SuiteResult r = run_suite(b, DocKind::strategy);
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_FALSE(r.ok());
  b.expect_fail(id, {"strategy"});
  r = run_suite(b, DocKind::strategy);
  EXPECT_TRUE(r.ok());
  EXPECT_FALSE(r.checks[0].passed());

  Bundle fine;
  fine.add("s", identity_strategy(pairs_game()));
  fine.expect_fail("s", {"strategy"});
  EXPECT_FALSE(run_suite(fine, DocKind::strategy).ok());
  fine.expect_fail("s", {"no-such-check"});
  EXPECT_THROW(run_suite(fine), InputError);
}

TEST(Suite, JsonReportShape) {
  Bundle b;
  b.add("g", pairs_game());
  const std::string json = format_json(run_suite(b));
  EXPECT_NE(json.find("\"schema_version\""), std::string::npos);
  EXPECT_NE(json.find("\"documents\""), std::string::npos);
  EXPECT_EQ(json, format_json(run_suite(b)));
}

TEST(Dot, EmptyStructure) {
  Bundle b;
  b.add("empty", share(EventStructure{}));
  const std::string dot = export_dot(b.documents().back(), DotView::causality);
  EXPECT_EQ(dot.find("->"), std::string::npos);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
}

TEST(Dot, StrategyOneHasTwoArrows) {
  Bundle b;
  b.add("s1", token_strategy(1, 2));
  const std::string dot = export_dot(b.documents().back(), DotView::causality);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '>'), 2) << dot;
  EXPECT_NE(dot.find("\"-0\""), std::string::npos) << dot;
  EXPECT_NE(dot.find("\"+0\""), std::string::npos) << dot;
}

TEST(Dot, ConflictViewDashed) {
  Bundle b;
  b.add("c", conflict_game()->es);
  const std::string dot = export_dot(b.documents().back(), DotView::conflict);
  EXPECT_NE(dot.find("style=dashed"), std::string::npos);
  EXPECT_EQ(dot, export_dot(b.documents().back(), DotView::conflict));
}

TEST(Dot, Deterministic) {
  for (const auto& [name, bundle] : fixture_catalog())
    for (const Document& d : bundle.documents())
      for (DotView v : {DotView::causality, DotView::conflict, DotView::family}) {
        std::string first, second;
        try {
          first = export_dot(d, v);
          second = export_dot(parse_bundle(dump_bundle(bundle)).at(d.id), v);
        } catch (const InputError&) {
          continue;
        }
        EXPECT_EQ(first, second) << name << " " << d.id;
      }
}

TEST(Dot, FamilyViewNeedsFamily) {
  Bundle b;
  b.add("g", pairs_game()->es);
  EXPECT_THROW(export_dot(b.documents().back(), DotView::family), InputError);
}
