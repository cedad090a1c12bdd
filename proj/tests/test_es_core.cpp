#include <gtest/gtest.h>

#include "esgames/errors.hpp"
#include "esgames/fixtures.hpp"
#include "oracles.hpp"

using namespace esgames;

namespace {

EventStructurePtr pairs_es() { return pairs_game()->es; }

EventStructure two_in_conflict() {
  return EventStructure::from_covers({{"a", Polarity::negative, ""}, {"b", Polarity::negative, ""}}, {}, {{0, 1}});
}

}  // namespace

TEST(EventStructure, EmptyIsValidWithOneConfiguration) {
  const EventStructure es;
  EXPECT_TRUE(validate_event_structure(es).ok());
  ASSERT_EQ(es.configurations().size(), 1u);
  EXPECT_TRUE(es.configurations()[0].empty());
}

TEST(EventStructure, HeredityViolationNamed) {
  const auto es = EventStructure::from_covers(
      {{"a", Polarity::negative, ""}, {"a2", Polarity::negative, ""}, {"b", Polarity::negative, ""}}, {{0, 1}},
      {{0, 2}});
  const Report r = validate_event_structure(es);
  ASSERT_TRUE(r.failed("heredity"));
  EXPECT_NE(r.witness("heredity").find("heredity violated at (a2,b)"), std::string::npos);
}

TEST(EventStructure, PairsIsValidWithNineConfigurations) {
  const auto es = pairs_es();
  EXPECT_TRUE(validate_event_structure(*es).ok());
  EXPECT_EQ(es->configurations().size(), 9u);
  EXPECT_EQ(es->configurations(), oracle::configurations(*es));
}

TEST(EventStructure, ConflictPairHasThreeConfigurations) {
  const auto es = two_in_conflict();
  EXPECT_EQ(es.configurations().size(), 3u);
  EXPECT_FALSE(es.is_configuration(es.all()));
}

TEST(EventStructure, CoversAreTransitivelyClosedAndCyclesRejected) {
  const auto chain = EventStructure::from_covers(
      {{"a", Polarity::negative, ""}, {"b", Polarity::positive, ""}, {"c", Polarity::negative, ""}}, {{0, 1}, {1, 2}},
      {});
  EXPECT_TRUE(chain.below(0, 2));
  EXPECT_EQ(chain.covers().size(), 2u);
  EXPECT_THROW(EventStructure::from_covers({{"a", Polarity::negative, ""}, {"b", Polarity::negative, ""}},
                                           {{0, 1}, {1, 0}}, {}),
               InputError);
  EXPECT_THROW(EventStructure::from_covers({{"a", Polarity::negative, ""}, {"a", Polarity::negative, ""}}, {}, {}),
               InputError);
}

TEST(EventStructure, ConfigurationGuard) {
  std::vector<Event> events;
  for (int i = 0; i < 20; ++i) events.push_back({"e" + std::to_string(i), Polarity::negative, ""});
  const auto es = EventStructure::from_covers(events, {}, {});
  Limits small;
  small.max_configurations = 1000;
  EXPECT_THROW(enumerate_configurations(es, small), BoundExceeded);
}

TEST(EsMap, IdentityIsValid) {
  const auto es = pairs_es();
  EXPECT_TRUE(validate_map(*es, *es, identity_map(es->size())).ok());
}

TEST(EsMap, CollapsingConcurrentEventsBreaksLocalInjectivity) {
  const auto two = EventStructure::from_covers({{"a", Polarity::negative, ""}, {"b", Polarity::negative, ""}}, {}, {});
  const auto one = EventStructure::from_covers({{"c", Polarity::negative, ""}}, {}, {});
  const Report r = validate_map(two, one, {0, 0});
  ASSERT_TRUE(r.failed("local-injectivity"));
  EXPECT_NE(r.witness("local-injectivity").find("{a,b}"), std::string::npos);
}

TEST(EsMap, PolarityFlipRejected) {
  const auto neg = EventStructure::from_covers({{"a", Polarity::negative, ""}}, {}, {});
  const auto pos = EventStructure::from_covers({{"b", Polarity::positive, ""}}, {}, {});
  EXPECT_TRUE(validate_map(neg, pos, {0}).failed("polarity"));
}

TEST(EsMap, RestrictMap) {
  const auto es = pairs_es();
  const EsMap id = identity_es_map(es);
  EXPECT_TRUE(restrict_map(id, EventSet{}).empty());
  const EsMap swap{es, es, {1, 0, 3, 2}};
  const EventSet column{0b0101};  // o0, p0
  const auto graph = restrict_map(swap, column);
  ASSERT_EQ(graph.size(), 2u);
  EXPECT_EQ(graph[0], (EventPair{0, 1}));
  EXPECT_EQ(graph[1], (EventPair{2, 3}));
  EXPECT_THROW(restrict_map(swap, EventSet{0b0100}), InputError);
}

TEST(Parallel, ConfigurationsMultiply) {
  const auto a = pairs_es();
  const auto b = two_in_conflict();
  const auto ab = parallel_es(*a, b);
  EXPECT_EQ(ab.configurations().size(), a->configurations().size() * b.configurations().size());
  EXPECT_EQ(ab.id(0), "0:o0");
  const auto single = EventStructure::from_covers({{"x", Polarity::negative, ""}}, {}, {});
  EXPECT_EQ(parallel_es(single, single).configurations().size(), 4u);
  EXPECT_EQ(parallel_es(*a, EventStructure()).size(), a->size());
}

TEST(Automorphisms, PairsHasExactlyTwo) {
  const auto es = pairs_es();
  const auto autos = enumerate_automorphisms(*es);
  EXPECT_EQ(autos.size(), 2u);
  EXPECT_EQ(autos, oracle::automorphisms(*es));
  EXPECT_EQ(enumerate_automorphisms(EventStructure()).size(), 1u);
}

TEST(Automorphisms, TwoConcurrentNegatives) {
  const auto es = EventStructure::from_covers({{"a", Polarity::negative, ""}, {"b", Polarity::negative, ""}}, {}, {});
  EXPECT_EQ(enumerate_automorphisms(es).size(), 2u);
}

TEST(Extensions, Kinds) {
  const auto es = pairs_es();
  EXPECT_EQ(extension_kind(*es, EventSet{1}, EventSet{1}), ExtensionKind::empty);
  EXPECT_TRUE(is_positive_extension(ExtensionKind::empty));
  EXPECT_TRUE(is_negative_extension(ExtensionKind::empty));
  EXPECT_EQ(extension_kind(*es, EventSet{}, EventSet{0b0001}), ExtensionKind::negative);
  EXPECT_EQ(extension_kind(*es, EventSet{}, EventSet{0b0101}), ExtensionKind::mixed);
  EXPECT_EQ(extension_kind(*es, EventSet{0b0001}, EventSet{0b0010}), ExtensionKind::not_an_extension);
}

TEST(Dual, FlipsPolarityOnly) {
  const auto es = pairs_es();
  const auto d = dual_es(*es);
  for (std::size_t i = 0; i < es->size(); ++i)
    EXPECT_EQ(d.polarity(static_cast<EventIndex>(i)), flip(es->polarity(static_cast<EventIndex>(i))));
  EXPECT_EQ(dual_es(d), *es);
}
