#include <gtest/gtest.h>

#include "esgames/copycat.hpp"
#include "esgames/game.hpp"
#include "properties.hpp"

using namespace esgames;

TEST(Properties, RandomStructures) {
  for (std::uint32_t seed : {1u, 2u, 3u}) {
    const props::Outcome o = props::run(seed, 100);
    EXPECT_EQ(o.structures, 100u);
    for (const auto& f : o.failures) ADD_FAILURE() << f;
  }
}

TEST(Properties, ClassificationMatchesOracle) {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const EventStructure es = oracle::random_es(rng, 5);
    for (const EventMap& theta : oracle::automorphisms(es)) {
      const AutomorphismClass c = classify_automorphism(es, theta);
      EXPECT_EQ(c.negative, oracle::preserves_fixing(es, theta, Polarity::positive)) << i;
      EXPECT_EQ(c.positive, oracle::preserves_fixing(es, theta, Polarity::negative)) << i;
    }
  }
}

TEST(Properties, DualAndParallel) {
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    const EventStructure a = oracle::random_es(rng, 4);
    const EventStructure b = oracle::random_es(rng, 4);
    EXPECT_EQ(dual_es(dual_es(a)), a);
    EXPECT_EQ(dual_es(a).configurations(), a.configurations());
    const EventStructure ab = parallel_es(a, b);
    EXPECT_TRUE(validate_event_structure(ab).ok());
    EXPECT_EQ(ab.configurations().size(), a.configurations().size() * b.configurations().size());
  }
}

TEST(Properties, CopycatStructureValid) {
  std::mt19937 rng(9);
  for (int i = 0; i < 100; ++i) {
    const EventStructure a = oracle::random_es(rng, 4);
    const EventStructure cc = copycat_es(a);
    EXPECT_TRUE(validate_event_structure(cc).ok()) << i;
    EXPECT_EQ(cc.configurations(), oracle::configurations(cc)) << i;
  }
}
