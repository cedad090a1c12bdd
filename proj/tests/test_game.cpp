#include <gtest/gtest.h>

#include "esgames/errors.hpp"
#include "esgames/fixtures.hpp"

using namespace esgames;

TEST(Game, FixturesValidate) {
  for (const auto& [name, g] : fixture_games()) EXPECT_TRUE(validate_game(*g).ok()) << name << "\n" << validate_game(*g).str();
}

TEST(Game, TrivialGameAlwaysValid) {
  for (const auto& [name, g] : fixture_games()) EXPECT_TRUE(validate_game(trivial_game(g->es)).ok()) << name;
}

TEST(Game, SwapInPositiveGroupRejected) {
  const GamePtr g = pairs_game();
  const Game bad{g->es, g->p_action, g->n_action, commuting_law(g->p_action.group, g->n_action.group)};
  const Report r = validate_game(bad);
  ASSERT_TRUE(r.failed("positive-action"));
  EXPECT_NE(r.witness("positive-action").find("positive action contains non-positive automorphism"),
            std::string::npos);
}

TEST(Game, CorruptedLawNamed) {
  const GamePtr t = token_game(2);
  Game bad = *t;
  bad.law.table[1] = bad.law.table[0];
  const Report r = validate_game(bad);
  EXPECT_TRUE(r.failed("law")) << r.str();
}

TEST(Game, DualInvolution) {
  for (const auto& [name, g] : fixture_games()) {
    const Game d = dual_game(*g);
    EXPECT_TRUE(validate_game(d).ok()) << name;
    EXPECT_EQ(dual_game(d), *g) << name;
  }
  const GamePtr g = pairs_game();
  const Game d = dual_game(*g);
  EXPECT_EQ(d.p_group().order(), 2u);
  EXPECT_EQ(d.n_group().order(), 1u);
  const auto c = classify_automorphism(*d.es, d.p_action(1));
  EXPECT_TRUE(c.positive);
  EXPECT_FALSE(c.negative);
}

TEST(Game, DualOfTrivial) {
  const GamePtr g = pairs_game();
  EXPECT_EQ(dual_game(trivial_game(g->es)), trivial_game(share(dual_es(*g->es))));
}

TEST(Game, ParallelOrdersMultiply) {
  const GamePtr a = pairs_game();
  const GamePtr b = token_game(2);
  const Game ab = parallel_game(*a, *b);
  EXPECT_TRUE(validate_game(ab).ok());
  EXPECT_EQ(ab.n_group().order(), a->n_group().order() * b->n_group().order());
  EXPECT_EQ(ab.p_group().order(), a->p_group().order() * b->p_group().order());
  const Game with_empty = parallel_game(*a, trivial_game(share(EventStructure())));
  EXPECT_EQ(with_empty.es->size(), a->es->size());
  EXPECT_EQ(with_empty.n_group().order(), a->n_group().order());
}

TEST(Game, ParallelLawRestrictsToComponents) {
  const GamePtr a = twin_swap().game;
  const GamePtr b = token_game(2);
  const Game ab = parallel_game(*a, *b);
  for (Elem x = 0; x < a->n_group().order(); ++x)
    for (Elem y = 0; y < a->p_group().order(); ++y) {
      const Elem nx = product_index(b->n_group(), x, b->n_group().unit());
      const Elem py = product_index(b->p_group(), y, b->p_group().unit());
      const auto [p2, n2] = ab.law(nx, py);
      const auto [q, m] = a->law(x, y);
      EXPECT_EQ(p2, product_index(b->p_group(), q, b->p_group().unit()));
      EXPECT_EQ(n2, product_index(b->n_group(), m, b->n_group().unit()));
    }
}

TEST(Game, BangSingleNegative) {
  const GamePtr single = single_negative_game();
  const Game b1 = bang_game(*single, 1);
  EXPECT_EQ(b1.n_group().order(), 1u);
  EXPECT_EQ(b1.es->size(), 1u);
  const Game b2 = bang_game(*single, 2);
  EXPECT_TRUE(validate_game(b2).ok());
  EXPECT_EQ(b2.n_group().order(), 2u);
  EXPECT_EQ(b2.p_group().order(), 1u);
  EXPECT_EQ(b2.es->id(1), "1:o");
}

TEST(Game, BangPairsUpToThreeCopies) {
  const GamePtr g = pairs_game();
  for (std::size_t n = 1; n <= 3; ++n) {
    const Game b = bang_game(*g, n);
    EXPECT_TRUE(validate_game(b).ok()) << n;
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= i;
    std::size_t pow = 1;
    for (std::size_t i = 0; i < n; ++i) pow *= 2;
    EXPECT_EQ(b.n_group().order(), fact * pow);
  }
}

TEST(Game, BangOfMixedGameRejected) {
  try {
    bang_game(*token_game(1), 2);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("initial moves all have the same polarity"), std::string::npos);
  }
}

TEST(Game, TokenBangReconstruction) {
  const GamePtr g = token_bang_game();
  EXPECT_TRUE(validate_game(*g).ok());
  EXPECT_EQ(g->es->configurations().size(), 16u);
  EXPECT_EQ(g->n_group().order(), 2u);
  EXPECT_EQ(g->p_group().order(), 2u);
}

TEST(Game, Polarity) {
  EXPECT_TRUE(polarity_of_game(trivial_game(share(EventStructure()))).vacuous());
  const auto eq = polarity_of_game(*pairs_game());
  EXPECT_TRUE(eq.negative);
  EXPECT_FALSE(eq.positive);
  EXPECT_TRUE(polarity_of_game(*token_game(2)).mixed());
}

TEST(Game, TokenGame) {
  const GamePtr t1 = token_game(1);
  EXPECT_EQ(t1->n_group().order(), 1u);
  const GamePtr t2 = token_game(2);
  EXPECT_EQ(t2->n_group().order(), 2u);
  EXPECT_EQ(t2->p_group().order(), 2u);
  EXPECT_EQ(t2->es->configurations().size(), 16u);
  EXPECT_EQ(derive_law_from_factorization(t2->n_action, t2->p_action), t2->law);
}
