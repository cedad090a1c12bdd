#include <gtest/gtest.h>

#include "esgames/errors.hpp"
#include "esgames/fixtures.hpp"
#include "oracles.hpp"

using namespace esgames;

TEST(Copycat, SingleNegativeHasThreeConfigurations) {
  const EventStructure cc = copycat_es(*single_negative_game()->es);
  ASSERT_EQ(cc.size(), 2u);
  EXPECT_EQ(cc.configurations().size(), 3u);
  const EventIndex dual = *cc.find("0:o");
  const EventIndex orig = *cc.find("1:o");
  EXPECT_EQ(cc.polarity(dual), Polarity::positive);
  EXPECT_EQ(cc.polarity(orig), Polarity::negative);
  EXPECT_TRUE(cc.below(orig, dual));
}

TEST(Copycat, StructureValidAndMatchesOracle) {
  for (const auto& [name, g] : fixture_games()) {
    Report log;
    const EventStructure cc = copycat_es(*g->es, &log);
    EXPECT_TRUE(validate_event_structure(cc).ok()) << name;
    EXPECT_EQ(cc.configurations(), oracle::configurations(cc)) << name;
    if (name == "conflict") {
      EXPECT_TRUE(log.failed("conflict-closure"));
    } else {
      EXPECT_TRUE(log.ok()) << name << "\n" << log.str();
    }
  }
}

TEST(Copycat, FunctorPreservesIdentityAndComposition) {
  const GamePtr g = token_game(2);
  const std::size_t n = g->es->size();
  EXPECT_EQ(copycat_functor(identity_map(n), n, n), identity_map(2 * n));
  const EventMap& s = g->n_action(*g->n_group().find("s0"));
  const EventMap& t = g->p_action(*g->p_group().find("t0"));
  EXPECT_EQ(copycat_functor(compose(s, t), n, n),
            compose(copycat_functor(s, n, n), copycat_functor(t, n, n)));
  const EventStructure cc = copycat_es(*g->es);
  EXPECT_TRUE(validate_map(cc, cc, copycat_functor(s, n, n)).ok());
}

TEST(Copycat, StrategyUniformAndLocalOnAllFixtures) {
  for (const auto& [name, g] : fixture_games()) {
    const Strategy s = copycat_strategy(g);
    EXPECT_TRUE(validate_strategy(s).ok()) << name;
    const UniformStrategy u = uniform_copycat(g);
    EXPECT_TRUE(validate_uniform(u).ok()) << name << "\n" << validate_uniform(u).str();
    EXPECT_TRUE(is_local(u)) << name;
  }
}

TEST(Copycat, EpsilonFactorsBothWays) {
  // (γ⁻¹, δ) = λ(α, β⁻¹) gives act(δ) ∘ act(β) = act(γ) ∘ act(α).
  for (const auto& [name, g] : fixture_games()) {
    const FiniteGroup& n = g->n_group();
    const FiniteGroup& p = g->p_group();
    for (Elem a = 0; a < n.order(); ++a)
      for (Elem b = 0; b < p.order(); ++b) {
        const auto [gamma_inv, delta] = g->law(a, p.inv(b));
        const Elem gamma = p.inv(gamma_inv);
        EXPECT_EQ(compose(g->n_action(delta), g->p_action(b)), compose(g->p_action(gamma), g->n_action(a)))
            << name << " " << n.name(a) << " " << p.name(b);
      }
  }
}

TEST(Copycat, PairsSwapSlice) {
  const GamePtr g = pairs_game();
  const UniformStrategy u = uniform_copycat(g);
  const FiniteGroup& n = u.strategy.game->n_group();
  const std::size_t sz = g->es->size();
  const Elem swap = *g->n_group().find("s");
  // N of A⊥ ∥ A is P_A × N_A; P_A is trivial.
  const Elem e_swap = product_index(g->n_group(), g->p_group().unit(), swap);
  ASSERT_LT(e_swap, n.order());
  EXPECT_EQ(*phi_event_map(u, e_swap), copycat_functor(g->n_action(swap), sz, sz));
}

TEST(Lift, IdentityLiftIsCopycat) {
  for (const auto& [name, g] : fixture_games()) {
    const std::size_t nn = g->n_group().order();
    const std::size_t np = g->p_group().order();
    LiftWitness w{g, g, identity_map(g->es->size()), {}, {}};
    for (Elem a = 0; a < nn; ++a) w.L.push_back(a);
    for (Elem b = 0; b < np; ++b) w.M.push_back(b);
    EXPECT_TRUE(validate_lift_witness(w).ok()) << name;
    EXPECT_EQ(lift_strategy(w), copycat_strategy(g)) << name;
    EXPECT_EQ(uniform_lift(w), uniform_copycat(g)) << name;
    // A colift witness reads L on P and M on N.
    const LiftWitness c{g, g, w.map, w.M, w.L};
    EXPECT_TRUE(validate_colift_witness(c).ok()) << name;
    EXPECT_TRUE(validate_uniform(uniform_colift(c)).ok()) << name;
  }
}

TEST(Lift, SwapLiftAgreesWithCopycatTables) {
  const GamePtr a = pairs_game();
  const GamePtr b = token_game(1);
  const LiftWitness w = swap_witness(a, b);
  ASSERT_TRUE(validate_lift_witness(w).ok()) << validate_lift_witness(w).str();
  const UniformStrategy lifted = uniform_lift(w);
  EXPECT_TRUE(validate_uniform(lifted).ok());
  const UniformStrategy cc = uniform_copycat(w.a);

  const FiniteGroup& na = w.a->n_group();
  const FiniteGroup& nb = w.b->n_group();
  const FiniteGroup& pa = w.a->p_group();
  const FiniteGroup& pb = w.b->p_group();
  const std::size_t configs = cc.configuration_count();
  ASSERT_EQ(lifted.configuration_count(), configs);
  // N of A⊥ ∥ B is P_A × N_B, P of A⊥ ∥ B is N_A × P_B.
  for (Elem nu = 0; nu < pa.order(); ++nu)
    for (Elem alpha = 0; alpha < nb.order(); ++alpha)
      for (std::size_t x = 0; x < configs; ++x) {
        const PhiEntry& got = lifted.at(product_index(nb, nu, alpha), x);
        const PhiEntry& want = cc.at(product_index(na, nu, w.L[alpha]), x);
        EXPECT_EQ(got.image, want.image);
        const auto [pi, beta] = product_components(pa, want.response);
        EXPECT_EQ(got.response, product_index(pb, pi, w.M[beta]));
      }
}

TEST(Lift, CorruptedLIsNamed) {
  LiftWitness w = swap_witness(pairs_game(), pairs_game());
  ASSERT_TRUE(validate_lift_witness(w).ok());
  w.L[1] = 0;
  const Report r = validate_lift_witness(w);
  EXPECT_TRUE(r.failed("L-homomorphism") || r.failed("negative-square") || r.failed("hexagon")) << r.str();
  try {
    uniform_lift(w);
    ADD_FAILURE() << "corrupted witness accepted";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("L"), std::string::npos) << e.what();
  }
}

TEST(Lift, NonReceptiveMapRejected) {
  // o ↦ o0 leaves o1 without a preimage.
  const GamePtr a = single_negative_game();
  const GamePtr b = pairs_game();
  const LiftWitness w{a, b, {*b->es->find("o0")}, {0, 0}, {0}};
  EXPECT_TRUE(validate_lift_witness(w).failed("strategy"));
  EXPECT_THROW(lift_strategy(w), PreconditionError);
}

TEST(Lift, BangInjectionIsNotReceptive) {
  // Copy 1 of !A has negative moves with no counterpart in A.
  const LiftWitness w = bang_injection_witness(pairs_game());
  const Report r = validate_lift_witness(w);
  EXPECT_TRUE(r.failed("strategy"));
  EXPECT_TRUE(r.failed("L-homomorphism"));
  EXPECT_THROW(lift_strategy(w), PreconditionError);
}

TEST(Lift, BangCounitColift) {
  for (const GamePtr& a : {pairs_game(), single_negative_game()}) {
    const LiftWitness w = bang_counit_witness(a);
    const Report r = validate_colift_witness(w);
    ASSERT_TRUE(r.ok()) << r.str();
    const Strategy s = colift_strategy(w);
    EXPECT_TRUE(validate_strategy(s).ok());
    const UniformStrategy u = uniform_colift(w);
    EXPECT_EQ(u.strategy, s);
    EXPECT_TRUE(validate_uniform(u).ok());
  }
}

TEST(Lift, DualWitnessIsInvolutive) {
  const LiftWitness w = swap_witness(pairs_game(), token_game(1));
  EXPECT_EQ(dual_witness(dual_witness(w)), w);
}
