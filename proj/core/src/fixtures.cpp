#include "esgames/fixtures.hpp"

#include "esgames/errors.hpp"

namespace esgames {

namespace {

EventMap swap_events(std::size_t size, const std::vector<EventPair>& pairs) {
  EventMap m = identity_map(size);
  for (const auto& [a, b] : pairs) {
    m[a] = b;
    m[b] = a;
  }
  return m;
}

GroupAction derived_group(const EventStructurePtr& es, const std::vector<EventMap>& gens,
                          const std::vector<std::string>& names) {
  return group_from_generators(es, gens, names).action;
}

}  // namespace

GamePtr pairs_game() {
  auto es = share(EventStructure::from_covers(
      {{"o0", Polarity::negative, "-0"}, {"o1", Polarity::negative, "-1"},
       {"p0", Polarity::positive, "+0"}, {"p1", Polarity::positive, "+1"}},
      {{0, 2}, {1, 3}}, {}));
  GroupAction n = derived_group(es, {swap_events(4, {{0, 1}, {2, 3}})}, {"s"});
  GroupAction p = trivial_action(es);
  DistributiveLaw law = derive_law_from_factorization(n, p);
  return share(Game{es, std::move(n), std::move(p), std::move(law)});
}

GamePtr token_game(std::size_t n) {
  if (n == 0) throw PreconditionError("the token game needs at least one token per player");
  std::vector<Event> events;
  for (std::size_t i = 0; i < n; ++i) events.push_back({"o" + std::to_string(i), Polarity::negative, "-" + std::to_string(i)});
  for (std::size_t i = 0; i < n; ++i) events.push_back({"p" + std::to_string(i), Polarity::positive, "+" + std::to_string(i)});
  auto es = share(EventStructure::from_covers(std::move(events), {}, {}));
  std::vector<EventMap> ngens, pgens;
  std::vector<std::string> nnames, pnames;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto a = static_cast<EventIndex>(i);
    ngens.push_back(swap_events(2 * n, {{a, a + 1}}));
    pgens.push_back(swap_events(2 * n, {{static_cast<EventIndex>(n + i), static_cast<EventIndex>(n + i + 1)}}));
    nnames.push_back("s" + std::to_string(i));
    pnames.push_back("t" + std::to_string(i));
  }
  GroupAction na = derived_group(es, ngens, nnames);
  GroupAction pa = derived_group(es, pgens, pnames);
  DistributiveLaw law = commuting_law(na.group, pa.group);
  return share(Game{es, std::move(na), std::move(pa), std::move(law)});
}

Strategy sub_strategy(const GamePtr& game, const std::vector<std::string>& ids,
                      const std::vector<std::pair<std::string, std::string>>& links) {
  const EventStructure& g = *game->es;
  std::vector<Event> events;
  EventMap proj;
  for (const auto& id : ids) {
    const auto e = g.find(id);
    if (!e) throw InputError("no game event '" + id + "'");
    events.push_back({id, g.polarity(*e), ""});
    proj.push_back(*e);
  }
  auto local = [&](const std::string& id) {
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (ids[i] == id) return static_cast<EventIndex>(i);
    throw InputError("no strategy event '" + id + "'");
  };
  std::vector<EventPair> covers, conflict;
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = 0; j < ids.size(); ++j) {
      if (g.below(proj[i], proj[j])) covers.emplace_back(i, j);
      if (g.in_conflict(proj[i], proj[j]) && i < j) conflict.emplace_back(i, j);
    }
  for (const auto& [a, b] : links) covers.emplace_back(local(a), local(b));
  return Strategy{share(EventStructure::from_covers(std::move(events), covers, conflict)), game, std::move(proj)};
}

Strategy token_strategy(int k, std::size_t n) {
  if (k < 1 || k > 5) throw PreconditionError("token strategies are numbered 1 to 5");
  if ((k == 4 || k == 5) && n < 3) throw PreconditionError("strategies 4 and 5 need token number 2 (n >= 3)");
  const GamePtr game = token_game(n);
  auto o = [](std::size_t i) { return "o" + std::to_string(i); };
  auto p = [](std::size_t i) { return "p" + std::to_string(i); };
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(o(i));
  std::vector<std::pair<std::string, std::string>> links;
  switch (k) {
    case 1:
      for (std::size_t i = 0; i < n; ++i) {
        ids.push_back(p(i));
        links.emplace_back(o(i), p(i));
      }
      break;
    case 2:
      break;
    case 3: {
      ids.push_back(p(0));
      std::size_t next = 1;
      for (std::size_t i = 0; i < n && next < n; ++i)
        for (int twice = 0; twice < 2 && next < n; ++twice, ++next) {
          ids.push_back(p(next));
          links.emplace_back(o(i), p(next));
        }
      break;
    }
    case 4:
      ids.push_back(p(2));
      links.emplace_back(o(2), p(2));
      break;
    case 5: {
      std::size_t next = 0;
      for (std::size_t i = 1; i < n && next < n; ++i)
        for (std::size_t c = 0; c < i && next < n; ++c, ++next) {
          ids.push_back(p(next));
          links.emplace_back(o(i), p(next));
        }
      break;
    }
  }
  return sub_strategy(game, ids, links);
}

TwinSwap twin_swap() {
  auto es = share(EventStructure::from_covers(
      {{"o0", Polarity::negative, "-0"}, {"o1", Polarity::negative, "-1"},
       {"p0", Polarity::positive, "+0"}, {"p1", Polarity::positive, "+1"}},
      {}, {}));
  const EventMap alpha = swap_events(4, {{0, 1}});
  const EventMap beta = swap_events(4, {{2, 3}});
  GroupAction n = derived_group(es, {alpha}, {"alpha"});
  GroupAction p = derived_group(es, {beta}, {"beta"});
  DistributiveLaw law = commuting_law(n.group, p.group);
  auto game = share(Game{es, std::move(n), std::move(p), std::move(law)});
  const Strategy sigma = identity_strategy(game);
  const std::size_t configs = es->configurations().size();
  const Elem a = *game->n_group().find("alpha");
  const Elem b = *game->p_group().find("beta");
  const Elem e_n = game->n_group().unit();
  const Elem e_p = game->p_group().unit();

  std::vector<EventMap> nonlocal_maps(2), local_maps(2);
  std::vector<std::vector<Elem>> nonlocal_resp(2), local_resp(2, std::vector<Elem>(configs, e_p));
  nonlocal_maps[e_n] = local_maps[e_n] = identity_map(4);
  nonlocal_maps[a] = compose(beta, alpha);
  local_maps[a] = alpha;
  nonlocal_resp[e_n].assign(configs, e_p);
  nonlocal_resp[a].assign(configs, b);
  return TwinSwap{game, uniform_from_slices(sigma, nonlocal_maps, nonlocal_resp),
                   uniform_from_slices(sigma, local_maps, local_resp)};
}

GamePtr conflict_game() {
  auto es = share(EventStructure::from_covers(
      {{"a", Polarity::negative, ""}, {"b", Polarity::negative, ""},
       {"c", Polarity::positive, ""}, {"d", Polarity::positive, ""}},
      {{0, 2}, {1, 3}}, {{0, 1}, {0, 3}, {2, 1}, {2, 3}}));
  GroupAction n = derived_group(es, {swap_events(4, {{0, 1}, {2, 3}})}, {"s"});
  GroupAction p = trivial_action(es);
  DistributiveLaw law = derive_law_from_factorization(n, p);
  return share(Game{es, std::move(n), std::move(p), std::move(law)});
}

GamePtr single_negative_game() {
  return share(trivial_game(share(EventStructure::from_covers({{"o", Polarity::negative, ""}}, {}, {}))));
}

GamePtr token_bang_game() {
  const Game b = bang_game(*single_negative_game(), 2);
  return share(parallel_game(b, dual_game(b)));
}

std::vector<NamedGame> fixture_games() {
  const GamePtr single = single_negative_game();
  return {
      {"empty", share(trivial_game(share(EventStructure())))},
      {"single-negative", single},
      {"pairs", pairs_game()},
      {"dual-pairs", share(dual_game(*pairs_game()))},
      {"token-1", token_game(1)},
      {"token-2", token_game(2)},
      {"token-3", token_game(3)},
      {"twin-swap", twin_swap().game},
      {"conflict", conflict_game()},
      {"bang-single-2", share(bang_game(*single, 2))},
      {"bang-pairs-2", share(bang_game(*pairs_game(), 2))},
      {"token-bang", token_bang_game()},
  };
}

LiftWitness swap_witness(const GamePtr& a, const GamePtr& b) {
  auto ab = share(parallel_game(*a, *b));
  auto ba = share(parallel_game(*b, *a));
  const std::size_t na = a->es->size();
  const std::size_t nb = b->es->size();
  EventMap map(na + nb);
  for (std::size_t i = 0; i < na; ++i) map[i] = static_cast<EventIndex>(nb + i);
  for (std::size_t j = 0; j < nb; ++j) map[na + j] = static_cast<EventIndex>(j);
  // N_{B∥A} -> N_{A∥B} and P_{A∥B} -> P_{B∥A}: exchange the components.
  std::vector<Elem> L(ba->n_group().order()), M(ab->p_group().order());
  for (Elem x = 0; x < L.size(); ++x) {
    const auto [beta, alpha] = product_components(a->n_group(), x);
    L[x] = product_index(b->n_group(), alpha, beta);
  }
  for (Elem x = 0; x < M.size(); ++x) {
    const auto [alpha, beta] = product_components(b->p_group(), x);
    M[x] = product_index(a->p_group(), beta, alpha);
  }
  return LiftWitness{ab, ba, std::move(map), std::move(L), std::move(M)};
}

LiftWitness bang_injection_witness(const GamePtr& a) {
  auto bang = share(bang_game(*a, 2));
  const std::size_t nn = a->n_group().order();
  const std::size_t np = a->p_group().order();
  std::vector<Elem> L(bang->n_group().order()), M(np);
  // Copy 0 is the most significant digit of the component tuple.
  for (Elem x = 0; x < L.size(); ++x) L[x] = static_cast<Elem>((x % (nn * nn)) / nn);
  for (Elem b = 0; b < np; ++b) M[b] = static_cast<Elem>(b * np + a->p_group().unit());
  return LiftWitness{a, bang, identity_map(a->es->size()), std::move(L), std::move(M)};
}

LiftWitness bang_counit_witness(const GamePtr& a) {
  auto bang = share(bang_game(*a, 2));
  const std::size_t nn = a->n_group().order();
  const std::size_t np = a->p_group().order();
  std::vector<Elem> L(bang->p_group().order()), M(nn);
  for (Elem x = 0; x < L.size(); ++x) L[x] = static_cast<Elem>(x / np);
  for (Elem al = 0; al < nn; ++al) M[al] = static_cast<Elem>(al * nn + a->n_group().unit());
  return LiftWitness{a, bang, identity_map(a->es->size()), std::move(L), std::move(M)};
}

std::vector<CatalogEntry> fixture_catalog() {
  std::vector<CatalogEntry> out;

  {
    Bundle b;
    const GamePtr g = pairs_game();
    b.add("pairs", g);
    b.add("pairs-identity", identity_strategy(g));
    b.add("pairs-dual", share(dual_game(*g)));
    b.add("pairs-neg-family", family_from_action(g->n_action));
    b.add("pairs-tcg", tcg_from_game(*g));
    b.add("pairs-bang-2", share(bang_game(*g, 2)));
    out.push_back({"pairs", std::move(b)});
  }
  for (std::size_t n : {2, 3}) {
    Bundle b;
    const std::string tag = "token-" + std::to_string(n);
    const GamePtr g = token_game(n);
    b.add(tag, g);
    for (int k = 1; k <= 5; ++k) {
      if ((k == 4 || k == 5) && n < 3) continue;
      b.add(tag + "-strategy-" + std::to_string(k), token_strategy(k, n));
    }
    b.add(tag + "-tcg", tcg_from_game(*g));
    if (n == 2) {
      // Blue's tokens relabelled by t0: a global weak map with response t0.
      const Strategy s1 = token_strategy(1, n);
      const Elem t0 = *g->p_group().find("t0");
      const Strategy relabelled{s1.internal, s1.game, compose(g->p_action(t0), s1.proj)};
      b.add(tag + "-global-weak-map", global_weak_map(relabelled, s1, identity_map(s1.internal->size()), t0));
      for (int k : {1, 2})
        if (auto u = search_uniform_structure(token_strategy(k, n)).uniform)
          b.add(tag + "-uniform-" + std::to_string(k), *u);
    }
    out.push_back({tag, std::move(b)});
  }
  {
    Bundle b;
    const TwinSwap ex = twin_swap();
    b.add("twin-swap", ex.game);
    b.add("twin-swap-nonlocal", ex.nonlocal);
    b.expect_fail("twin-swap-nonlocal", {"locality"});
    b.add("twin-swap-local", ex.local);
    b.add("twin-swap-family", family_from_uniform(ex.nonlocal));
    b.add("twin-swap-tcg", tcg_from_game(*ex.game));
    out.push_back({"twin-swap", std::move(b)});
  }
  {
    Bundle b;
    for (const auto& [name, game] : {NamedGame{"pairs", pairs_game()}, NamedGame{"conflict", conflict_game()},
                                     NamedGame{"token-bang", token_bang_game()}})
      b.add("copycat-" + name, uniform_copycat(game));
    out.push_back({"copycat", std::move(b)});
  }
  {
    Bundle b;
    const GamePtr single = single_negative_game();
    b.add("bang-single-2", share(bang_game(*single, 2)));
    b.add("token-bang", token_bang_game());
    b.add("conflict", conflict_game());
    out.push_back({"constructions", std::move(b)});
  }
  {
    Bundle b;
    b.add("swap", swap_witness(pairs_game(), conflict_game()), LiftDirection::lift);
    b.add("bang-injection", bang_injection_witness(pairs_game()), LiftDirection::lift);
    b.expect_fail("bang-injection", {"witness", "uniform"});
    b.add("bang-counit", bang_counit_witness(pairs_game()), LiftDirection::colift);
    out.push_back({"lifts", std::move(b)});
  }
  {
    Bundle b;
    // a < a', a # b but not a' # b.
    auto bad_es = share(EventStructure::from_covers(
        {{"a", Polarity::negative, ""}, {"a2", Polarity::positive, ""}, {"b", Polarity::negative, ""}}, {{0, 1}},
        {{0, 2}}));
    b.add("non-hereditary", bad_es);
    b.expect_fail("non-hereditary", {"event-structure"});

    const GamePtr g = pairs_game();
    auto swapped = share(Game{g->es, g->p_action, g->n_action, commuting_law(g->p_action.group, g->n_action.group)});
    b.add("swap-in-P", swapped);
    b.expect_fail("swap-in-P", {"game"});

    b.add("missing-negative", sub_strategy(g, {"o0", "p0"}, {}));
    b.expect_fail("missing-negative", {"strategy"});

    const Strategy id = identity_strategy(g);
    const Strategy s1 = token_strategy(1, 2);
    const GamePtr t2 = s1.game;
    WeakMap wrong = global_weak_map(s1, s1, identity_map(s1.internal->size()), *t2->p_group().find("t0"));
    b.add("wrong-response", wrong);
    b.expect_fail("wrong-response", {"weak-map"});

    const IsomorphismFamily full = family_from_action(g->n_action);
    std::vector<ConfigBijection> members;
    for (const auto& t : full.members())
      if (!(t.source.size() == 1 && !t.is_identity())) members.push_back(t);
    b.add("missing-restriction", IsomorphismFamily(g->es, members));
    b.expect_fail("missing-restriction", {"iso-family"});
    out.push_back({"negative", std::move(b)});
  }
  return out;
}

}  // namespace esgames
