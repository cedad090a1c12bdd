#include "esgames/game.hpp"

#include <algorithm>
#include <numeric>

#include "esgames/errors.hpp"

namespace esgames {

Report validate_game(const Game& game) {
  Report r;
  r.merge(validate_event_structure(*game.es), "event-structure/");
  if (!r.ok()) return r;
  r.merge(validate_group(game.n_group()), "groups/N/");
  r.merge(validate_group(game.p_group()), "groups/P/");
  if (!r.ok()) return r;
  if (!(*game.n_action.target == *game.es) || !(*game.p_action.target == *game.es)) {
    r.add("actions", "an action targets a different event structure");
    return r;
  }
  r.merge(validate_action(game.n_action), "actions/N/");
  r.merge(validate_action(game.p_action), "actions/P/");
  if (!r.ok()) return r;

  const Report neg = validate_action_polarity(game.n_action, Polarity::negative);
  const Report pos = validate_action_polarity(game.p_action, Polarity::positive);
  for (const auto& v : neg.violations()) r.add("negative-action", v.message);
  for (const auto& v : pos.violations()) r.add("positive-action", v.message);

  if (!(*game.law.n_group == game.n_group()) || !(*game.law.p_group == game.p_group())) {
    r.add("law", "the law is not over the game's groups");
    return r;
  }
  const Report law_report = validate_distributive_law(game.law);
  for (const auto& v : law_report.violations()) r.add("law", v.axiom + ": " + v.message);
  if (!law_report.ok()) return r;

  const FiniteGroup& n = game.n_group();
  const FiniteGroup& p = game.p_group();
  for (Elem a = 0; a < n.order(); ++a)
    for (Elem b = 0; b < p.order(); ++b) {
      const auto [b2, a2] = game.law(a, b);
      if (compose(game.n_action(a), game.p_action(b)) != compose(game.p_action(b2), game.n_action(a2)))
        r.add("permutation-square", "act(" + n.name(a) + ") o act(" + p.name(b) + ") != act(" + p.name(b2) +
                                        ") o act(" + n.name(a2) + ")");
    }
  return r;
}

Game trivial_game(const EventStructurePtr& es) {
  GroupAction n = trivial_action(es);
  GroupAction p = trivial_action(es);
  DistributiveLaw law = commuting_law(n.group, p.group);
  return Game{es, std::move(n), std::move(p), std::move(law)};
}

Game dual_game(const Game& game) {
  auto es = share(dual_es(*game.es));
  const FiniteGroup& n = game.n_group();
  const FiniteGroup& p = game.p_group();
  // N' = P, P' = N; λ'(β, α) = isw(λ(isw(β, α))).
  DistributiveLaw law{game.p_action.group, game.n_action.group, {}};
  law.table.resize(p.order() * n.order());
  for (Elem b = 0; b < p.order(); ++b)
    for (Elem a = 0; a < n.order(); ++a) {
      const auto [a_inv, b_inv] = invert_and_swap(p, n, b, a);
      const auto [b2, a2] = game.law(a_inv, b_inv);
      law.table[b * n.order() + a] = invert_and_swap(p, n, b2, a2);
    }
  return Game{es, GroupAction{game.p_action.group, es, game.p_action.act},
              GroupAction{game.n_action.group, es, game.n_action.act}, std::move(law)};
}

namespace {

GroupAction product_action(const GroupAction& a, const GroupAction& b, const GroupPtr& group,
                           const EventStructurePtr& es) {
  const std::size_t na = a.target->size();
  std::vector<EventMap> act;
  act.reserve(group->order());
  for (Elem x = 0; x < a.group->order(); ++x)
    for (Elem y = 0; y < b.group->order(); ++y) {
      EventMap m(es->size());
      for (std::size_t e = 0; e < na; ++e) m[e] = a.act[x][e];
      for (std::size_t e = 0; e < b.target->size(); ++e)
        m[na + e] = static_cast<EventIndex>(na + b.act[y][e]);
      act.push_back(std::move(m));
    }
  return GroupAction{group, es, std::move(act)};
}

}  // namespace

Game parallel_game(const Game& a, const Game& b) {
  auto es = share(parallel_es(*a.es, *b.es));
  auto n_group = share(direct_product(a.n_group(), b.n_group()));
  auto p_group = share(direct_product(a.p_group(), b.p_group()));
  GroupAction n = product_action(a.n_action, b.n_action, n_group, es);
  GroupAction p = product_action(a.p_action, b.p_action, p_group, es);

  DistributiveLaw law{n_group, p_group, std::vector<std::pair<Elem, Elem>>(n_group->order() * p_group->order())};
  for (Elem alpha = 0; alpha < n_group->order(); ++alpha)
    for (Elem beta = 0; beta < p_group->order(); ++beta) {
      const auto [alpha_a, alpha_b] = product_components(b.n_group(), alpha);
      const auto [beta_a, beta_b] = product_components(b.p_group(), beta);
      const auto [beta_a2, alpha_a2] = a.law(alpha_a, beta_a);
      const auto [beta_b2, alpha_b2] = b.law(alpha_b, beta_b);
      law.table[alpha * p_group->order() + beta] = {product_index(b.p_group(), beta_a2, beta_b2),
                                                    product_index(b.n_group(), alpha_a2, alpha_b2)};
    }
  return Game{es, std::move(n), std::move(p), std::move(law)};
}

std::vector<std::vector<std::size_t>> permutations_of(std::size_t n) {
  std::vector<std::size_t> pi(n);
  std::iota(pi.begin(), pi.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

namespace {

/// Mixed-radix encoding of tuples (x_0, ..., x_{n-1}) over a group of order
/// k, copy 0 most significant.
struct TupleCodec {
  std::size_t copies;
  std::size_t radix;

  std::size_t count() const {
    std::size_t c = 1;
    for (std::size_t i = 0; i < copies; ++i) c *= radix;
    return c;
  }
  std::vector<Elem> decode(std::size_t code) const {
    std::vector<Elem> out(copies);
    for (std::size_t i = copies; i-- > 0;) {
      out[i] = static_cast<Elem>(code % radix);
      code /= radix;
    }
    return out;
  }
  std::size_t encode(const std::vector<Elem>& t) const {
    std::size_t code = 0;
    for (Elem x : t) code = code * radix + x;
    return code;
  }
};

std::string tuple_name(const FiniteGroup& g, const std::vector<Elem>& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + g.name(t[i]);
  return out;
}

}  // namespace

Game bang_game(const Game& a, std::size_t copies, const Limits& limits) {
  if (copies == 0) throw PreconditionError("bang needs at least one copy");
  const GamePolarity pol = polarity_of_game(a);
  if (!pol.negative)
    throw PreconditionError("bang requires a negative game: \"initial moves all have the same polarity\" "
                            "(all minimal events negative) is violated");
  const std::size_t na = a.es->size();
  if (na * copies > kMaxEvents)
    throw BoundExceeded("bang would need " + std::to_string(na * copies) + " events");

  // Event structure: copies laid out consecutively, event (i, a) at i·|A| + a.
  std::vector<Event> events;
  std::vector<EventSet> preds, confl;
  for (std::size_t i = 0; i < copies; ++i)
    for (std::size_t e = 0; e < na; ++e) {
      const auto& ev = a.es->event(static_cast<EventIndex>(e));
      events.push_back({tagged_id(i, ev.id), ev.polarity, ev.label});
      preds.push_back(EventSet{a.es->predecessors(static_cast<EventIndex>(e)).bits() << (i * na)});
      confl.push_back(EventSet{a.es->conflicts(static_cast<EventIndex>(e)).bits() << (i * na)});
    }
  auto es = share(EventStructure(std::move(events), std::move(preds), std::move(confl)));

  const FiniteGroup& na_group = a.n_group();
  const FiniteGroup& pa_group = a.p_group();
  const auto perms = permutations_of(copies);
  const TupleCodec n_tuples{copies, na_group.order()};
  const TupleCodec p_tuples{copies, pa_group.order()};
  const std::size_t n_order = perms.size() * n_tuples.count();
  if (n_order > limits.max_group_order)
    throw BoundExceeded("bang: negative group would have " + std::to_string(n_order) + " elements (limit " +
                        std::to_string(limits.max_group_order) + ")");

  auto perm_index = [&](const std::vector<std::size_t>& pi) {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), pi) - perms.begin());
  };
  struct Wreath {
    std::size_t perm;
    std::vector<Elem> components;
  };
  auto decode_n = [&](Elem x) {
    return Wreath{x / n_tuples.count(), n_tuples.decode(x % n_tuples.count())};
  };
  auto encode_n = [&](std::size_t perm, const std::vector<Elem>& comps) {
    return static_cast<Elem>(perm * n_tuples.count() + n_tuples.encode(comps));
  };

  // Negative group: (π, α)(π', α') = (π ∘ π', (α_{π'(i)} α'_i)_i).
  std::vector<std::string> n_names(n_order);
  std::vector<Elem> n_mul(n_order * n_order), n_inv(n_order);
  std::vector<EventMap> n_act(n_order);
  for (Elem x = 0; x < n_order; ++x) {
    const Wreath w = decode_n(x);
    const auto& pi = perms[w.perm];
    std::string pi_name;
    for (std::size_t i = 0; i < copies; ++i) pi_name += (i ? " " : "") + std::to_string(pi[i]);
    n_names[x] = "(" + pi_name + ";" + tuple_name(na_group, w.components) + ")";
    EventMap m(es->size());
    for (std::size_t i = 0; i < copies; ++i)
      for (std::size_t e = 0; e < na; ++e)
        m[i * na + e] = static_cast<EventIndex>(pi[i] * na + a.n_action(w.components[i])[e]);
    n_act[x] = std::move(m);
    for (Elem y = 0; y < n_order; ++y) {
      const Wreath v = decode_n(y);
      const auto& sigma = perms[v.perm];
      std::vector<std::size_t> composed(copies);
      std::vector<Elem> comps(copies);
      for (std::size_t i = 0; i < copies; ++i) {
        composed[i] = pi[sigma[i]];
        comps[i] = na_group.mul(w.components[sigma[i]], v.components[i]);
      }
      n_mul[x * n_order + y] = encode_n(perm_index(composed), comps);
    }
  }
  const Elem n_unit = encode_n(0, std::vector<Elem>(copies, na_group.unit()));
  for (Elem x = 0; x < n_order; ++x)
    for (Elem y = 0; y < n_order; ++y)
      if (n_mul[x * n_order + y] == n_unit) {
        n_inv[x] = y;
        break;
      }
  auto n_group = share(FiniteGroup(std::move(n_names), std::move(n_mul), n_unit, std::move(n_inv)));

  // Positive group: P_A^n, componentwise.
  const std::size_t p_order = p_tuples.count();
  std::vector<std::string> p_names(p_order);
  std::vector<Elem> p_mul(p_order * p_order), p_inv(p_order);
  std::vector<EventMap> p_act(p_order);
  for (Elem x = 0; x < p_order; ++x) {
    const auto bx = p_tuples.decode(x);
    p_names[x] = "(" + tuple_name(pa_group, bx) + ")";
    EventMap m(es->size());
    for (std::size_t i = 0; i < copies; ++i)
      for (std::size_t e = 0; e < na; ++e)
        m[i * na + e] = static_cast<EventIndex>(i * na + a.p_action(bx[i])[e]);
    p_act[x] = std::move(m);
    std::vector<Elem> inv(copies);
    for (std::size_t i = 0; i < copies; ++i) inv[i] = pa_group.inv(bx[i]);
    p_inv[x] = static_cast<Elem>(p_tuples.encode(inv));
    for (Elem y = 0; y < p_order; ++y) {
      const auto by = p_tuples.decode(y);
      std::vector<Elem> prod(copies);
      for (std::size_t i = 0; i < copies; ++i) prod[i] = pa_group.mul(bx[i], by[i]);
      p_mul[x * p_order + y] = static_cast<Elem>(p_tuples.encode(prod));
    }
  }
  const Elem p_unit = static_cast<Elem>(p_tuples.encode(std::vector<Elem>(copies, pa_group.unit())));
  auto p_group = share(FiniteGroup(std::move(p_names), std::move(p_mul), p_unit, std::move(p_inv)));

  // λ((π, α), β) = ((β'_{π⁻¹(i)})_i, (π, α')) where (β'_i, α'_i) = λ_A(α_i, β_i).
  DistributiveLaw law{n_group, p_group, std::vector<std::pair<Elem, Elem>>(n_order * p_order)};
  for (Elem x = 0; x < n_order; ++x) {
    const Wreath w = decode_n(x);
    const auto& pi = perms[w.perm];
    std::vector<std::size_t> pi_inv(copies);
    for (std::size_t i = 0; i < copies; ++i) pi_inv[pi[i]] = i;
    for (Elem y = 0; y < p_order; ++y) {
      const auto beta = p_tuples.decode(y);
      std::vector<Elem> beta2(copies), alpha2(copies);
      for (std::size_t i = 0; i < copies; ++i) std::tie(beta2[i], alpha2[i]) = a.law(w.components[i], beta[i]);
      std::vector<Elem> moved(copies);
      for (std::size_t i = 0; i < copies; ++i) moved[i] = beta2[pi_inv[i]];
      law.table[x * p_order + y] = {static_cast<Elem>(p_tuples.encode(moved)), encode_n(w.perm, alpha2)};
    }
  }
  return Game{es, GroupAction{n_group, es, std::move(n_act)}, GroupAction{p_group, es, std::move(p_act)},
              std::move(law)};
}

GamePolarity polarity_of_game(const Game& game) {
  const EventSet minimal = game.es->minimal_events();
  return GamePolarity{minimal.subset_of(game.es->negative_events()),
                      minimal.subset_of(game.es->positive_events())};
}

}  // namespace esgames
