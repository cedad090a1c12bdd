#include "esgames/tcg.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "esgames/errors.hpp"

namespace esgames {

bool ConfigBijection::is_identity() const {
  return std::all_of(graph.begin(), graph.end(), [](const EventPair& p) { return p.first == p.second; });
}

ConfigBijection ConfigBijection::restrict_to(EventSet x) const {
  ConfigBijection out{x, EventSet{}, {}};
  for (const auto& [a, b] : graph)
    if (x.contains(a)) {
      out.graph.emplace_back(a, b);
      out.target = out.target.with(b);
    }
  return out;
}

EventIndex ConfigBijection::operator()(EventIndex e) const {
  const auto it = std::lower_bound(graph.begin(), graph.end(), EventPair{e, 0});
  if (it == graph.end() || it->first != e) throw InputError("event outside the bijection's source");
  return it->second;
}

ConfigBijection identity_bijection(EventSet x) {
  ConfigBijection out{x, x, {}};
  for (EventIndex e : x) out.graph.emplace_back(e, e);
  return out;
}

ConfigBijection restriction_of(const EventMap& f, EventSet x) {
  ConfigBijection out{x, image(f, x), {}};
  for (EventIndex e : x) out.graph.emplace_back(e, f[e]);
  return out;
}

ConfigBijection inverse(const ConfigBijection& t) {
  ConfigBijection out{t.target, t.source, {}};
  for (const auto& [a, b] : t.graph) out.graph.emplace_back(b, a);
  std::sort(out.graph.begin(), out.graph.end());
  return out;
}

ConfigBijection compose(const ConfigBijection& second, const ConfigBijection& first) {
  if (first.target != second.source) throw InputError("bijections do not compose");
  ConfigBijection out{first.source, second.target, {}};
  for (const auto& [a, b] : first.graph) out.graph.emplace_back(a, second(b));
  return out;
}

ConfigBijection push_forward(const EventMap& f, const ConfigBijection& t) {
  ConfigBijection out{image(f, t.source), image(f, t.target), {}};
  for (const auto& [a, b] : t.graph) out.graph.emplace_back(f[a], f[b]);
  std::sort(out.graph.begin(), out.graph.end());
  return out;
}

std::string format_bijection(const EventStructure& es, const ConfigBijection& t) {
  std::string out = format_set(es, t.source) + " ~ " + format_set(es, t.target) + " [";
  for (std::size_t i = 0; i < t.graph.size(); ++i)
    out += (i ? ", " : "") + es.id(t.graph[i].first) + "->" + es.id(t.graph[i].second);
  return out + "]";
}

IsomorphismFamily::IsomorphismFamily(EventStructurePtr es, std::vector<ConfigBijection> members)
    : es_(std::move(es)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) by_source_[members_[i].source].push_back(i);
}

bool IsomorphismFamily::contains(const ConfigBijection& t) const {
  return std::binary_search(members_.begin(), members_.end(), t);
}

const std::vector<std::size_t>& IsomorphismFamily::from(EventSet source) const {
  static const std::vector<std::size_t> none;
  const auto it = by_source_.find(source);
  return it == by_source_.end() ? none : it->second;
}

Report validate_iso_family(const IsomorphismFamily& f) {
  Report r;
  const EventStructure& es = *f.es();
  auto show = [&](const ConfigBijection& t) { return format_bijection(es, t); };

  for (const auto& t : f.members()) {
    EventSet dom, cod;
    bool sorted = std::is_sorted(t.graph.begin(), t.graph.end());
    for (const auto& [a, b] : t.graph) {
      if (a >= es.size() || b >= es.size() || cod.contains(b)) {
        sorted = false;
        break;
      }
      dom = dom.with(a);
      cod = cod.with(b);
    }
    if (!sorted || dom != t.source || cod != t.target || dom.size() != t.graph.size() ||
        !es.is_configuration(t.source) || !es.is_configuration(t.target))
      r.add("well-formed", show(t) + " is not a bijection between configurations");
  }
  if (!r.ok()) return r;

  for (const auto& t : f.members())
    for (const auto& [a, b] : t.graph)
      if (es.polarity(a) != es.polarity(b)) {
        r.add("polarity", show(t) + " changes the polarity of " + es.id(a));
        break;
      }

  for (EventSet x : es.configurations())
    if (!f.contains(identity_bijection(x))) r.add("identities", "missing id" + format_set(es, x));

  for (const auto& t : f.members()) {
    if (!f.contains(inverse(t))) r.add("inverse", "missing the inverse of " + show(t));
    for (std::size_t j : f.from(t.target)) {
      const ConfigBijection c = compose(f.members()[j], t);
      if (!f.contains(c)) r.add("composition", "missing " + show(c));
    }
    for_each_configuration_between(es, EventSet{}, t.source, [&](EventSet x) {
      const ConfigBijection sub = t.restrict_to(x);
      if (!f.contains(sub)) r.add("restriction", "restriction violated: " + show(sub) + " missing, from " + show(t));
      return true;
    });
    for_each_configuration_between(es, t.source, es.all(), [&](EventSet x) {
      const auto& candidates = f.from(x);
      const bool extends = std::any_of(candidates.begin(), candidates.end(), [&](std::size_t j) {
        return f.members()[j].restrict_to(t.source) == t;
      });
      if (!extends) r.add("extension", "no member on " + format_set(es, x) + " extends " + show(t));
      return true;
    });
  }
  return r;
}

IsomorphismFamily family_from_action(const GroupAction& a) {
  std::vector<ConfigBijection> members;
  const auto& configs = a.target->configurations();
  members.reserve(a.act.size() * configs.size());
  for (const EventMap& g : a.act)
    for (EventSet x : configs) members.push_back(restriction_of(g, x));
  return IsomorphismFamily(a.target, std::move(members));
}

namespace {

bool contains_all(const IsomorphismFamily& big, const IsomorphismFamily& small) {
  return std::all_of(small.members().begin(), small.members().end(),
                     [&](const ConfigBijection& t) { return big.contains(t); });
}

/// Members θ' of `full` with some θ ⊆ θ' where the extension has the given
/// polarity; calls fn(θ, θ').
template <class Fn>
void for_each_polar_extension(const IsomorphismFamily& full, Polarity pol, Fn fn) {
  const EventStructure& es = *full.es();
  const EventSet other = es.of_polarity(flip(pol));
  for (const auto& big : full.members()) {
    for_each_configuration_between(es, big.source & other, big.source, [&](EventSet x) {
      if (x != big.source) fn(big.restrict_to(x), big);
      return true;
    });
  }
}

}  // namespace

Report validate_thin_game(const ThinConcurrentGame& g) {
  Report r;
  r.merge(validate_iso_family(g.full), "full/");
  r.merge(validate_iso_family(g.pos), "pos/");
  r.merge(validate_iso_family(g.neg), "neg/");
  if (!contains_all(g.full, g.pos)) r.add("inclusion", "the positive family is not contained in the full family");
  if (!contains_all(g.full, g.neg)) r.add("inclusion", "the negative family is not contained in the full family");
  for (const auto& t : g.pos.members())
    if (g.neg.contains(t) && !t.is_identity())
      r.add("intersection", format_bijection(*g.es, t) + " is both positive and negative");
  for_each_polar_extension(g.full, Polarity::positive, [&](const ConfigBijection& small, const ConfigBijection& big) {
    if (g.pos.contains(small) && !g.pos.contains(big))
      r.add("pos-extension", format_bijection(*g.es, big) + " extends a positive bijection positively but is not positive");
  });
  for_each_polar_extension(g.full, Polarity::negative, [&](const ConfigBijection& small, const ConfigBijection& big) {
    if (g.neg.contains(small) && !g.neg.contains(big))
      r.add("neg-extension", format_bijection(*g.es, big) + " extends a negative bijection negatively but is not negative");
  });
  return r;
}

ThinConcurrentGame tcg_from_game(const Game& a) {
  IsomorphismFamily neg = family_from_action(a.n_action);
  IsomorphismFamily pos = family_from_action(a.p_action);
  // Composites of restrictions are restrictions of composites, so the
  // closure is the restriction family of the group both actions generate.
  std::vector<EventMap> gens = a.n_action.act;
  gens.insert(gens.end(), a.p_action.act.begin(), a.p_action.act.end());
  IsomorphismFamily full = family_from_action(group_from_generators(a.es, gens).action);
  return ThinConcurrentGame{a.es, std::move(full), std::move(pos), std::move(neg)};
}

IsomorphismFamily family_from_uniform(const UniformStrategy& u) {
  std::vector<ConfigBijection> members;
  const auto& configs = u.strategy.internal->configurations();
  for (Elem a = 0; a < u.strategy.game->n_group().order(); ++a) {
    const auto f = phi_event_map(u, a);
    if (!f) throw InputError("phi_" + u.strategy.game->n_group().name(a) + " is not realised by an event map");
    for (EventSet x : configs) members.push_back(restriction_of(*f, x));
  }
  return IsomorphismFamily(u.strategy.internal, std::move(members));
}

Report check_thin(const SimStrategy& s) {
  Report r;
  const EventStructure& es = *s.strategy.internal;
  for (const auto& t : s.family.members()) {
    if (t.is_identity()) continue;
    for_each_configuration_between(es, t.source & es.negative_events(), t.source, [&](EventSet x) {
      if (x == t.source || !t.restrict_to(x).is_identity()) return true;
      r.add("thinness", format_bijection(es, t) + " is a non-identity positive extension of id" + format_set(es, x));
      return false;
    });
  }
  return r;
}

Report check_sim_receptivity(const SimStrategy& s) {
  Report r;
  const EventStructure& es = *s.strategy.internal;
  const EventStructure& game_es = *s.game->es;
  const IsomorphismFamily& full = s.game->full;
  const EventMap& p = s.strategy.proj;
  for (EventSet x : es.configurations()) {
    std::vector<EventSet> ext;
    for_each_configuration_between(es, x, x | es.negative_events(), [&](EventSet y) {
      ext.push_back(y);
      return true;
    });
    const EventSet px = image(p, x);
    for (EventSet y : ext)
      for (EventSet z : ext) {
        if (y.size() != z.size()) continue;
        const EventSet py = image(p, y);
        const EventSet pz = image(p, z);
        for (std::size_t ti : full.from(py)) {
          const ConfigBijection& theta = full.members()[ti];
          if (theta.target != pz || !theta.restrict_to(px).is_identity()) continue;
          bool found = false;
          for (EventSet y1 : ext) {
            if (image(p, y1) != py) continue;
            for (std::size_t ci : s.family.from(y1)) {
              const ConfigBijection& chi = s.family.members()[ci];
              if (chi.restrict_to(x).is_identity() && push_forward(p, chi) == theta) {
                found = true;
                break;
              }
            }
            if (found) break;
          }
          if (!found)
            r.add("sim-receptivity", "at " + format_set(es, x) + ": no member of the strategy's family over " +
                                         format_bijection(game_es, theta));
        }
      }
  }
  return r;
}

Report check_projection_symmetry(const SimStrategy& s) {
  Report r;
  for (const auto& chi : s.family.members()) {
    const ConfigBijection image_chi = push_forward(s.strategy.proj, chi);
    if (!s.game->full.contains(image_chi))
      r.add("symmetry-preservation", "projection of " + format_bijection(*s.strategy.internal, chi) +
                                         " is not in the game's family");
  }
  return r;
}

Report validate_sim_strategy(const SimStrategy& s) {
  Report r;
  const Report sr = validate_strategy(s.strategy);
  for (const auto& v : sr.violations()) r.add("strategy", v.axiom + ": " + v.message);
  r.merge(validate_iso_family(s.family), "family/");
  r.merge(check_projection_symmetry(s));
  r.merge(check_thin(s));
  r.merge(check_sim_receptivity(s));
  return r;
}

SimStrategy to_sim_strategy(const UniformStrategy& u) {
  if (auto w = locality_witness(u)) throw PreconditionError("uniformity not local: " + describe(u, *w));
  return SimStrategy{u.strategy, family_from_uniform(u), share(tcg_from_game(*u.strategy.game))};
}

Report check_weak_map_sim(const EventMap& f, const SimStrategy& s, const SimStrategy& t) {
  Report r;
  if (!(*s.strategy.game == *t.strategy.game)) {
    r.add("map", "strategies are on different games");
    return r;
  }
  const Report m = validate_map(*s.strategy.internal, *t.strategy.internal, f);
  for (const auto& v : m.violations()) r.add("map", v.axiom + ": " + v.message);
  if (!m.ok()) return r;
  for (const auto& chi : s.family.members()) {
    const ConfigBijection img = push_forward(f, chi);
    if (!t.family.contains(img))
      r.add("symmetry", "symmetry not preserved: " + format_bijection(*s.strategy.internal, chi) + " goes to " +
                            format_bijection(*t.strategy.internal, img));
  }
  const EventStructure& game_es = *s.strategy.game->es;
  for (EventSet x : s.strategy.internal->configurations()) {
    ConfigBijection theta{image(s.strategy.proj, x), EventSet{}, {}};
    for (EventIndex e : x) {
      const EventIndex target = t.strategy.proj[f[e]];
      theta.graph.emplace_back(s.strategy.proj[e], target);
      theta.target = theta.target.with(target);
    }
    std::sort(theta.graph.begin(), theta.graph.end());
    if (!s.game->pos.contains(theta))
      r.add("positive-reindexing", "at " + format_set(*s.strategy.internal, x) + ": " +
                                       format_bijection(game_es, theta) + " is not a positive symmetry");
  }
  return r;
}

}  // namespace esgames
