#include "esgames/uniform.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "esgames/errors.hpp"

namespace esgames {

UniformStrategy uniform_from_slices(const Strategy& s, const std::vector<EventMap>& maps,
                                    const std::vector<std::vector<Elem>>& responses) {
  const auto& configs = s.internal->configurations();
  const std::size_t n = s.game->n_group().order();
  if (maps.size() != n || responses.size() != n)
    throw InputError("need one event map and one response table per element of N");
  UniformStrategy u{s, std::vector<PhiEntry>(n * configs.size())};
  for (Elem a = 0; a < n; ++a) {
    if (responses[a].size() != configs.size()) throw InputError("response table has the wrong size");
    for (std::size_t xi = 0; xi < configs.size(); ++xi) {
      const auto yi = s.internal->configuration_index(image(maps[a], configs[xi]));
      if (!yi)
        throw InputError("image of " + format_set(*s.internal, configs[xi]) + " under phi_" +
                         s.game->n_group().name(a) + " is not a configuration");
      u.phi[a * configs.size() + xi] = {responses[a][xi], static_cast<std::uint32_t>(*yi)};
    }
  }
  return u;
}

std::optional<EventMap> phi_event_map(const UniformStrategy& u, Elem alpha) {
  const EventStructure& sigma = *u.strategy.internal;
  const auto& configs = sigma.configurations();
  EventMap f(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const auto e = static_cast<EventIndex>(i);
    const auto below = sigma.configuration_index(sigma.predecessors(e));
    const auto prime = sigma.configuration_index(sigma.predecessors(e).with(e));
    if (!below || !prime) return std::nullopt;
    const EventSet lo = configs[u.at(alpha, *below).image];
    const EventSet hi = configs[u.at(alpha, *prime).image];
    const EventSet diff = hi - lo;
    if (!lo.subset_of(hi) || diff.size() != 1) return std::nullopt;
    f[e] = *diff.begin();
  }
  return f;
}

WeakMap phi_slice(const UniformStrategy& u, Elem alpha) {
  auto f = phi_event_map(u, alpha);
  if (!f) throw InputError("phi_" + u.strategy.game->n_group().name(alpha) + " is not realised by an event map");
  std::vector<Elem> responses(u.configuration_count());
  for (std::size_t xi = 0; xi < responses.size(); ++xi) responses[xi] = u.at(alpha, xi).response;
  return WeakMap{act_on_strategy(alpha, u.strategy), u.strategy, std::move(*f), std::move(responses)};
}

Report validate_uniform(const UniformStrategy& u) {
  Report r;
  const Report sr = validate_strategy(u.strategy);
  for (const auto& v : sr.violations()) r.add("strategy", v.axiom + ": " + v.message);
  if (!sr.ok()) return r;

  const EventStructure& sigma = *u.strategy.internal;
  const auto& configs = sigma.configurations();
  const Game& game = *u.strategy.game;
  const FiniteGroup& n = game.n_group();
  const FiniteGroup& p = game.p_group();
  const std::size_t c = configs.size();
  if (u.phi.size() != n.order() * c) {
    r.add("totality", "phi has " + std::to_string(u.phi.size()) + " entries, expected |N| x |C| = " +
                          std::to_string(n.order() * c));
    return r;
  }
  for (std::size_t i = 0; i < u.phi.size(); ++i)
    if (u.phi[i].response >= p.order() || u.phi[i].image >= c)
      r.add("totality", "phi(" + n.name(static_cast<Elem>(i / c)) + ", " + format_set(sigma, configs[i % c]) +
                            ") is out of range");
  if (!r.ok()) return r;

  auto show = [&](Elem a, std::size_t xi) {
    return "(" + n.name(a) + ", " + format_set(sigma, configs[xi]) + ")";
  };

  for (Elem a = 0; a < n.order(); ++a) {
    const auto f = phi_event_map(u, a);
    if (!f) {
      r.add("event-map", "phi_" + n.name(a) + " is not realised by a single event map");
      continue;
    }
    bool agrees = true;
    for (std::size_t xi = 0; xi < c; ++xi)
      if (image(*f, configs[xi]) != configs[u.at(a, xi).image]) {
        r.add("event-map", "phi" + show(a, xi) + " disagrees with the event map of phi_" + n.name(a));
        agrees = false;
      }
    if (!agrees) continue;
    const Report wr = validate_weak_map(phi_slice(u, a));
    for (const auto& v : wr.violations()) r.add("weak-map", "phi_" + n.name(a) + ": " + v.message);
  }

  for (std::size_t xi = 0; xi < c; ++xi) {
    const PhiEntry& e = u.at(n.unit(), xi);
    if (e.response != p.unit() || e.image != xi)
      r.add("unit-law", "phi" + show(n.unit(), xi) + " = (" + p.name(e.response) + ", " +
                            format_set(sigma, configs[e.image]) + ")");
  }

  for (Elem a = 0; a < n.order(); ++a)
    for (Elem a2 = 0; a2 < n.order(); ++a2)
      for (std::size_t xi = 0; xi < c; ++xi) {
        const PhiEntry first = u.at(a, xi);
        const auto [gamma, beta] = game.law(a2, first.response);
        const PhiEntry second = u.at(beta, first.image);
        const PhiEntry expected{p.mul(gamma, second.response), second.image};
        const PhiEntry actual = u.at(n.mul(a2, a), xi);
        if (!(actual == expected))
          r.add("multiplication-law", "phi" + show(n.mul(a2, a), xi) + " = (" + p.name(actual.response) + ", " +
                                          format_set(sigma, configs[actual.image]) + ") but stepping through " +
                                          n.name(a) + " then " + n.name(a2) + " gives (" +
                                          p.name(expected.response) + ", " +
                                          format_set(sigma, configs[expected.image]) + ")");
      }
  return r;
}

Report validate_uniform_map(const WeakMap& w, const UniformStrategy& u, const UniformStrategy& v) {
  Report r;
  const Report wr = validate_weak_map(w);
  for (const auto& viol : wr.violations()) r.add("weak-map", viol.axiom + ": " + viol.message);
  if (!wr.ok()) return r;
  if (!(w.source == u.strategy) || !(w.target == v.strategy)) {
    r.add("weak-map", "weak map endpoints are not the given uniform strategies");
    return r;
  }
  const Game& game = *u.strategy.game;
  const FiniteGroup& n = game.n_group();
  const FiniteGroup& p = game.p_group();
  const auto& sconf = u.strategy.internal->configurations();
  const EventStructure& tau = *v.strategy.internal;
  for (Elem a = 0; a < n.order(); ++a)
    for (std::size_t xi = 0; xi < sconf.size(); ++xi) {
      const PhiEntry step = u.at(a, xi);
      const Elem via_u = p.mul(step.response, w.responses[step.image]);
      const EventSet via_u_conf = image(w.f, sconf[step.image]);

      const auto yi = tau.configuration_index(image(w.f, sconf[xi]));
      const auto [p2, a2] = game.law(a, w.responses[xi]);
      const PhiEntry back = v.at(a2, *yi);
      const Elem via_v = p.mul(p2, back.response);
      const EventSet via_v_conf = tau.configurations()[back.image];
      if (via_u != via_v || via_u_conf != via_v_conf)
        r.add("homomorphism", "square fails at (" + n.name(a) + ", " + format_set(*u.strategy.internal, sconf[xi]) +
                                  "): (" + p.name(via_u) + ", " + format_set(tau, via_u_conf) + ") vs (" +
                                  p.name(via_v) + ", " + format_set(tau, via_v_conf) + ")");
    }
  return r;
}

std::optional<LocalityWitness> locality_witness(const UniformStrategy& u) {
  const auto& configs = u.strategy.internal->configurations();
  const Game& game = *u.strategy.game;
  for (Elem a = 0; a < game.n_group().order(); ++a) {
    const EventMap& act = game.n_action(a);
    const auto f = phi_event_map(u, a);
    for (std::size_t xi = 0; xi < configs.size(); ++xi) {
      const EventSet x = configs[xi];
      const bool fixes_px = std::all_of(x.begin(), x.end(), [&](EventIndex e) {
        return act[u.strategy.proj[e]] == u.strategy.proj[e];
      });
      if (!fixes_px) continue;
      bool fixes_x = u.at(a, xi).image == xi;
      if (fixes_x && f)
        fixes_x = std::all_of(x.begin(), x.end(), [&](EventIndex e) { return (*f)[e] == e; });
      if (!fixes_x) return LocalityWitness{a, x};
    }
  }
  return std::nullopt;
}

std::string describe(const UniformStrategy& u, const LocalityWitness& w) {
  return "act(" + u.strategy.game->n_group().name(w.alpha) + ") fixes the projection of " +
         format_set(*u.strategy.internal, w.x) + " but phi_" + u.strategy.game->n_group().name(w.alpha) +
         " does not fix it";
}

Report validate_locality(const UniformStrategy& u) {
  Report r;
  if (auto w = locality_witness(u)) r.add("locality", describe(u, *w));
  return r;
}

std::vector<Elem> greedy_generators(const FiniteGroup& g) {
  std::vector<Elem> gens;
  std::vector<bool> in(g.order(), false);
  in[g.unit()] = true;
  auto close = [&] {
    std::deque<Elem> queue;
    for (Elem x = 0; x < g.order(); ++x)
      if (in[x]) queue.push_back(x);
    while (!queue.empty()) {
      const Elem x = queue.front();
      queue.pop_front();
      for (Elem s : gens) {
        const Elem y = g.mul(s, x);
        if (!in[y]) {
          in[y] = true;
          queue.push_back(y);
        }
      }
    }
  };
  for (Elem x = 0; x < g.order(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    close();
  }
  return gens;
}

namespace {

struct SliceCandidate {
  std::vector<std::uint32_t> images;         // per configuration
  std::vector<std::vector<Elem>> responses;  // response domain per configuration
  double count = 1;
};

class UniformSearch {
 public:
  UniformSearch(const Strategy& s, const Limits& limits) : s_(s), limits_(limits) {}

  SearchResult run() {
    const Game& game = *s_.game;
    const FiniteGroup& n = game.n_group();
    const FiniteGroup& p = game.p_group();
    const auto& configs = s_.internal->configurations();
    SearchResult result;
    SearchCertificate& cert = result.certificate;

    gens_ = greedy_generators(n);
    std::vector<bool> twisted(n.order(), false);
    for (Elem g : gens_)
      for (Elem b = 0; b < p.order(); ++b) twisted[game.law(g, b).second] = true;
    slot_.assign(n.order(), -1);
    for (Elem t = 0; t < n.order(); ++t)
      if (twisted[t]) {
        slot_[t] = static_cast<int>(twisted_.size());
        twisted_.push_back(t);
      }
    for (Elem g : gens_) cert.generators.push_back(n.name(g));
    for (Elem t : twisted_) cert.twisted.push_back(n.name(t));

    const auto automorphisms = enumerate_automorphisms(*s_.internal);
    std::vector<Elem> p_order{p.unit()};
    for (Elem b = 0; b < p.order(); ++b)
      if (b != p.unit()) p_order.push_back(b);

    candidates_.resize(twisted_.size());
    cert.search_size = 1;
    for (std::size_t ti = 0; ti < twisted_.size(); ++ti) {
      const EventMap& act = game.n_action(twisted_[ti]);
      double total = 0;
      for (const EventMap& f : automorphisms) {
        SliceCandidate cand;
        bool viable = true;
        for (std::size_t xi = 0; xi < configs.size() && viable; ++xi) {
          std::vector<Elem> domain;
          for (Elem b : p_order) {
            const EventMap& beta = game.p_action(b);
            bool ok = true;
            for (EventIndex e : configs[xi])
              if (act[s_.proj[e]] != beta[s_.proj[f[e]]]) {
                ok = false;
                break;
              }
            if (ok) domain.push_back(b);
          }
          if (domain.empty()) viable = false;
          cand.count *= static_cast<double>(domain.size());
          cand.images.push_back(
              static_cast<std::uint32_t>(*s_.internal->configuration_index(image(f, configs[xi]))));
          cand.responses.push_back(std::move(domain));
        }
        if (!viable) continue;
        total += cand.count;
        candidates_[ti].push_back(std::move(cand));
      }
      cert.event_map_candidates.push_back(candidates_[ti].size());
      cert.slice_candidates.push_back(total);
      cert.search_size *= total;
    }
    if (cert.search_size > static_cast<double>(limits_.max_search)) {
      std::string factors;
      for (std::size_t ti = 0; ti < twisted_.size(); ++ti)
        factors += (ti ? " x " : "") + std::to_string(static_cast<std::uint64_t>(cert.slice_candidates[ti]));
      throw BoundExceeded("uniform search space has " + std::to_string(cert.search_size) + " candidates (" +
                          factors + ") exceeding the bound " + std::to_string(limits_.max_search));
    }

    chosen_.assign(twisted_.size(), {});
    const bool found = choose(0, result);
    cert.examined = examined_;
    cert.exhaustive = !found;
    return result;
  }

 private:
  bool choose(std::size_t ti, SearchResult& result) {
    if (ti == twisted_.size()) return attempt(result);
    for (const SliceCandidate& cand : candidates_[ti]) {
      std::vector<std::size_t> digit(cand.responses.size(), 0);
      while (true) {
        std::vector<PhiEntry> row(cand.images.size());
        for (std::size_t xi = 0; xi < row.size(); ++xi) row[xi] = {cand.responses[xi][digit[xi]], cand.images[xi]};
        chosen_[ti] = std::move(row);
        if (choose(ti + 1, result)) return true;
        // Last configuration varies fastest.
        bool exhausted = true;
        for (std::size_t k = digit.size(); k-- > 0;) {
          if (++digit[k] < cand.responses[k].size()) {
            exhausted = false;
            break;
          }
          digit[k] = 0;
        }
        if (exhausted) break;
      }
    }
    return false;
  }

  bool attempt(SearchResult& result) {
    ++examined_;
    const Game& game = *s_.game;
    const FiniteGroup& n = game.n_group();
    const FiniteGroup& p = game.p_group();
    const std::size_t c = s_.internal->configurations().size();

    std::vector<std::vector<PhiEntry>> known(n.order());
    std::vector<bool> queued(n.order(), false);
    known[n.unit()].resize(c);
    for (std::size_t xi = 0; xi < c; ++xi) known[n.unit()][xi] = {p.unit(), static_cast<std::uint32_t>(xi)};
    for (std::size_t ti = 0; ti < twisted_.size(); ++ti) known[twisted_[ti]] = chosen_[ti];
    std::deque<Elem> queue{n.unit()};
    queued[n.unit()] = true;
    while (!queue.empty()) {
      const Elem a = queue.front();
      queue.pop_front();
      for (Elem g : gens_) {
        std::vector<PhiEntry> row(c);
        for (std::size_t xi = 0; xi < c; ++xi) {
          const PhiEntry first = known[a][xi];
          const auto [gamma, beta] = game.law(g, first.response);
          if (slot_[beta] < 0) throw InternalError("twisted generator set is not closed");
          const PhiEntry second = chosen_[static_cast<std::size_t>(slot_[beta])][first.image];
          row[xi] = {p.mul(gamma, second.response), second.image};
        }
        const Elem ga = n.mul(g, a);
        if (known[ga].empty()) {
          known[ga] = std::move(row);
        } else if (known[ga] != row) {
          return false;
        }
        if (!queued[ga]) {
          queued[ga] = true;
          queue.push_back(ga);
        }
      }
    }
    UniformStrategy u{s_, {}};
    u.phi.reserve(n.order() * c);
    for (Elem a = 0; a < n.order(); ++a) {
      if (known[a].empty()) throw InternalError("generators do not generate N");
      u.phi.insert(u.phi.end(), known[a].begin(), known[a].end());
    }
    if (!validate_uniform(u).ok()) return false;
    result.uniform = std::move(u);
    return true;
  }

  const Strategy& s_;
  const Limits& limits_;
  std::vector<Elem> gens_;
  std::vector<Elem> twisted_;
  std::vector<int> slot_;
  std::vector<std::vector<SliceCandidate>> candidates_;
  std::vector<std::vector<PhiEntry>> chosen_;
  std::uint64_t examined_ = 0;
};

}  // namespace

SearchResult search_uniform_structure(const Strategy& s, const Limits& limits) {
  const Report r = validate_strategy(s);
  if (!r.ok()) throw PreconditionError("search needs a valid strategy: " + r.str());
  return UniformSearch(s, limits).run();
}

}  // namespace esgames
