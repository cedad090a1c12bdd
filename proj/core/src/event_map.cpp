#include "esgames/event_map.hpp"

#include <algorithm>
#include <numeric>

#include "esgames/errors.hpp"

namespace esgames {

EventMap identity_map(std::size_t n) {
  EventMap m(n);
  std::iota(m.begin(), m.end(), EventIndex{0});
  return m;
}

EventMap compose(const EventMap& outer, const EventMap& inner) {
  EventMap out(inner.size());
  for (std::size_t e = 0; e < inner.size(); ++e) out[e] = outer[inner[e]];
  return out;
}

EventMap inverse(const EventMap& permutation) {
  EventMap out(permutation.size());
  for (std::size_t e = 0; e < permutation.size(); ++e) out[permutation[e]] = static_cast<EventIndex>(e);
  return out;
}

EventSet image(const EventMap& f, EventSet x) {
  EventSet out;
  for (EventIndex e : x) out = out.with(f[e]);
  return out;
}

EventSet preimage(const EventMap& f, EventSet target, std::size_t domain_size) {
  EventSet out;
  for (std::size_t e = 0; e < domain_size; ++e)
    if (target.contains(f[e])) out = out.with(static_cast<EventIndex>(e));
  return out;
}

EsMap identity_es_map(const EventStructurePtr& es) { return EsMap{es, es, identity_map(es->size())}; }

EsMap compose(const EsMap& g, const EsMap& f) {
  if (!(*f.target == *g.source)) throw InputError("cannot compose maps: endpoints differ");
  return EsMap{f.source, g.target, compose(g.map, f.map)};
}

Report validate_map(const EventStructure& source, const EventStructure& target, const EventMap& f) {
  Report r;
  if (f.size() != source.size()) {
    r.add("totality", "map has " + std::to_string(f.size()) + " entries for " +
                          std::to_string(source.size()) + " events");
    return r;
  }
  bool in_range = true;
  for (std::size_t e = 0; e < f.size(); ++e) {
    if (f[e] >= target.size()) {
      r.add("totality", "image of '" + source.id(static_cast<EventIndex>(e)) + "' is out of range");
      in_range = false;
    }
  }
  if (!in_range) return r;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto e = static_cast<EventIndex>(i);
    if (source.polarity(e) != target.polarity(f[e]))
      r.add("polarity", "polarity violated: " + source.id(e) + " -> " + target.id(f[e]));
  }
  for (EventSet x : source.configurations()) {
    const EventSet fx = image(f, x);
    if (fx.size() != x.size())
      r.add("local-injectivity", "local injectivity violated on configuration " + format_set(source, x));
    else if (!target.is_configuration(fx))
      r.add("configuration", "image of " + format_set(source, x) + " is " + format_set(target, fx) +
                                 ", not a configuration");
  }
  return r;
}

Report validate_map(const EsMap& f) { return validate_map(*f.source, *f.target, f.map); }

std::vector<EventPair> restrict_map(const EsMap& f, EventSet x) {
  if (!f.source->is_configuration(x))
    throw InputError(format_set(*f.source, x) + " is not a configuration");
  std::vector<EventPair> graph;
  for (EventIndex e : x) graph.emplace_back(e, f.map.at(e));
  if (image(f.map, x).size() != x.size())
    throw InputError("map is not injective on " + format_set(*f.source, x));
  return graph;
}

bool is_automorphism(const EventStructure& es, const EventMap& f) {
  const std::size_t n = es.size();
  if (f.size() != n) return false;
  EventSet seen;
  for (EventIndex t : f) {
    if (t >= n || seen.contains(t)) return false;
    seen = seen.with(t);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = static_cast<EventIndex>(i);
    if (es.polarity(e) != es.polarity(f[e])) return false;
    if (image(f, es.predecessors(e)) != es.predecessors(f[e])) return false;
    if (image(f, es.conflicts(e)) != es.conflicts(f[e])) return false;
  }
  return true;
}

namespace {

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const EventStructure& es)
      : es_(es), order_(es.topological_order()), map_(es.size(), 0) {}

  std::vector<EventMap> run() {
    extend(0, EventSet{});
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  bool compatible(std::size_t k, EventIndex t) const {
    const EventIndex e = order_[k];
    if (es_.polarity(e) != es_.polarity(t)) return false;
    if (es_.predecessors(e).size() != es_.predecessors(t).size()) return false;
    if (es_.conflicts(e).size() != es_.conflicts(t).size()) return false;
    for (std::size_t j = 0; j < k; ++j) {
      const EventIndex d = order_[j];
      const EventIndex fd = map_[d];
      if (es_.below(d, e) != es_.below(fd, t)) return false;
      if (es_.below(e, d) != es_.below(t, fd)) return false;
      if (es_.in_conflict(d, e) != es_.in_conflict(fd, t)) return false;
    }
    return true;
  }

  void extend(std::size_t k, EventSet used) {
    if (k == order_.size()) {
      found_.push_back(map_);
      return;
    }
    for (std::size_t i = 0; i < es_.size(); ++i) {
      const auto t = static_cast<EventIndex>(i);
      if (used.contains(t) || !compatible(k, t)) continue;
      map_[order_[k]] = t;
      extend(k + 1, used.with(t));
    }
  }

  const EventStructure& es_;
  const std::vector<EventIndex>& order_;
  EventMap map_;
  std::vector<EventMap> found_;
};

}  // namespace

std::vector<EventMap> enumerate_automorphisms(const EventStructure& es) {
  return AutomorphismSearch(es).run();
}

}  // namespace esgames
