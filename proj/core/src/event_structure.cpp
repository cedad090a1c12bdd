#include "esgames/event_structure.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <sstream>
#include <unordered_set>

#include "esgames/errors.hpp"

namespace esgames {

namespace detail {
struct ConfigurationCache {
  std::once_flag once;
  std::vector<EventSet> configurations;
  std::exception_ptr error;
};
}  // namespace detail

EventStructure::EventStructure() { init(); }

EventStructure::EventStructure(std::vector<Event> events, std::vector<EventSet> predecessors,
                               std::vector<EventSet> conflicts)
    : events_(std::move(events)),
      predecessors_(std::move(predecessors)),
      conflicts_(std::move(conflicts)) {
  if (events_.size() > kMaxEvents)
    throw InputError("event structure has " + std::to_string(events_.size()) +
                     " events; at most " + std::to_string(kMaxEvents) + " are supported");
  if (predecessors_.size() != events_.size() || conflicts_.size() != events_.size())
    throw InputError("relation tables do not match the number of events");
  const EventSet universe = all();
  for (std::size_t e = 0; e < events_.size(); ++e) {
    if (!predecessors_[e].subset_of(universe) || !conflicts_[e].subset_of(universe))
      throw InputError("relation refers to an event out of range");
  }
  init();
}

void EventStructure::init() {
  negatives_ = EventSet{};
  for (std::size_t e = 0; e < events_.size(); ++e)
    if (events_[e].polarity == Polarity::negative) negatives_ = negatives_.with(static_cast<EventIndex>(e));

  // Kahn's algorithm on the strict order; fall back to index order on cycles.
  topo_.clear();
  EventSet placed;
  bool progress = true;
  while (topo_.size() < events_.size() && progress) {
    progress = false;
    for (std::size_t e = 0; e < events_.size(); ++e) {
      const auto ev = static_cast<EventIndex>(e);
      if (!placed.contains(ev) && (predecessors_[e] - placed).empty()) {
        topo_.push_back(ev);
        placed = placed.with(ev);
        progress = true;
      }
    }
  }
  if (topo_.size() < events_.size()) {
    topo_.clear();
    for (std::size_t e = 0; e < events_.size(); ++e) topo_.push_back(static_cast<EventIndex>(e));
  }
  cache_ = std::make_shared<detail::ConfigurationCache>();
}

EventStructure EventStructure::from_covers(std::vector<Event> events, const std::vector<EventPair>& covers,
                                           const std::vector<EventPair>& conflict) {
  const std::size_t n = events.size();
  if (n > kMaxEvents)
    throw InputError("event structure has " + std::to_string(n) + " events; at most " +
                     std::to_string(kMaxEvents) + " are supported");
  std::unordered_set<std::string> seen;
  for (const auto& ev : events)
    if (!seen.insert(ev.id).second) throw InputError("duplicate event id '" + ev.id + "'");

  std::vector<EventSet> preds(n), confl(n);
  for (auto [a, b] : covers) {
    if (a >= n || b >= n) throw InputError("cover refers to an unknown event");
    if (a == b) throw InputError("causality has a cycle through '" + events[a].id + "'");
    preds[b] = preds[b].with(a);
  }
  for (auto [a, b] : conflict) {
    if (a >= n || b >= n) throw InputError("conflict refers to an unknown event");
    confl[a] = confl[a].with(b);
    confl[b] = confl[b].with(a);
  }
  // Transitive closure by fixpoint over predecessor sets.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t b = 0; b < n; ++b) {
      EventSet closed = preds[b];
      for (EventIndex a : preds[b]) closed |= preds[a];
      if (closed != preds[b]) {
        preds[b] = closed;
        changed = true;
      }
    }
  }
  for (std::size_t e = 0; e < n; ++e)
    if (preds[e].contains(static_cast<EventIndex>(e)))
      throw InputError("causality has a cycle through '" + events[e].id + "'");
  return EventStructure(std::move(events), std::move(preds), std::move(confl));
}

std::string EventStructure::display(EventIndex e) const {
  return events_[e].label.empty() ? events_[e].id : events_[e].label;
}

std::optional<EventIndex> EventStructure::find(std::string_view id) const {
  for (std::size_t e = 0; e < events_.size(); ++e)
    if (events_[e].id == id) return static_cast<EventIndex>(e);
  return std::nullopt;
}

EventSet EventStructure::minimal_events() const {
  EventSet out;
  for (std::size_t e = 0; e < events_.size(); ++e)
    if (predecessors_[e].empty()) out = out.with(static_cast<EventIndex>(e));
  return out;
}

EventSet EventStructure::down_closure(EventSet s) const {
  EventSet out = s;
  for (EventIndex e : s) out |= predecessors_[e];
  return out;
}

std::vector<EventPair> EventStructure::covers() const {
  std::vector<EventPair> out;
  for (std::size_t b = 0; b < events_.size(); ++b) {
    for (EventIndex a : predecessors_[b]) {
      bool immediate = true;
      for (EventIndex c : predecessors_[b])
        if (c != a && predecessors_[c].contains(a)) {
          immediate = false;
          break;
        }
      if (immediate) out.emplace_back(a, static_cast<EventIndex>(b));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EventPair> EventStructure::conflict_pairs() const {
  std::vector<EventPair> out;
  for (std::size_t a = 0; a < events_.size(); ++a)
    for (EventIndex b : conflicts_[a])
      if (a < b) out.emplace_back(static_cast<EventIndex>(a), b);
  return out;
}

bool EventStructure::is_configuration(EventSet x) const {
  if (!x.subset_of(all())) return false;
  for (EventIndex e : x) {
    if (!predecessors_[e].subset_of(x)) return false;
    if (conflicts_[e].intersects(x)) return false;
  }
  return true;
}

const std::vector<EventSet>& EventStructure::configurations() const {
  auto& cache = *cache_;
  std::call_once(cache.once, [&] {
    try {
      cache.configurations = enumerate_configurations(*this);
    } catch (...) {
      cache.error = std::current_exception();
    }
  });
  if (cache.error) std::rethrow_exception(cache.error);
  return cache.configurations;
}

std::optional<std::size_t> EventStructure::configuration_index(EventSet x) const {
  const auto& cs = configurations();
  auto it = std::lower_bound(cs.begin(), cs.end(), x);
  if (it == cs.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - cs.begin());
}

std::string format_set(const EventStructure& es, EventSet s) {
  std::string out = "{";
  bool first = true;
  for (EventIndex e : s) {
    if (!first) out += ',';
    out += es.id(e);
    first = false;
  }
  return out + "}";
}

Report validate_event_structure(const EventStructure& es) {
  Report r;
  const std::size_t n = es.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = static_cast<EventIndex>(i);
    if (es.predecessors(e).contains(e)) r.add("order", "'" + es.id(e) + "' is strictly below itself");
    for (EventIndex a : es.predecessors(e)) {
      const EventSet missing = es.predecessors(a) - es.predecessors(e);
      for (EventIndex z : missing)
        r.add("order", "transitivity fails: " + es.id(z) + " < " + es.id(a) + " < " + es.id(e) +
                           " but not " + es.id(z) + " < " + es.id(e));
    }
    if (es.conflicts(e).contains(e)) r.add("conflict", "'" + es.id(e) + "' is in conflict with itself");
    for (EventIndex b : es.conflicts(e))
      if (!es.conflicts(b).contains(e))
        r.add("conflict", "conflict is not symmetric at (" + es.id(e) + "," + es.id(b) + ")");
  }
  // Heredity: a ≤ a' and a # b imply a' # b.
  for (std::size_t i = 0; i < n; ++i) {
    const auto a2 = static_cast<EventIndex>(i);
    for (EventIndex a : es.predecessors(a2))
      for (EventIndex b : es.conflicts(a))
        if (!es.in_conflict(a2, b))
          r.add("heredity", "heredity violated at (" + es.id(a2) + "," + es.id(b) + "): " + es.id(a) +
                                " <= " + es.id(a2) + " and " + es.id(a) + " # " + es.id(b));
  }
  return r;
}

namespace {

class BetweenWalker {
 public:
  BetweenWalker(const EventStructure& es, EventSet lower, EventSet upper,
                const std::function<bool(EventSet)>& fn)
      : es_(es), lower_(lower), fn_(fn) {
    for (EventIndex e : es.topological_order())
      if (upper.contains(e)) order_.push_back(e);
  }

  void run() { walk(0, EventSet{}); }

 private:
  void walk(std::size_t k, EventSet current) {
    if (stop_) return;
    if (k == order_.size()) {
      if (!fn_(current)) stop_ = true;
      return;
    }
    const EventIndex e = order_[k];
    const bool feasible =
        es_.predecessors(e).subset_of(current) && !es_.conflicts(e).intersects(current);
    if (lower_.contains(e)) {
      if (feasible) walk(k + 1, current.with(e));
      return;
    }
    walk(k + 1, current);
    if (feasible) walk(k + 1, current.with(e));
  }

  const EventStructure& es_;
  EventSet lower_;
  const std::function<bool(EventSet)>& fn_;
  std::vector<EventIndex> order_;
  bool stop_ = false;
};

}  // namespace

void for_each_configuration_between(const EventStructure& es, EventSet lower, EventSet upper,
                                    const std::function<bool(EventSet)>& fn) {
  if (!lower.subset_of(upper)) return;
  BetweenWalker(es, lower, upper, fn).run();
}

std::vector<EventSet> enumerate_configurations(const EventStructure& es, const Limits& limits) {
  const Report report = validate_event_structure(es);
  if (!report.ok()) throw InputError("invalid event structure: " + report.str());
  std::vector<EventSet> out;
  bool exceeded = false;
  for_each_configuration_between(es, EventSet{}, es.all(), [&](EventSet x) {
    if (out.size() >= limits.max_configurations) {
      exceeded = true;
      return false;
    }
    out.push_back(x);
    return true;
  });
  if (exceeded)
    throw BoundExceeded("more than " + std::to_string(limits.max_configurations) +
                        " configurations (raise ESGAMES_MAX_CONFIGS to allow more)");
  std::sort(out.begin(), out.end());
  return out;
}

ExtensionKind extension_kind(const EventStructure& es, EventSet x, EventSet y) {
  if (!x.subset_of(y)) return ExtensionKind::not_an_extension;
  const EventSet delta = y - x;
  if (delta.empty()) return ExtensionKind::empty;
  if (delta.subset_of(es.positive_events())) return ExtensionKind::positive;
  if (delta.subset_of(es.negative_events())) return ExtensionKind::negative;
  return ExtensionKind::mixed;
}

bool is_positive_extension(ExtensionKind k) {
  return k == ExtensionKind::empty || k == ExtensionKind::positive;
}

bool is_negative_extension(ExtensionKind k) {
  return k == ExtensionKind::empty || k == ExtensionKind::negative;
}

std::string_view to_string(ExtensionKind k) {
  switch (k) {
    case ExtensionKind::empty: return "empty extension";
    case ExtensionKind::positive: return "positive";
    case ExtensionKind::negative: return "negative";
    case ExtensionKind::mixed: return "mixed";
    case ExtensionKind::not_an_extension: return "not-an-extension";
  }
  return "?";
}

std::string tagged_id(std::size_t tag, std::string_view id) {
  return std::to_string(tag) + ":" + std::string(id);
}

EventStructure parallel_es(const EventStructure& a, const EventStructure& b) {
  const std::size_t na = a.size();
  if (na + b.size() > kMaxEvents)
    throw InputError("parallel composition would exceed " + std::to_string(kMaxEvents) + " events");
  std::vector<Event> events;
  std::vector<EventSet> preds, confl;
  for (std::size_t e = 0; e < na; ++e) {
    const auto& ev = a.event(static_cast<EventIndex>(e));
    events.push_back({tagged_id(0, ev.id), ev.polarity, ev.label});
    preds.push_back(a.predecessors(static_cast<EventIndex>(e)));
    confl.push_back(a.conflicts(static_cast<EventIndex>(e)));
  }
  for (std::size_t e = 0; e < b.size(); ++e) {
    const auto& ev = b.event(static_cast<EventIndex>(e));
    events.push_back({tagged_id(1, ev.id), ev.polarity, ev.label});
    preds.push_back(EventSet{b.predecessors(static_cast<EventIndex>(e)).bits() << na});
    confl.push_back(EventSet{b.conflicts(static_cast<EventIndex>(e)).bits() << na});
  }
  return EventStructure(std::move(events), std::move(preds), std::move(confl));
}

EventStructure dual_es(const EventStructure& es) {
  std::vector<Event> events = es.events();
  for (auto& ev : events) ev.polarity = flip(ev.polarity);
  std::vector<EventSet> preds, confl;
  for (std::size_t e = 0; e < es.size(); ++e) {
    preds.push_back(es.predecessors(static_cast<EventIndex>(e)));
    confl.push_back(es.conflicts(static_cast<EventIndex>(e)));
  }
  return EventStructure(std::move(events), std::move(preds), std::move(confl));
}

}  // namespace esgames
