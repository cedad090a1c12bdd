#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "esgames/event_set.hpp"
#include "esgames/limits.hpp"
#include "esgames/report.hpp"

namespace esgames {

enum class Polarity : std::uint8_t { negative, positive };

inline Polarity flip(Polarity p) {
  return p == Polarity::negative ? Polarity::positive : Polarity::negative;
}
inline char sign(Polarity p) { return p == Polarity::negative ? '-' : '+'; }

struct Event {
  std::string id;
  Polarity polarity = Polarity::negative;
  /// Optional display name such as "-0" or "+2"; empty means use the id.
  std::string label;

  friend bool operator==(const Event&, const Event&) = default;
};

using EventPair = std::pair<EventIndex, EventIndex>;

namespace detail {
struct ConfigurationCache;
}

/// A finite event structure with polarity and binary conflict.
///
/// Causality is stored as the full strict order: predecessors(e) is the set
/// of events strictly below e. The constructors do not validate; use
/// validate_event_structure. Events are identified by their string id.
class EventStructure {
 public:
  EventStructure();
  EventStructure(std::vector<Event> events, std::vector<EventSet> predecessors,
                 std::vector<EventSet> conflicts);

  /// Builds from a cover (or any generating) relation, taking the transitive
  /// closure. Throws InputError on cycles, duplicate ids, unknown events or
  /// more than kMaxEvents events. Conflict pairs are symmetrised.
  static EventStructure from_covers(std::vector<Event> events, const std::vector<EventPair>& covers,
                                    const std::vector<EventPair>& conflict);

  std::size_t size() const { return events_.size(); }
  EventSet all() const { return EventSet::first(events_.size()); }
  const std::vector<Event>& events() const { return events_; }
  const Event& event(EventIndex e) const { return events_[e]; }
  const std::string& id(EventIndex e) const { return events_[e].id; }
  Polarity polarity(EventIndex e) const { return events_[e].polarity; }
  std::string display(EventIndex e) const;
  std::optional<EventIndex> find(std::string_view id) const;

  EventSet predecessors(EventIndex e) const { return predecessors_[e]; }
  EventSet conflicts(EventIndex e) const { return conflicts_[e]; }
  bool below(EventIndex a, EventIndex b) const { return predecessors_[b].contains(a); }
  bool leq(EventIndex a, EventIndex b) const { return a == b || below(a, b); }
  bool in_conflict(EventIndex a, EventIndex b) const { return conflicts_[a].contains(b); }

  EventSet negative_events() const { return negatives_; }
  EventSet positive_events() const { return all() - negatives_; }
  EventSet of_polarity(Polarity p) const {
    return p == Polarity::negative ? negative_events() : positive_events();
  }
  /// Events with no strict predecessor.
  EventSet minimal_events() const;
  EventSet down_closure(EventSet s) const;
  /// Immediate-predecessor pairs (a, b) with a < b and nothing in between.
  std::vector<EventPair> covers() const;
  std::vector<EventPair> conflict_pairs() const;

  /// A linear extension of the order (index order if the relation is cyclic).
  const std::vector<EventIndex>& topological_order() const { return topo_; }

  /// All configurations, sorted by bitmask; computed once and cached.
  /// Throws InputError if the structure is invalid and BoundExceeded beyond
  /// Limits::defaults().max_configurations.
  const std::vector<EventSet>& configurations() const;
  /// Position of x in configurations(), if x is a configuration.
  std::optional<std::size_t> configuration_index(EventSet x) const;

  bool is_configuration(EventSet x) const;

  friend bool operator==(const EventStructure& a, const EventStructure& b) {
    return a.events_ == b.events_ && a.predecessors_ == b.predecessors_ &&
           a.conflicts_ == b.conflicts_;
  }

 private:
  void init();

  std::vector<Event> events_;
  std::vector<EventSet> predecessors_;
  std::vector<EventSet> conflicts_;
  EventSet negatives_;
  std::vector<EventIndex> topo_;
  std::shared_ptr<detail::ConfigurationCache> cache_;
};

using EventStructurePtr = std::shared_ptr<const EventStructure>;

template <class T>
std::shared_ptr<const T> share(T value) {
  return std::make_shared<const T>(std::move(value));
}

/// "{a,b,c}" using event ids.
std::string format_set(const EventStructure& es, EventSet s);

Report validate_event_structure(const EventStructure& es);

/// Every down-closed, conflict-free subset, sorted by bitmask. Throws
/// InputError on invalid input and BoundExceeded past the limit.
std::vector<EventSet> enumerate_configurations(const EventStructure& es,
                                               const Limits& limits = Limits::defaults());

/// Calls fn for every configuration z with lower ⊆ z ⊆ upper, each exactly
/// once. fn returns false to stop early. Assumes a valid structure.
void for_each_configuration_between(const EventStructure& es, EventSet lower, EventSet upper,
                                    const std::function<bool(EventSet)>& fn);

/// Classification of x ⊆ y by the polarity of y \ x.
enum class ExtensionKind { empty, positive, negative, mixed, not_an_extension };

ExtensionKind extension_kind(const EventStructure& es, EventSet x, EventSet y);
/// x ⊆+ y (includes x == y).
bool is_positive_extension(ExtensionKind k);
/// x ⊆- y (includes x == y).
bool is_negative_extension(ExtensionKind k);
std::string_view to_string(ExtensionKind k);

/// Tagged disjoint union. Events of a become "0:<id>", events of b "1:<id>".
EventStructure parallel_es(const EventStructure& a, const EventStructure& b);
/// Same structure with every polarity flipped.
EventStructure dual_es(const EventStructure& es);

/// "<tag>:<id>", the naming used for components of parallel compositions.
std::string tagged_id(std::size_t tag, std::string_view id);

}  // namespace esgames
