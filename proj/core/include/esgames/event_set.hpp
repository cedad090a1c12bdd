#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace esgames {

using EventIndex = std::uint32_t;

/// Event structures are desk-scale; a configuration fits in one machine word.
inline constexpr std::size_t kMaxEvents = 64;

/// A subset of the events of some event structure, stored as a bitmask.
class EventSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = EventIndex;
    using difference_type = std::ptrdiff_t;
    using pointer = const EventIndex*;
    using reference = EventIndex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr EventIndex operator*() const {
      return static_cast<EventIndex>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr EventSet() = default;
  constexpr explicit EventSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr EventSet singleton(EventIndex e) { return EventSet{std::uint64_t{1} << e}; }
  /// The set {0, ..., n-1}.
  static constexpr EventSet first(std::size_t n) {
    return EventSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(EventIndex e) const { return (bits_ >> e) & 1U; }
  constexpr bool subset_of(EventSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(EventSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr EventSet with(EventIndex e) const { return EventSet{bits_ | (std::uint64_t{1} << e)}; }
  constexpr EventSet without(EventIndex e) const { return EventSet{bits_ & ~(std::uint64_t{1} << e)}; }

  constexpr iterator begin() const { return iterator{bits_}; }
  constexpr iterator end() const { return iterator{}; }

  friend constexpr EventSet operator|(EventSet a, EventSet b) { return EventSet{a.bits_ | b.bits_}; }
  friend constexpr EventSet operator&(EventSet a, EventSet b) { return EventSet{a.bits_ & b.bits_}; }
  /// Set difference.
  friend constexpr EventSet operator-(EventSet a, EventSet b) { return EventSet{a.bits_ & ~b.bits_}; }
  constexpr EventSet& operator|=(EventSet o) { bits_ |= o.bits_; return *this; }
  constexpr EventSet& operator&=(EventSet o) { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(EventSet, EventSet) = default;
  friend constexpr auto operator<=>(EventSet a, EventSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

struct EventSetHash {
  std::size_t operator()(EventSet s) const noexcept {
    std::uint64_t x = s.bits() * 0x9E3779B97F4A7C15ULL;
    return static_cast<std::size_t>(x ^ (x >> 29));
  }
};

}  // namespace esgames
