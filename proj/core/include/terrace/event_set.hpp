#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <ranges>
#include <string>
#include <string_view>
#include <vector>

namespace terrace {

/// Largest event count for which dense power-set objects are materialized.
inline constexpr std::size_t kMaxEvents = 20;

/**
 * A subset X of an event set, encoded as an indicator word: bit i is set
 * exactly when the i-th event (input order, zero based) belongs to X.
 * This bit layout is the wire contract for every dense power-set map.
 */
struct SubsetIndex {
  std::uint32_t bits = 0;

  constexpr SubsetIndex() = default;
  constexpr explicit SubsetIndex(std::uint32_t b) : bits(b) {}

  static constexpr SubsetIndex empty() { return SubsetIndex{0}; }
  static constexpr SubsetIndex full(std::size_t n) {
    return SubsetIndex{static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1)};
  }
  static constexpr SubsetIndex singleton(std::size_t i) {
    return SubsetIndex{std::uint32_t{1} << i};
  }

  constexpr bool contains(std::size_t i) const { return (bits >> i) & 1U; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits)); }
  constexpr bool is_empty() const { return bits == 0; }

  /// Symmetric difference.
  friend constexpr SubsetIndex operator^(SubsetIndex a, SubsetIndex b) { return SubsetIndex{a.bits ^ b.bits}; }
  friend constexpr SubsetIndex operator|(SubsetIndex a, SubsetIndex b) { return SubsetIndex{a.bits | b.bits}; }
  friend constexpr SubsetIndex operator&(SubsetIndex a, SubsetIndex b) { return SubsetIndex{a.bits & b.bits}; }
  friend constexpr bool operator==(SubsetIndex, SubsetIndex) = default;
  friend constexpr auto operator<=>(SubsetIndex, SubsetIndex) = default;
};

constexpr std::size_t power_set_size(std::size_t n) { return std::size_t{1} << n; }

/// All 2^n subsets in ascending indicator-word order, the empty set first.
inline auto subset_iter(std::size_t n) {
  return std::views::iota(std::uint32_t{0}, static_cast<std::uint32_t>(power_set_size(n))) |
         std::views::transform([](std::uint32_t b) { return SubsetIndex{b}; });
}

/// Position i of the result is '1' iff event i+1 is in X: {} -> "000", {x2} -> "010".
std::string indicator_string(SubsetIndex x, std::size_t n);

/// Inverse of indicator_string; nullopt for wrong length or characters other than 0/1.
std::optional<SubsetIndex> parse_indicator_string(std::string_view s);

/// Ordered, duplicate-free list of event names. Order is the input order and is never re-sorted.
class EventSet {
 public:
  /// Throws EmptySet, DuplicateLabel or TooLarge.
  static EventSet make(std::vector<std::string> labels);

  /// x1, x2, ..., xN.
  static EventSet numbered(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> find(std::string_view label) const;

  SubsetIndex full() const { return SubsetIndex::full(size()); }
  bool contains(SubsetIndex x) const { return x.bits < power_set_size(size()); }

  /// Throws IndexOutOfRange unless x is a subset of this event set.
  void check(SubsetIndex x) const;

  std::vector<std::string> labels_of(SubsetIndex x) const;

  friend bool operator==(const EventSet&, const EventSet&) = default;

 private:
  explicit EventSet(std::vector<std::string> labels) : labels_(std::move(labels)) {}
  std::vector<std::string> labels_;
};

inline EventSet make_event_set(std::vector<std::string> labels) { return EventSet::make(std::move(labels)); }

}  // namespace terrace
