#include "terrace/event_set.hpp"

#include "terrace/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace terrace {

std::string indicator_string(SubsetIndex x, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i) {
    if (x.contains(i)) s[i] = '1';
  }
  return s;
}

std::optional<SubsetIndex> parse_indicator_string(std::string_view s) {
  if (s.empty() || s.size() > kMaxEvents) return std::nullopt;
  SubsetIndex x;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') {
      x.bits |= std::uint32_t{1} << i;
    } else if (s[i] != '0') {
      return std::nullopt;
    }
  }
  return x;
}

EventSet EventSet::make(std::vector<std::string> labels) {
  if (labels.empty()) throw Error(ErrorCode::EmptySet, "event set must contain at least one event");
  if (labels.size() > kMaxEvents) {
    throw Error(ErrorCode::TooLarge, "event set has " + std::to_string(labels.size()) +
                                         " events; at most " + std::to_string(kMaxEvents) + " are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw Error(ErrorCode::DuplicateLabel, "duplicate event label '" + l + "'");
  }
  return EventSet(std::move(labels));
}

EventSet EventSet::numbered(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  return make(std::move(labels));
}

std::optional<std::size_t> EventSet::find(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

void EventSet::check(SubsetIndex x) const {
  if (!contains(x)) {
    throw Error(ErrorCode::IndexOutOfRange, "subset index " + std::to_string(x.bits) +
                                                " is not a subset of a " + std::to_string(size()) + "-event set");
  }
}

std::vector<std::string> EventSet::labels_of(SubsetIndex x) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (x.contains(i)) out.push_back(labels_[i]);
  }
  return out;
}

}  // namespace terrace
