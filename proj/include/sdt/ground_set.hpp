#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace sdt {

/// Subsets of the ground set are bitmasks: bit i set <=> element i present.
using Mask = std::uint32_t;

inline constexpr unsigned kDefaultMaxGroundSize = 20;
inline constexpr unsigned kHardMaxGroundSize = 30;

/// The finite set V. Element i of the ordered name list corresponds to bit i
/// of every mask. Sizes above 20 need allow_large (every structural scan is
/// Theta(2^n), the guard is there to stop accidental blowups).
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> names, bool allow_large = false)
      : names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("ground set must have at least one element");
    const unsigned limit = allow_large ? kHardMaxGroundSize : kDefaultMaxGroundSize;
    if (names_.size() > limit) {
      throw std::invalid_argument("ground set size " + std::to_string(names_.size()) +
                                  " exceeds limit " + std::to_string(limit));
    }
    for (unsigned i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw std::invalid_argument("empty element name");
      if (!index_.emplace(names_[i], i).second) {
        throw std::invalid_argument("duplicate element name: '" + names_[i] + "'");
      }
    }
  }

  /// Ground set with 1-based labels {"1", "2", ..., "n"}.
  static GroundSet numbered(unsigned n, bool allow_large = false) {
    std::vector<std::string> names;
    names.reserve(n);
    for (unsigned i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    return GroundSet(std::move(names), allow_large);
  }

  unsigned size() const { return static_cast<unsigned>(names_.size()); }
  Mask full_mask() const { return static_cast<Mask>((std::uint64_t{1} << size()) - 1); }
  std::uint64_t subset_count() const { return std::uint64_t{1} << size(); }

  const std::string& name(unsigned i) const {
    if (i >= size()) throw std::out_of_range("element index out of range");
    return names_[i];
  }
  const std::vector<std::string>& names() const { return names_; }

  unsigned index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
      throw std::invalid_argument("unknown element name: '" + std::string(name) + "'");
    }
    return it->second;
  }

  bool contains_mask(Mask m) const { return (m & ~full_mask()) == 0; }

  /// Comma-joined element names; "" denotes the empty set.
  Mask parse_subset(std::string_view csv) const {
    Mask m = 0;
    if (csv.empty()) return m;
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = csv.find(',', pos);
      std::string_view item = comma == std::string_view::npos ? csv.substr(pos)
                                                              : csv.substr(pos, comma - pos);
      unsigned idx = index_of(item);
      if (m & (Mask{1} << idx)) {
        throw std::invalid_argument("duplicate element in subset: '" + std::string(item) + "'");
      }
      m |= Mask{1} << idx;
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return m;
  }

  std::vector<std::string> names_of(Mask m) const {
    require_mask(m);
    std::vector<std::string> out;
    for (unsigned i = 0; i < size(); ++i) {
      if (m & (Mask{1} << i)) out.push_back(names_[i]);
    }
    return out;
  }

  std::string format_subset(Mask m) const {
    require_mask(m);
    std::string out;
    for (unsigned i = 0; i < size(); ++i) {
      if (m & (Mask{1} << i)) {
        if (!out.empty()) out += ',';
        out += names_[i];
      }
    }
    return out;
  }

  void require_mask(Mask m) const {
    if (!contains_mask(m)) throw std::domain_error("bitmask out of range for ground set");
  }

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, unsigned, std::less<>> index_;
};

/// Ascending enumeration of all submasks of `space` (including 0 and `space`).
/// Fn is called with each submask; if Fn returns bool, false stops the walk.
/// Returns false iff stopped early.
template <class Fn>
bool for_each_submask(Mask space, Fn&& fn) {
  Mask s = 0;
  while (true) {
    if constexpr (std::is_same_v<decltype(fn(Mask{})), bool>) {
      if (!fn(s)) return false;
    } else {
      fn(s);
    }
    if (s == space) return true;
    s = (s - space) & space;  // next submask in increasing numeric order
  }
}

}  // namespace sdt
