#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sdt/ground_set.hpp"

namespace sdt {

/// A 2-face of the 0-1 hypercube: the quadruple {X, X+u, X+v, X+uv}, encoded
/// as the base X (disjoint from the pair) and the unordered pair {u,v}.
/// Normalized so u < v; identity is invariant under swapping u and v.
struct TwoFace {
  Mask base;
  unsigned u;
  unsigned v;

  TwoFace(Mask base_, unsigned a, unsigned b)
      : base(base_), u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw std::invalid_argument("2-face pair must be two distinct elements");
    if (base & pair_mask()) throw std::invalid_argument("2-face base must be disjoint from its pair");
  }

  Mask pair_mask() const { return (Mask{1} << u) | (Mask{1} << v); }

  /// Corners in the fixed order X, X+u, X+v, X+uv.
  std::array<Mask, 4> corners() const {
    const Mask mu = Mask{1} << u;
    const Mask mv = Mask{1} << v;
    return {base, base | mu, base | mv, base | mu | mv};
  }

  // Canonical order: pair lexicographic, then base ascending.
  friend std::strong_ordering operator<=>(const TwoFace& a, const TwoFace& b) {
    if (auto c = a.u <=> b.u; c != 0) return c;
    if (auto c = a.v <=> b.v; c != 0) return c;
    return a.base <=> b.base;
  }
  friend bool operator==(const TwoFace& a, const TwoFace& b) = default;
};

inline void validate_face(const GroundSet& ground, const TwoFace& p) {
  if (p.v >= ground.size()) throw std::domain_error("2-face pair index out of range");
  ground.require_mask(p.base | p.pair_mask());
}

/// |P| = 2^{n-2} * C(n,2); zero when n < 2.
inline std::uint64_t face_count(unsigned n) {
  if (n < 2) return 0;
  return (std::uint64_t{1} << (n - 2)) * n * (n - 1) / 2;
}

inline std::uint64_t face_count(const GroundSet& ground) { return face_count(ground.size()); }

/// Walks bases of the pair {u,v} in ascending order. Fn: TwoFace -> bool
/// (false stops) or void. Returns false iff stopped early.
template <class Fn>
bool for_each_pair_face(const GroundSet& ground, unsigned u, unsigned v, Fn&& fn) {
  const Mask space = ground.full_mask() & ~((Mask{1} << u) | (Mask{1} << v));
  return for_each_submask(space, [&](Mask base) {
    if constexpr (std::is_same_v<decltype(fn(TwoFace(0, 0, 1))), bool>) {
      return fn(TwoFace(base, u, v));
    } else {
      fn(TwoFace(base, u, v));
    }
  });
}

/// Walks every 2-face exactly once in canonical order (pair lexicographic,
/// base ascending). Same callback convention as for_each_pair_face.
template <class Fn>
bool for_each_face(const GroundSet& ground, Fn&& fn) {
  const unsigned n = ground.size();
  for (unsigned u = 0; u + 1 < n; ++u) {
    for (unsigned v = u + 1; v < n; ++v) {
      if (!for_each_pair_face(ground, u, v, fn)) return false;
    }
  }
  return true;
}

inline std::vector<TwoFace> enumerate_faces(const GroundSet& ground) {
  std::vector<TwoFace> out;
  out.reserve(face_count(ground));
  for_each_face(ground, [&](const TwoFace& p) { out.push_back(p); });
  return out;
}

}  // namespace sdt
