#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sdt/classify.hpp"
#include "sdt/set_function.hpp"

namespace sdt {

/// Row of the face-indexed Boolean matrix M_f: the pair indicator when the
/// face slack is nonzero, the zero row otherwise.
struct BooleanRow {
  TwoFace face;
  std::optional<std::pair<unsigned, unsigned>> support;
};

template <SetFunctionOracle F>
BooleanRow boolean_row(const F& f, const TwoFace& p) {
  validate_face(f.ground(), p);
  BooleanRow row{p, std::nullopt};
  if (phi_face(f, p) != 0) row.support = std::make_pair(p.u, p.v);
  return row;
}

/// The inequality graph G_f: edge {u,v} iff some 2-face on that pair has
/// nonzero slack. Components are NOT cliques in general, so nothing here
/// assumes edge transitivity.
struct InequalityGraph {
  GroundSet ground;
  std::vector<std::pair<unsigned, unsigned>> edges;   // u < v, pair-lex order
  std::vector<std::vector<unsigned>> components;      // by smallest member; members ascending
  std::vector<unsigned> component_of;                 // vertex -> component index

  std::vector<Mask> component_masks() const {
    std::vector<Mask> masks(components.size(), 0);
    for (unsigned v = 0; v < component_of.size(); ++v) {
      masks[component_of[v]] |= Mask{1} << v;
    }
    return masks;
  }
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(unsigned n) : parent_(n) {
    for (unsigned i = 0; i < n; ++i) parent_[i] = i;
  }
  unsigned find(unsigned x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(unsigned a, unsigned b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep the smallest index as root
    parent_[b] = a;
  }

 private:
  std::vector<unsigned> parent_;
};

inline std::vector<std::vector<unsigned>> components_from(UnionFind& uf, unsigned n,
                                                          std::vector<unsigned>& component_of) {
  component_of.assign(n, 0);
  std::vector<std::vector<unsigned>> components;
  std::vector<int> slot(n, -1);
  for (unsigned v = 0; v < n; ++v) {
    unsigned root = uf.find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(components.size());
      components.emplace_back();
    }
    component_of[v] = static_cast<unsigned>(slot[root]);
    components[static_cast<unsigned>(slot[root])].push_back(v);
  }
  return components;
}

}  // namespace detail

/// Builds G_f. Per pair {u,v} the base scan exits at the first nonzero face;
/// the worst case still touches almost every face, which is inherent to the
/// construction.
template <SetFunctionOracle F>
InequalityGraph inequality_graph(const F& f) {
  const GroundSet& ground = f.ground();
  const unsigned n = ground.size();
  std::vector<std::pair<unsigned, unsigned>> edges;
  detail::UnionFind uf(n);
  for (unsigned u = 0; u + 1 < n; ++u) {
    for (unsigned v = u + 1; v < n; ++v) {
      bool complete = for_each_pair_face(ground, u, v, [&](const TwoFace& p) {
        return phi_face(f, p) == 0;  // keep scanning while the slack is zero
      });
      if (!complete) {
        edges.emplace_back(u, v);
        uf.unite(u, v);
      }
    }
  }
  std::vector<unsigned> component_of;
  auto components = detail::components_from(uf, n, component_of);
  return InequalityGraph{ground, std::move(edges), std::move(components),
                         std::move(component_of)};
}

inline constexpr unsigned kMaxEnumerableComponents = 24;
inline constexpr std::uint64_t kMaxEnumeratedSolutions = std::uint64_t{1} << 20;

/// The family U(f) of all unions of connected components of G_f — exactly
/// the sets S for which f o sigma_S stays submodular (for submodular f).
/// Streamed in Gray-code order over component subsets, never materialized
/// wholesale: the component count can equal n.
class CanonicalFamily {
 public:
  explicit CanonicalFamily(const InequalityGraph& graph)
      : component_masks_(graph.component_masks()), full_(graph.ground.full_mask()) {}

  unsigned component_count() const { return static_cast<unsigned>(component_masks_.size()); }
  std::uint64_t size() const { return std::uint64_t{1} << component_count(); }
  bool enumerable() const { return component_count() <= kMaxEnumerableComponents; }

  /// Per-component all-in/all-out membership test; linear in n.
  bool contains(Mask s) const {
    if (s & ~full_) return false;
    for (Mask m : component_masks_) {
      Mask overlap = s & m;
      if (overlap != 0 && overlap != m) return false;
    }
    return true;
  }

  /// Gray-code walk over the 2^k unions, starting at the empty set. Fn takes
  /// a Mask and may return bool (false stops) or void. Returns false iff
  /// stopped early. Refuses when the family is too large to enumerate.
  template <class Fn>
  bool for_each(Fn&& fn) const {
    if (!enumerable()) {
      throw std::length_error("canonical family has 2^" + std::to_string(component_count()) +
                              " members; enumeration refused, use size()/contains()");
    }
    const unsigned k = component_count();
    Mask current = 0;
    for (std::uint64_t i = 0;; ++i) {
      if constexpr (std::is_same_v<decltype(fn(Mask{})), bool>) {
        if (!fn(current)) return false;
      } else {
        fn(current);
      }
      if (i + 1 >= (std::uint64_t{1} << k)) return true;
      current ^= component_masks_[std::countr_zero(i + 1)];
    }
  }

  std::vector<Mask> materialize() const {
    std::vector<Mask> out;
    out.reserve(size());
    for_each([&](Mask m) { out.push_back(m); });
    return out;
  }

 private:
  std::vector<Mask> component_masks_;
  Mask full_;
};

template <SetFunctionOracle F>
CanonicalFamily canonical_family(const F& f) {
  return CanonicalFamily(inequality_graph(f));
}

/// Thrown when an operation requires a submodular input and got a violating
/// face instead. Carries the face so callers can report it exactly.
class not_submodular_error : public std::domain_error {
 public:
  not_submodular_error(const GroundSet& ground, FaceWitness witness)
      : std::domain_error("function is not submodular: Phi-check(" +
                          format_face(ground, witness.face) + ") = " +
                          format_rational(witness.slack)),
        witness_(std::move(witness)) {}

  const FaceWitness& witness() const { return witness_; }

  static std::string format_face(const GroundSet& ground, const TwoFace& p) {
    return "({" + ground.format_subset(p.base) + "},{" + ground.name(p.u) + "," +
           ground.name(p.v) + "})";
  }

 private:
  FaceWitness witness_;
};

namespace detail {

template <SetFunctionOracle F>
void require_submodular(const F& f) {
  ClassCertificate cert = is_submodular(f);
  if (!cert.yes) throw not_submodular_error(f.ground(), *cert.witness);
}

}  // namespace detail

/// For submodular f: is f o sigma_S submodular? Decided structurally — S
/// must be a union of connected components of G_f — without enumerating the
/// family. Throws not_submodular_error if f is not submodular.
template <SetFunctionOracle F>
bool is_sd_submodular(const F& f, Mask s) {
  f.ground().require_mask(s);
  detail::require_submodular(f);
  return CanonicalFamily(inequality_graph(f)).contains(s);
}

/// Whether Phi_f(U, V\U) = 0, i.e. f(U) + f(V\U) = f(V) + f(empty). For
/// submodular f this holds iff U and its complement are disconnected in G_f.
template <SetFunctionOracle F>
bool is_separable(const F& f, Mask u) {
  const Mask full = f.ground().full_mask();
  f.ground().require_mask(u);
  if (u == 0 || u == full) {
    throw std::domain_error("separability is defined for proper nonempty subsets only");
  }
  return f(u) + f(full & ~u) == f(full) + f(0);
}

/// The unique partition of V into inseparable parts, with the verification
/// record for the additive identity rho(X) = sum_i rho(X n U_i) where
/// rho(X) = f(X) - f(empty).
struct Decomposition {
  std::vector<std::vector<unsigned>> parts;
  std::vector<Mask> part_masks;
  bool verified = false;
  bool exhaustive = false;
  std::uint64_t checked_subsets = 0;
};

inline constexpr unsigned kDecompositionExhaustiveLimit = 14;
inline constexpr std::uint64_t kDecompositionSampleCount = 10000;

/// Decomposes a submodular f into the components of its inequality graph and
/// verifies the additive identity — exhaustively up to `exhaustive_limit`
/// elements, on 10^4 seeded random subsets beyond. The identity is a
/// theorem, so a verification failure means a bug, not a valid outcome.
template <SetFunctionOracle F>
Decomposition inseparable_decomposition(const F& f,
                                        unsigned exhaustive_limit = kDecompositionExhaustiveLimit) {
  detail::require_submodular(f);
  InequalityGraph graph = inequality_graph(f);

  Decomposition result;
  result.parts = graph.components;
  result.part_masks = graph.component_masks();

  const Rational& at_empty = f(0);
  const auto additive_at = [&](Mask x) {
    Rational sum = 0;
    for (Mask part : result.part_masks) sum += f(x & part) - at_empty;
    return sum == f(x) - at_empty;
  };

  const unsigned n = f.ground().size();
  if (n <= exhaustive_limit) {
    result.exhaustive = true;
    for (std::uint64_t x = 0; x < f.ground().subset_count(); ++x) {
      if (!additive_at(static_cast<Mask>(x))) {
        throw std::logic_error("inseparable decomposition failed verification at X = {" +
                               f.ground().format_subset(static_cast<Mask>(x)) + "}");
      }
      ++result.checked_subsets;
    }
  } else {
    std::mt19937 rng(0x5d7u);
    std::uniform_int_distribution<std::uint64_t> dist(0, f.ground().subset_count() - 1);
    for (std::uint64_t i = 0; i < kDecompositionSampleCount; ++i) {
      Mask x = static_cast<Mask>(dist(rng));
      if (!additive_at(x)) {
        throw std::logic_error("inseparable decomposition failed verification at X = {" +
                               f.ground().format_subset(x) + "}");
      }
      ++result.checked_subsets;
    }
  }
  result.verified = true;
  return result;
}

}  // namespace sdt
