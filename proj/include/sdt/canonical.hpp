#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sdt/structure.hpp"
#include "sdt/transform.hpp"

namespace sdt {

/// One mod-2 constraint chi_T(u) + chi_T(v) = parity, demanded by a 2-face
/// with nonzero slack: parity 0 when the slack is positive, 1 when negative.
struct ParityConstraint {
  std::pair<unsigned, unsigned> pair;  // u < v
  bool parity;
  TwoFace witness;
};

/// Two faces on the same pair demanding different parities. No assignment
/// can satisfy both, so no SD-transformation of this function is submodular.
struct ParityConflict {
  std::pair<unsigned, unsigned> pair;
  TwoFace positive_witness;  // the face demanding parity 0
  TwoFace negative_witness;  // the face demanding parity 1
};

/// The reduced mod-2 system M_g chi_T = b_g: at most one constraint per
/// element pair, plus the first conflict (in face order) if any.
struct ParitySystem {
  GroundSet ground;
  std::vector<ParityConstraint> constraints;  // pair-lex order
  std::optional<ParityConflict> conflict;

  bool pairwise_feasible() const { return !conflict.has_value(); }
};

/// The constraint contributed by one face, if any. Faces with zero slack
/// contribute nothing.
template <SetFunctionOracle F>
std::optional<ParityConstraint> face_constraint(const F& g, const TwoFace& p) {
  validate_face(g.ground(), p);
  Rational s = phi_face(g, p);
  if (s == 0) return std::nullopt;
  return ParityConstraint{{p.u, p.v}, s < 0, p};
}

/// Scans every 2-face and merges the per-pair parity demands. Witnesses are
/// the first faces in canonical order, so the output is deterministic.
template <SetFunctionOracle F>
ParitySystem build_parity_system(const F& g) {
  const GroundSet& ground = g.ground();
  ParitySystem system{ground, {}, std::nullopt};  // no pairs, no constraints when n = 1
  for (unsigned u = 0; u + 1 < ground.size(); ++u) {
    for (unsigned v = u + 1; v < ground.size(); ++v) {
      std::optional<ParityConstraint> merged;
      for_each_pair_face(ground, u, v, [&](const TwoFace& p) {
        std::optional<ParityConstraint> c = face_constraint(g, p);
        if (!c) return true;
        if (!merged) {
          merged = std::move(c);
          return true;
        }
        if (merged->parity != c->parity && !system.conflict) {
          const ParityConstraint& pos = merged->parity ? *c : *merged;
          const ParityConstraint& neg = merged->parity ? *merged : *c;
          system.conflict = ParityConflict{{u, v}, pos.witness, neg.witness};
          return false;  // this pair is decided; later pairs cannot beat face order
        }
        return true;
      });
      if (merged) system.constraints.push_back(std::move(*merged));
    }
  }
  return system;
}

/// All solutions of a feasible parity system, stored compactly: the blocks
/// are the connected components of the constraint graph (unconstrained
/// vertices are singletons), each carrying a forced assignment up to one
/// free flip bit. Solutions = base xor any union of whole blocks; there are
/// exactly 2^k of them for k blocks, and the complement of a solution is the
/// all-blocks flip, hence again a solution.
class SolutionFamily {
 public:
  SolutionFamily(GroundSet ground, std::vector<std::vector<unsigned>> blocks,
                 std::vector<Mask> block_masks, Mask base)
      : ground_(std::move(ground)),
        blocks_(std::move(blocks)),
        block_masks_(std::move(block_masks)),
        base_(base) {}

  const GroundSet& ground() const { return ground_; }
  const std::vector<std::vector<unsigned>>& blocks() const { return blocks_; }
  const std::vector<Mask>& block_masks() const { return block_masks_; }
  unsigned free_bit_count() const { return static_cast<unsigned>(block_masks_.size()); }
  std::uint64_t solution_count() const { return std::uint64_t{1} << free_bit_count(); }

  /// The deterministic pick: within each block, the assignment that leaves
  /// the block's lowest-index vertex outside T.
  Mask representative() const {
    Mask t = base_;
    for (Mask block : block_masks_) {
      const Mask lowest = block & (~block + 1);
      if (t & lowest) t ^= block;
    }
    return t;
  }

  bool is_solution(Mask t) const {
    if (!ground_.contains_mask(t)) return false;
    for (Mask block : block_masks_) {
      Mask part = t & block;
      if (part != (base_ & block) && part != ((base_ ^ block) & block)) return false;
    }
    return true;
  }

  /// Gray-code walk over all solutions, starting at the base assignment.
  /// Fn: Mask -> bool (false stops) or void; returns false iff stopped.
  /// Refuses families larger than 2^20.
  template <class Fn>
  bool for_each_solution(Fn&& fn) const {
    if (solution_count() > kMaxEnumeratedSolutions) {
      throw std::length_error("solution family has 2^" + std::to_string(free_bit_count()) +
                              " members; enumeration capped at 2^20");
    }
    Mask current = base_;
    for (std::uint64_t i = 0;; ++i) {
      if constexpr (std::is_same_v<decltype(fn(Mask{})), bool>) {
        if (!fn(current)) return false;
      } else {
        fn(current);
      }
      if (i + 1 >= solution_count()) return true;
      current ^= block_masks_[std::countr_zero(i + 1)];
    }
  }

  std::vector<Mask> materialize() const {
    std::vector<Mask> out;
    out.reserve(solution_count());
    for_each_solution([&](Mask t) { out.push_back(t); });
    return out;
  }

 private:
  GroundSet ground_;
  std::vector<std::vector<unsigned>> blocks_;
  std::vector<Mask> block_masks_;
  Mask base_;
};

namespace detail {

// Union-find with parity relative to the root. find() returns the root and
// accumulates the parity of the path.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(unsigned n) : parent_(n), parity_(n, 0) {
    for (unsigned i = 0; i < n; ++i) parent_[i] = i;
  }

  std::pair<unsigned, bool> find(unsigned x) {
    bool parity = false;
    while (parent_[x] != x) {
      parity ^= parity_[x];
      x = parent_[x];
    }
    return {x, parity};
  }

  // Adds chi(a) xor chi(b) = relation; returns false on contradiction.
  bool relate(unsigned a, unsigned b, bool relation) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == relation;
    if (ra > rb) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent_[rb] = ra;          // smallest index stays the root
    parity_[rb] = pa ^ pb ^ relation;
    return true;
  }

 private:
  std::vector<unsigned> parent_;
  std::vector<bool> parity_;
};

}  // namespace detail

/// Solves M_g chi_T = b_g by parity union-find. Returns nothing iff the
/// system is infeasible — either a pair-level conflict or an odd cycle of
/// parity demands — in which case no SD-transformation of g is submodular.
/// Otherwise the returned family is exactly the set of canonical sets of g.
inline std::optional<SolutionFamily> solve_canonical(const ParitySystem& system) {
  if (!system.pairwise_feasible()) return std::nullopt;
  const unsigned n = system.ground.size();
  detail::ParityUnionFind uf(n);
  for (const ParityConstraint& c : system.constraints) {
    if (!uf.relate(c.pair.first, c.pair.second, c.parity)) return std::nullopt;
  }

  std::vector<std::vector<unsigned>> blocks;
  std::vector<Mask> block_masks;
  std::vector<int> slot(n, -1);
  Mask base = 0;
  for (unsigned v = 0; v < n; ++v) {
    auto [root, parity] = uf.find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(blocks.size());
      blocks.emplace_back();
      block_masks.push_back(0);
    }
    const unsigned b = static_cast<unsigned>(slot[root]);
    blocks[b].push_back(v);
    block_masks[b] |= Mask{1} << v;
    if (parity) base |= Mask{1} << v;
  }
  return SolutionFamily(system.ground, std::move(blocks), std::move(block_masks), base);
}

template <SetFunctionOracle F>
std::optional<SolutionFamily> solve_canonical(const F& g) {
  return solve_canonical(build_parity_system(g));
}

/// Finding a canonical set when g is an SD-transformation of a *strictly*
/// submodular function: every face (empty, {u*, v}) then has nonzero slack,
/// so the parity demands at the pivot u* determine T outright. Makes exactly
/// 2n value-oracle queries: g(empty), g({u*}), and g({v}), g({u*,v}) per
/// other element v. Returns S or its complement (both are canonical).
template <SetFunctionOracle F>
Mask strict_canonical(const F& g, unsigned pivot = 0) {
  const GroundSet& ground = g.ground();
  const unsigned n = ground.size();
  if (n < 2) throw std::domain_error("strict canonical search needs a ground set of size >= 2");
  if (pivot >= n) throw std::domain_error("pivot index out of range");

  const Mask pivot_mask = Mask{1} << pivot;
  const Rational at_empty = g(0);
  const Rational at_pivot = g(pivot_mask);

  Mask t = 0;
  for (unsigned v = 0; v < n; ++v) {
    if (v == pivot) continue;
    const Mask vm = Mask{1} << v;
    Rational slack = at_pivot + g(vm) - g(pivot_mask | vm) - at_empty;
    if (slack == 0) {
      throw std::domain_error(
          "zero slack at face ({},{" + ground.name(pivot) + "," + ground.name(v) +
          "}): the function is not an SD-transformation of a strictly submodular function");
    }
    if (slack < 0) t |= vm;
  }
  return t;
}

}  // namespace sdt
