#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sdt/rational.hpp"
#include "sdt/set_function.hpp"

namespace sdt {

/// Constructors for the example families used throughout: each returns an
/// exact table whose provenance string records the kind and parameters.

/// n=3 function that is submodular with a connected, non-complete inequality
/// graph (edges {1,2} and {2,3} but not {1,3}): 0 on the empty set, 2 on
/// {1,3}, 1 everywhere else.
inline SetFunction gen_not_clique() {
  GroundSet ground = GroundSet::numbered(3);
  std::vector<Rational> values(8, Rational(1));
  values[0b000] = 0;
  values[0b101] = 2;  // {1,3}
  return SetFunction(std::move(ground), std::move(values), "not_clique");
}

/// Edit distance from the nearest union of partition parts:
/// f(X) = sum_i min(|X n U_i|, |U_i \ X|). Submodular for every partition.
inline SetFunction gen_partition_distance(const GroundSet& ground,
                                          const std::vector<Mask>& parts) {
  Mask covered = 0;
  for (Mask part : parts) {
    ground.require_mask(part);
    if (part == 0) throw std::domain_error("partition parts must be nonempty");
    if (part & covered) throw std::domain_error("partition parts must be disjoint");
    covered |= part;
  }
  if (covered != ground.full_mask()) throw std::domain_error("partition must cover the ground set");

  std::string label = "partition_distance parts=";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) label += '|';
    label += ground.format_subset(parts[i]);
  }
  return SetFunction::tabulate(
      ground,
      [&](Mask x) {
        int total = 0;
        for (Mask part : parts) {
          total += std::min(std::popcount(x & part), std::popcount(part & ~x));
        }
        return Rational(total);
      },
      std::move(label));
}

/// h_U(X) = min(|X n U|, |U \ X|); the single-part building block of the
/// partition distance, submodular on its own.
inline SetFunction gen_part_min(const GroundSet& ground, Mask u) {
  ground.require_mask(u);
  if (u == 0) throw std::domain_error("part-min needs a nonempty part");
  return SetFunction::tabulate(
      ground,
      [&](Mask x) { return Rational(std::min(std::popcount(x & u), std::popcount(u & ~x))); },
      "part_min U=" + ground.format_subset(u));
}

/// The hard instance for canonical-set search: g_U(X) = |X| - 1/2 when
/// X = U, |X| otherwise. Its only canonical sets are U and V \ U; the empty
/// set is its unique minimizer and V (for U != V) its unique maximizer.
inline SetFunction gen_min_dip(const GroundSet& ground, Mask u) {
  ground.require_mask(u);
  if (u == 0) throw std::domain_error("dip set must be nonempty");
  return SetFunction::tabulate(
      ground,
      [&](Mask x) {
        Rational value(std::popcount(x));
        if (x == u) value -= Rational(1, 2);
        return value;
      },
      "min_dip U=" + ground.format_subset(u));
}

/// f(X) = offset + sum of weights over X. Exactly the modular functions.
inline SetFunction gen_modular(const GroundSet& ground, std::vector<Rational> weights,
                               Rational offset = Rational(0)) {
  if (weights.size() != ground.size()) {
    throw std::domain_error("need one weight per ground-set element");
  }
  std::string label = "modular offset=" + format_rational(offset) + " weights=";
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i) label += ',';
    label += format_rational(weights[i]);
  }
  return SetFunction::tabulate(
      ground,
      [&](Mask x) {
        Rational total = offset;
        for (unsigned i = 0; i < ground.size(); ++i) {
          if (x & (Mask{1} << i)) total += weights[i];
        }
        return total;
      },
      std::move(label));
}

/// f(X) = -|X|^2: strictly submodular, face slack 2 everywhere.
inline SetFunction gen_quadratic_strict(unsigned n) {
  if (n < 2) throw std::domain_error("strict fixture needs a ground set of size >= 2");
  return SetFunction::tabulate(
      GroundSet::numbered(n),
      [](Mask x) {
        const int k = std::popcount(x);
        return Rational(-k * k);
      },
      "quadratic_strict n=" + std::to_string(n));
}

struct WeightedEdge {
  unsigned u;
  unsigned v;
  Rational weight;
};

/// Cut function of a weighted undirected graph: total weight of edges
/// crossing (X, V \ X). Symmetric and submodular for nonnegative weights.
inline SetFunction gen_cut(const GroundSet& ground, const std::vector<WeightedEdge>& edges) {
  std::string label = "cut edges=";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const WeightedEdge& e = edges[i];
    if (e.u >= ground.size() || e.v >= ground.size()) {
      throw std::domain_error("cut edge endpoint out of range");
    }
    if (e.u == e.v) throw std::domain_error("cut graph cannot have self-loops");
    if (e.weight < 0) throw std::domain_error("cut weights must be nonnegative");
    if (i) label += ',';
    label += ground.name(e.u) + "-" + ground.name(e.v) + ":" + format_rational(e.weight);
  }
  return SetFunction::tabulate(
      ground,
      [&](Mask x) {
        Rational total = 0;
        for (const WeightedEdge& e : edges) {
          const bool in_u = x & (Mask{1} << e.u);
          const bool in_v = x & (Mask{1} << e.v);
          if (in_u != in_v) total += e.weight;
        }
        return total;
      },
      std::move(label));
}

/// A submodular n=3 function whose Boolean matrix has nonzero rows exactly
/// at the faces (empty,{1,3}) and ({2},{1,3}), so its inequality graph has
/// the single edge {1,3}. The table is the lexicographically first solution
/// of a bounded search over {0,1,2}^8 (the search is replayed in the tests).
inline SetFunction gen_figure1_like() {
  GroundSet ground = GroundSet::numbered(3);
  std::vector<Rational> values{0, 0, 0, 0, 1, 0, 1, 0};
  return SetFunction(std::move(ground), std::move(values), "figure1_like");
}

}  // namespace sdt
