#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sdt/ground_set.hpp"
#include "sdt/rational.hpp"

namespace sdt {

/// Demonstrates why finding a canonical set needs 2^n - 2 oracle calls in
/// the worst case. The adversary answers |X| to every query; once a strategy
/// commits to an answer T after too few queries, the adversary picks an
/// unqueried dip set U (the function g_U(X) = |X| - 1/2 [X = U]) consistent
/// with every answer given, whose canonical sets {U, V\U} both differ from T.

using AdversaryOracle = std::function<Rational(Mask)>;

/// A query-budgeted strategy: may call the oracle, must output a guess.
/// Exceeding the budget aborts the run (see StrategyOutcome::budget_exhausted).
struct Strategy {
  std::string name;
  std::function<Mask(unsigned n, std::uint64_t budget, const AdversaryOracle&)> run;
};

struct StrategyOutcome {
  std::string strategy;
  unsigned n = 0;
  std::uint64_t budget = 0;
  std::vector<Mask> queries;        // distinct, in query order
  std::optional<Mask> output;       // absent iff the budget ran out first
  bool budget_exhausted = false;
  bool refuted = false;
  std::optional<Mask> refuting_dip; // the U exhibiting the wrong answer
  std::string note;
};

namespace detail {

struct BudgetExhausted {};

}  // namespace detail

inline StrategyOutcome adversary_demo(unsigned n, std::uint64_t budget, const Strategy& solver) {
  if (n < 2 || n > 4) {
    throw std::domain_error("adversary demo is exhaustive and limited to 2 <= n <= 4");
  }
  const Mask full = static_cast<Mask>((std::uint64_t{1} << n) - 1);

  StrategyOutcome outcome;
  outcome.strategy = solver.name;
  outcome.n = n;
  outcome.budget = budget;

  std::vector<bool> queried(std::size_t{1} << n, false);
  const AdversaryOracle oracle = [&](Mask x) -> Rational {
    if (x > full) throw std::domain_error("query out of range");
    if (!queried[x]) {
      if (outcome.queries.size() >= budget) throw detail::BudgetExhausted{};
      queried[x] = true;
      outcome.queries.push_back(x);
    }
    return Rational(std::popcount(x));  // cardinality, i.e. "no dip seen here"
  };

  try {
    outcome.output = solver.run(n, budget, oracle);
  } catch (const detail::BudgetExhausted&) {
    outcome.budget_exhausted = true;
    outcome.note = "budget exhausted, no refutation";
    return outcome;
  }

  const Mask t = *outcome.output;
  for (Mask u = 1; u < full; ++u) {  // proper nonempty subsets, ascending
    if (queried[u]) continue;        // answers already pinned g(u) = |u|
    if (t == u || t == (full ^ u)) continue;  // T would be canonical for g_U
    outcome.refuted = true;
    outcome.refuting_dip = u;
    outcome.note = "g_U with U = dip is consistent with every answer, and its only canonical "
                   "sets are U and its complement";
    return outcome;
  }
  outcome.note = "not refutable: every unqueried proper dip would make the answer correct";
  return outcome;
}

/// The fixed strategy suite the CLI and tests run. Every member is refuted
/// at budget 2^n - 3; "middle-scan-deduce" at the full budget 2^n - 2 is
/// correct on the whole dip family and cannot be refuted.
inline std::vector<Strategy> adversary_strategy_suite() {
  std::vector<Strategy> suite;

  suite.push_back({"guess-empty", [](unsigned, std::uint64_t, const AdversaryOracle&) -> Mask {
                     return 0;
                   }});

  suite.push_back({"prefix-scan-then-empty",
                   [](unsigned n, std::uint64_t budget, const AdversaryOracle& oracle) -> Mask {
                     const std::uint64_t total = std::uint64_t{1} << n;
                     for (std::uint64_t x = 0; x < total && x < budget; ++x) {
                       oracle(static_cast<Mask>(x));
                     }
                     return 0;
                   }});

  suite.push_back({"prefix-scan-then-first-unqueried",
                   [](unsigned n, std::uint64_t budget, const AdversaryOracle& oracle) -> Mask {
                     const std::uint64_t total = std::uint64_t{1} << n;
                     std::uint64_t x = 0;
                     for (; x < total && x < budget; ++x) oracle(static_cast<Mask>(x));
                     return static_cast<Mask>(x < total ? x : 0);
                   }});

  // Queries proper nonempty subsets in ascending order; answers the dip if
  // one shows up, otherwise the empty set (always canonical when no proper
  // dip exists).
  suite.push_back({"middle-scan-deduce",
                   [](unsigned n, std::uint64_t budget, const AdversaryOracle& oracle) -> Mask {
                     const Mask full = static_cast<Mask>((std::uint64_t{1} << n) - 1);
                     std::uint64_t used = 0;
                     for (Mask x = 1; x < full && used < budget; ++x, ++used) {
                       if (oracle(x) != Rational(std::popcount(x))) return x;
                     }
                     return 0;
                   }});

  return suite;
}

inline std::vector<StrategyOutcome> adversary_demo_suite(unsigned n, std::uint64_t budget) {
  std::vector<StrategyOutcome> outcomes;
  for (const Strategy& s : adversary_strategy_suite()) {
    outcomes.push_back(adversary_demo(n, budget, s));
  }
  return outcomes;
}

}  // namespace sdt
