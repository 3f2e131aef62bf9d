// Acceptance suite: one pass/fail line per criterion, all checks in exact
// arithmetic (zero tolerance), with the per-criterion wall-clock budgets
// enforced. Exits nonzero iff any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sdt/sdt.hpp"
#include "support/brute.hpp"
#include "support/registry.hpp"

using namespace sdt;

namespace {

struct Criterion {
  int id;
  std::string title;
  double time_limit_seconds;  // 0 = no limit
  std::function<bool(std::string&)> run;
};

bool check(bool condition, std::string& why, const std::string& message) {
  if (!condition && why.empty()) why = message;
  return condition;
}

// Characterization route (a): the full Boolean system M_f chi_S = 0 mod 2, scanned
// face by face.
bool full_system_accepts(const SetFunction& f, Mask s) {
  bool ok = true;
  for_each_face(f.ground(), [&](const TwoFace& p) {
    if (phi_face(f, p) != 0 && (((s >> p.u) ^ (s >> p.v)) & 1)) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

std::set<Mask> solver_solutions(const SetFunction& g) {
  auto family = solve_canonical(g);
  if (!family) return {};
  auto all = family->materialize();
  return std::set<Mask>(all.begin(), all.end());
}

bool criterion1(std::string& why) {
  SetFunction f = gen_not_clique();
  bool ok = check(is_submodular(f).yes, why, "not_clique must be submodular");
  ClassCertificate strict = is_strictly_submodular(f);
  ok &= check(!strict.yes, why, "not_clique must not be strict");
  ok &= check(strict.witness && strict.witness->face == TwoFace(0, 0, 2) &&
                  strict.witness->slack == 0,
              why, "strictness witness must be (empty,{1,3}) with slack 0");
  InequalityGraph g = inequality_graph(f);
  ok &= check(g.edges == std::vector<std::pair<unsigned, unsigned>>{{0, 1}, {1, 2}}, why,
              "edges must be {1,2},{2,3}");
  CanonicalFamily family(g);
  ok &= check(family.materialize() == std::vector<Mask>{0, 0b111}, why,
              "canonical family must be {empty, V}");
  return ok;
}

bool criterion2(std::string& why) {
  for (unsigned n = 2; n <= 5; ++n) {
    for (const auto& entry : registry::submodular_zoo(n)) {
      const SetFunction& f = entry.fn;
      CanonicalFamily family(inequality_graph(f));
      for (Mask s = 0; s <= f.ground().full_mask(); ++s) {
        const bool via_system = full_system_accepts(f, s);
        const bool via_components = family.contains(s);
        const bool via_op = is_sd_submodular(f, s);
        const bool via_brute = brute::submodular(brute::shift(f, s));
        if (via_system != via_brute || via_components != via_brute || via_op != via_brute) {
          why = entry.name + " at n=" + std::to_string(n) + ", S=" +
                std::to_string(s) + ": routes disagree";
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion3(std::string& why) {
  for (unsigned n = 2; n <= 5; ++n) {
    for (const auto& entry : registry::zoo(n)) {
      if (solver_solutions(entry.fn) != brute::canonical_sets(entry.fn)) {
        why = entry.name + " at n=" + std::to_string(n) +
              ": solver and brute-force canonical sets differ";
        return false;
      }
    }
  }
  return true;
}

bool criterion4(std::string& why) {
  std::mt19937 rng(0xA1u);
  for (unsigned n = 3; n <= 16; ++n) {
    CountedOracle oracle = counted(gen_quadratic_strict(n));
    const Mask full = oracle.ground().full_mask();
    std::uniform_int_distribution<Mask> dist(0, full);
    for (int trial = 0; trial < 50; ++trial) {
      oracle.reset();
      const Mask s = dist(rng);
      const Mask t = strict_canonical(sd_view(oracle, s));
      if (t != s && t != (full ^ s)) {
        why = "n=" + std::to_string(n) + ": returned set is neither S nor its complement";
        return false;
      }
      if (oracle.distinct_queries() != 2 * n || oracle.total_calls() != 2 * n) {
        why = "n=" + std::to_string(n) + ": oracle call count is not exactly 2n";
        return false;
      }
    }
  }
  return true;
}

bool criterion5(std::string& why) {
  for (unsigned n = 3; n <= 5; ++n) {
    GroundSet ground = GroundSet::numbered(n);
    const Mask full = ground.full_mask();
    for (Mask u = 1; u < full; ++u) {
      SetFunction g = gen_min_dip(ground, u);
      if (solver_solutions(g) != std::set<Mask>{u, static_cast<Mask>(full ^ u)}) {
        why = "n=" + std::to_string(n) + " U=" + std::to_string(u) +
              ": canonical sets are not exactly {U, V\\U}";
        return false;
      }
      for (Mask x = 1; x <= full; ++x) {
        if (!(g(x) > g(0))) {
          why = "empty set is not the unique minimizer";
          return false;
        }
      }
      for (Mask x = 0; x < full; ++x) {
        if (!(g(x) < g(full))) {
          why = "V is not the unique maximizer";
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion6(std::string& why) {
  std::mt19937 rng(0xB2u);
  for (unsigned n = 2; n <= 5; ++n) {
    GroundSet ground = GroundSet::numbered(n);
    for (int variant = 0; variant < 3; ++variant) {
      std::vector<Rational> weights;
      for (unsigned i = 0; i < n; ++i) weights.push_back(brute::random_rational(rng));
      SetFunction f = gen_modular(ground, weights, brute::random_rational(rng));
      for (Mask s = 0; s <= ground.full_mask(); ++s) {
        if (!is_modular(sd_transform(f, s)).yes) {
          why = "a shift of a modular function stopped being modular";
          return false;
        }
      }
    }
  }
  for (unsigned n = 2; n <= 4; ++n) {
    for (const auto& entry : registry::zoo(n)) {
      auto family = solve_canonical(entry.fn);
      if (!family) continue;
      const Mask full = entry.fn.ground().full_mask();
      bool closed = true;
      family->for_each_solution([&](Mask t) {
        if (!family->is_solution(full ^ t)) {
          closed = false;
          return false;
        }
        return true;
      });
      if (!closed) {
        why = entry.name + " at n=" + std::to_string(n) + ": solutions not complement-closed";
        return false;
      }
    }
  }
  return true;
}

bool criterion7(std::string& why) {
  std::mt19937 rng(0xC3u);
  int generated = 0;
  for (unsigned n = 2; n <= 8; ++n) {
    GroundSet ground = GroundSet::numbered(n);
    for (int trial = 0; trial < 3 && generated < 20; ++trial, ++generated) {
      std::uniform_int_distribution<unsigned> bucket(0, n / 2);
      std::vector<Mask> raw(n / 2 + 1, 0);
      for (unsigned i = 0; i < n; ++i) raw[bucket(rng)] |= Mask{1} << i;
      std::vector<Mask> parts;
      for (Mask m : raw) {
        if (m) parts.push_back(m);
      }
      SetFunction f = gen_partition_distance(ground, parts);
      if (!is_submodular(f).yes) {
        why = "partition distance not submodular at n=" + std::to_string(n);
        return false;
      }
      if (n > 6) continue;
      std::set<Mask> unions;
      for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << parts.size()); ++pick) {
        Mask s = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
          if (pick & (std::uint64_t{1} << i)) s |= parts[i];
        }
        unions.insert(s);
      }
      for (Mask s = 0; s <= ground.full_mask(); ++s) {
        const bool member = unions.count(s) > 0;
        if (is_sd_submodular(f, s) != member ||
            brute::submodular(brute::shift(f, s)) != member) {
          why = "shift submodularity differs from union-family membership at n=" +
                std::to_string(n);
          return false;
        }
      }
    }
  }
  return check(generated == 20, why, "expected 20 random partitions");
}

bool criterion8(std::string& why) {
  // additive across a fixed partition: -|X n A|^2 - |X n B|^2
  const auto part_additive = [](unsigned n, Mask a) {
    GroundSet ground = GroundSet::numbered(n);
    const Mask b = ground.full_mask() & ~a;
    return SetFunction::tabulate(ground, [&](Mask x) {
      const int ka = std::popcount(x & a);
      const int kb = std::popcount(x & b);
      return Rational(-ka * ka - kb * kb);
    });
  };

  {
    SetFunction f = part_additive(12, 0b000000111111);
    Decomposition d = inseparable_decomposition(f);
    bool ok = d.part_masks == std::vector<Mask>{0b000000111111, 0b111111000000} && d.verified &&
              d.exhaustive && d.checked_subsets == 4096;
    if (!check(ok, why, "n=12 part-additive fixture must decompose into its construction parts"))
      return false;
  }
  {
    SetFunction mod =
        gen_modular(GroundSet::numbered(5), {1, Rational(1, 2), -2, 3, Rational(-1, 3)});
    Decomposition d = inseparable_decomposition(mod);
    if (!check(d.parts.size() == 5 && d.verified, why, "modular must split into singletons"))
      return false;
  }
  {
    SetFunction f = part_additive(8, 0b00001111);
    CanonicalFamily family(inequality_graph(f));
    for (Mask u = 1; u < f.ground().full_mask(); ++u) {
      if (is_separable(f, u) != family.contains(u)) {
        why = "separability and component-union membership differ at U=" + std::to_string(u);
        return false;
      }
    }
  }
  return true;
}

bool criterion9(std::string& why) {
  for (unsigned n = 2; n <= 6; ++n) {
    for (const auto& entry : registry::zoo(n)) {
      const SetFunction& f = entry.fn;
      for (std::uint64_t x = 0; x < f.ground().subset_count(); ++x) {
        std::vector<Rational> point(n, Rational(0));
        for (unsigned i = 0; i < n; ++i) {
          if (x & (std::uint64_t{1} << i)) point[i] = 1;
        }
        if (lovasz_extension(f, point) != f(static_cast<Mask>(x))) {
          why = entry.name + ": extension differs from the function on an indicator";
          return false;
        }
      }

      ClassCertificate cert = is_submodular(f);
      if (cert.yes) continue;
      const TwoFace& p = cert.witness->face;
      std::vector<Rational> a(n, Rational(0)), b(n, Rational(0)), mid(n, Rational(0));
      for (unsigned i = 0; i < n; ++i) {
        if (p.base & (Mask{1} << i)) a[i] = b[i] = mid[i] = 1;
      }
      a[p.u] = 1;
      b[p.v] = 1;
      mid[p.u] = mid[p.v] = Rational(1, 2);
      Rational gap =
          (lovasz_extension(f, a) + lovasz_extension(f, b)) / 2 - lovasz_extension(f, mid);
      if (gap != cert.witness->slack / 2 || !(gap < 0)) {
        why = entry.name + ": midpoint violation is not exactly half the face slack";
        return false;
      }
    }
  }
  return true;
}

bool criterion10(std::string& why) {
  const unsigned n = 3;
  const Mask full = 0b111;
  for (const StrategyOutcome& o : adversary_demo_suite(n, (1u << n) - 3)) {
    if (!o.refuted || !o.refuting_dip || !o.output) {
      why = o.strategy + " was not refuted at budget 2^n-3";
      return false;
    }
    const Mask u = *o.refuting_dip;
    bool valid = u != 0 && u != full && *o.output != u && *o.output != (full ^ u);
    for (Mask q : o.queries) valid &= q != u;
    if (!check(valid, why, o.strategy + ": refutation witness is not valid")) return false;
  }
  auto suite = adversary_strategy_suite();
  StrategyOutcome full_run = adversary_demo(n, (1u << n) - 2, suite.back());
  return check(!full_run.refuted && full_run.output == Mask{0}, why,
               "the full-budget deducing strategy must not be refutable");
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "not_clique certificates, inequality graph, canonical family", 1.0, criterion1},
      {2, "three-way shift-submodularity equivalence on the submodular zoo (n=2..5)", 60.0,
       criterion2},
      {3, "canonical solver completeness against brute force (n=2..5)", 60.0, criterion3},
      {4, "strict-case search: T in {S, V\\S} with exactly 2n distinct queries (n=3..16)", 30.0,
       criterion4},
      {5, "dip family: solutions {U, V\\U}, unique extremes (n=3..5)", 30.0, criterion5},
      {6, "modularity invariance under shifts; complement closure of solutions", 0.0, criterion6},
      {7, "partition distance: submodular, shift-submodular exactly on the union family", 120.0,
       criterion7},
      {8, "inseparable decomposition and separability vs components", 0.0, criterion8},
      {9, "Lovasz extension: indicator interpolation and exact midpoint violations", 0.0,
       criterion9},
      {10, "query-budget adversary: suite refuted at 2^n-3, full budget survives", 5.0,
       criterion10},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string why;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.time_limit_seconds > 0 && elapsed > c.time_limit_seconds) {
      ok = false;
      why = "time limit exceeded (" + std::to_string(c.time_limit_seconds) + "s)";
    }
    std::printf("%s  criterion %2d: %s [%.2fs]%s%s\n", ok ? "PASS" : "FAIL", c.id,
                c.title.c_str(), elapsed, why.empty() ? "" : " -- ", why.c_str());
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
