#pragma once

#include <concepts>
#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sdt/faces.hpp"
#include "sdt/ground_set.hpp"
#include "sdt/rational.hpp"

namespace sdt {

/// A set function f: 2^V -> Q stored densely, one exact rational per bitmask.
/// Values are immutable after construction; instances are safe to share
/// across concurrent readers. f(empty) = 0 is NOT assumed.
class SetFunction {
 public:
  SetFunction(GroundSet ground, std::vector<Rational> values, std::string provenance = "")
      : ground_(std::move(ground)), values_(std::move(values)), provenance_(std::move(provenance)) {
    if (values_.size() != ground_.subset_count()) {
      throw std::invalid_argument("set function needs exactly 2^n values, got " +
                                  std::to_string(values_.size()));
    }
  }

  /// Builds the table by evaluating `fn` on every subset.
  template <class Fn>
  static SetFunction tabulate(GroundSet ground, Fn&& fn, std::string provenance = "") {
    std::vector<Rational> values;
    values.reserve(ground.subset_count());
    for (std::uint64_t x = 0; x < ground.subset_count(); ++x) {
      values.push_back(fn(static_cast<Mask>(x)));
    }
    return SetFunction(std::move(ground), std::move(values), std::move(provenance));
  }

  const GroundSet& ground() const { return ground_; }
  const std::string& provenance() const { return provenance_; }
  const std::vector<Rational>& values() const { return values_; }

  const Rational& operator()(Mask x) const {
    if (x >= values_.size()) throw std::domain_error("bitmask out of range for set function");
    return values_[x];
  }

 private:
  GroundSet ground_;
  std::vector<Rational> values_;
  std::string provenance_;
};

/// Anything that can answer function-value queries over a ground set. Both
/// the dense table and the counting / lazily shifted views below model this,
/// so every scan in the library runs against either.
template <class F>
concept SetFunctionOracle = requires(const F& f, Mask x) {
  { f.ground() } -> std::convertible_to<const GroundSet&>;
  { f(x) } -> std::convertible_to<Rational>;
};

template <SetFunctionOracle F>
Rational evaluate(const F& f, Mask x) {
  return f(x);
}

/// Value-oracle wrapper that counts calls. Copies share one counter, so a
/// lazy view built on top of a copy still accrues to the same tallies.
/// Counting is mutex-serialized: counts are exact under concurrent queries.
class CountedOracle {
 public:
  explicit CountedOracle(SetFunction f)
      : fn_(std::make_shared<const SetFunction>(std::move(f))),
        counter_(std::make_shared<Counter>()) {}

  const GroundSet& ground() const { return fn_->ground(); }
  const SetFunction& inner() const { return *fn_; }

  Rational operator()(Mask x) const {
    const Rational& value = (*fn_)(x);  // range check happens before counting
    std::lock_guard<std::mutex> lock(counter_->mutex);
    counter_->distinct.insert(x);
    ++counter_->total;
    return value;
  }

  std::size_t distinct_queries() const {
    std::lock_guard<std::mutex> lock(counter_->mutex);
    return counter_->distinct.size();
  }

  std::uint64_t total_calls() const {
    std::lock_guard<std::mutex> lock(counter_->mutex);
    return counter_->total;
  }

  std::vector<Mask> queried_subsets() const {
    std::lock_guard<std::mutex> lock(counter_->mutex);
    return std::vector<Mask>(counter_->distinct.begin(), counter_->distinct.end());
  }

  void reset() const {
    std::lock_guard<std::mutex> lock(counter_->mutex);
    counter_->distinct.clear();
    counter_->total = 0;
  }

 private:
  struct Counter {
    mutable std::mutex mutex;
    std::unordered_set<Mask> distinct;
    std::uint64_t total = 0;
  };
  std::shared_ptr<const SetFunction> fn_;
  std::shared_ptr<Counter> counter_;
};

inline CountedOracle counted(SetFunction f) { return CountedOracle(std::move(f)); }

/// Phi_f(X,Y) = f(X) + f(Y) - f(X u Y) - f(X n Y). Submodular means >= 0
/// everywhere, modular means == 0, strict means > 0 whenever X\Y and Y\X are
/// both nonempty.
template <SetFunctionOracle F>
Rational phi(const F& f, Mask x, Mask y) {
  return f(x) + f(y) - f(x | y) - f(x & y);
}

/// Face-local slack: Phi_f(X+u, X+v) = f(X+u) + f(X+v) - f(X+uv) - f(X).
template <SetFunctionOracle F>
Rational phi_face(const F& f, const TwoFace& p) {
  const auto c = p.corners();
  return f(c[1]) + f(c[2]) - f(c[3]) - f(c[0]);
}

}  // namespace sdt
