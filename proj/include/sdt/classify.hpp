#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdt/set_function.hpp"

namespace sdt {

struct FaceWitness {
  TwoFace face;
  Rational slack;  // Phi-check value on that face
};

/// Yes/no verdict for a function-class test. A "no" always carries the first
/// violating face in canonical face order, with its exact slack.
struct ClassCertificate {
  bool yes = true;
  std::optional<FaceWitness> witness;

  explicit operator bool() const { return yes; }
};

namespace detail {

// Scans faces in canonical order and stops at the first one violating
// `ok(slack)`. Sequential scan, so the witness is the lexicographically
// first violation.
template <SetFunctionOracle F, class Ok>
ClassCertificate scan_faces(const F& f, Ok&& ok) {
  ClassCertificate cert;
  for_each_face(f.ground(), [&](const TwoFace& p) {
    Rational s = phi_face(f, p);
    if (!ok(s)) {
      cert.yes = false;
      cert.witness = FaceWitness{p, std::move(s)};
      return false;
    }
    return true;
  });
  return cert;
}

}  // namespace detail

/// Submodular iff the face slack is >= 0 on every 2-face; checking the
/// 2-faces alone is equivalent to checking all pairs X, Y.
template <SetFunctionOracle F>
ClassCertificate is_submodular(const F& f) {
  return detail::scan_faces(f, [](const Rational& s) { return s >= 0; });
}

/// Strictly submodular iff the face slack is > 0 on every 2-face.
template <SetFunctionOracle F>
ClassCertificate is_strictly_submodular(const F& f) {
  if (f.ground().size() < 2) {
    throw std::domain_error("strict submodularity needs a ground set of size >= 2");
  }
  return detail::scan_faces(f, [](const Rational& s) { return s > 0; });
}

/// Modular iff the face slack is exactly 0 on every 2-face.
template <SetFunctionOracle F>
ClassCertificate is_modular(const F& f) {
  return detail::scan_faces(f, [](const Rational& s) { return s == 0; });
}

/// Lovasz extension at an arbitrary rational point: sort coordinates in
/// descending order (ties broken by ascending element index) and accumulate
/// x(v_i) * (f(prefix_i) - f(prefix_{i-1})), plus f(empty). For 0/1 points
/// this reproduces the function value; f is submodular iff this extension is
/// convex.
template <SetFunctionOracle F>
Rational lovasz_extension(const F& f, std::span<const Rational> point) {
  const unsigned n = f.ground().size();
  if (point.size() != n) {
    throw std::invalid_argument("point dimension " + std::to_string(point.size()) +
                                " does not match ground set size " + std::to_string(n));
  }
  std::vector<unsigned> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](unsigned a, unsigned b) { return point[a] > point[b]; });

  Rational total = f(0);
  Rational previous = f(0);
  Mask prefix = 0;
  for (unsigned i : order) {
    prefix |= Mask{1} << i;
    Rational current = f(prefix);
    total += point[i] * (current - previous);
    previous = std::move(current);
  }
  return total;
}

template <SetFunctionOracle F>
Rational lovasz_extension(const F& f, const std::vector<Rational>& point) {
  return lovasz_extension(f, std::span<const Rational>(point));
}

}  // namespace sdt
