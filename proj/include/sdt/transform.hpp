#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sdt/set_function.hpp"

namespace sdt {

/// The SD-map sigma_S: X -> X symmetric-difference S. An involution.
inline Mask sd_map(Mask s, Mask x) { return x ^ s; }

/// Lazy view of f o sigma_S over any value oracle: answers g(X) = f(X xor S)
/// without touching the rest of the table. This is what makes oracle-call
/// accounting for the strict-case algorithm meaningful.
template <SetFunctionOracle F>
class ShiftedOracle {
 public:
  ShiftedOracle(F f, Mask s) : f_(std::move(f)), s_(s) { f_.ground().require_mask(s); }

  const GroundSet& ground() const { return f_.ground(); }
  Mask shift() const { return s_; }
  Rational operator()(Mask x) const { return f_(x ^ s_); }

 private:
  F f_;
  Mask s_;
};

template <class F>
ShiftedOracle<std::decay_t<F>> sd_view(F&& f, Mask s) {
  return ShiftedOracle<std::decay_t<F>>(std::forward<F>(f), s);
}

/// Materialized SD-transformation g = f o sigma_S.
inline SetFunction sd_transform(const SetFunction& f, Mask s) {
  f.ground().require_mask(s);
  std::vector<Rational> values(f.values().size());
  for (std::uint64_t x = 0; x < values.size(); ++x) {
    values[x] = f(static_cast<Mask>(x) ^ s);
  }
  std::string provenance = f.provenance().empty() ? "f" : f.provenance();
  return SetFunction(f.ground(), std::move(values),
                     provenance + " o sd(" + f.ground().format_subset(s) + ")");
}

/// The induced map on 2-faces: (X,{u,v}) -> ((X sd S) \ {u,v}, {u,v}).
/// The four sigma_S-images of the input corners are exactly the corners of
/// the output face.
inline TwoFace face_sd_map(Mask s, const TwoFace& p) {
  return TwoFace((p.base ^ s) & ~p.pair_mask(), p.u, p.v);
}

/// Which output corner each input corner lands on. Corners are indexed
/// 0:X, 1:X+u, 2:X+v, 3:X+uv; the image of corner k is corner k xor t where
/// t encodes S's overlap with the pair (bit 0: u in S, bit 1: v in S).
/// |S n {u,v}| odd swaps the diagonal roles, which is exactly the sign flip
/// of the face slack under the transformation.
inline std::array<unsigned, 4> face_corner_roles(Mask s, const TwoFace& p) {
  const unsigned t = ((s >> p.u) & 1u) | (((s >> p.v) & 1u) << 1);
  return {0u ^ t, 1u ^ t, 2u ^ t, 3u ^ t};
}

/// Renames elements: bit i of the input maps to bit perm[i] of the output,
/// i.e. the result is f o pi^{-1}. The ground set labels stay put.
inline SetFunction relabel(const SetFunction& f, const std::vector<unsigned>& perm) {
  const unsigned n = f.ground().size();
  if (perm.size() != n) throw std::domain_error("permutation size does not match ground set");
  std::vector<bool> seen(n, false);
  for (unsigned i : perm) {
    if (i >= n || seen[i]) throw std::domain_error("relabel needs a bijection on element indices");
    seen[i] = true;
  }
  std::vector<Rational> values(f.values().size());
  for (std::uint64_t x = 0; x < values.size(); ++x) {
    Mask image = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (x & (std::uint64_t{1} << i)) image |= Mask{1} << perm[i];
    }
    values[image] = f(static_cast<Mask>(x));
  }
  std::string provenance = f.provenance().empty() ? "f" : f.provenance();
  return SetFunction(f.ground(), std::move(values), provenance + " relabeled");
}

}  // namespace sdt
