#pragma once

#include "lensknot/braid.hpp"
#include "lensknot/poly.hpp"

#include <cstdint>

namespace lensknot {

/// Parameters of the torus knot T(a, b). Pairs with |a| <= 1 or |b| <= 1 are
/// unknots; otherwise gcd(|a|, |b|) must be 1.
struct TorusParams {
  std::int64_t a = 1;
  std::int64_t b = 1;

  bool is_unknot() const noexcept;
  friend bool operator==(const TorusParams&, const TorusParams&) = default;
};

/// (σ_1 ⋯ σ_{|a|-1})^b in B_{|a|}; inverse letters when b < 0.
/// Throws Error{InvalidArgument} for a = 0.
BraidWord torus_braid(const TorusParams& tp);

/// t^{-g}(1 - t)(1 - t^{ab}) / ((1 - t^a)(1 - t^b)) with g = (a-1)(b-1)/2,
/// evaluated on |a|, |b| by exact division. Throws Error{InvalidArgument}
/// for torus links (gcd > 1).
LaurentPoly torus_alexander_closed(const TorusParams& tp);

/// Preimage of the knot K_n (class n[l_1] + [m_1]) in L(p, q) under the
/// universal cover: the torus knot T(n, p - qn).
/// Throws Error{InvalidArgument} unless p >= 1, gcd(p, q) = gcd(n, p) = 1
/// and 1 <= n < p.
TorusParams lift_generator(std::int64_t p, std::int64_t q, std::int64_t n);

}  // namespace lensknot
