#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>

namespace lensknot {

/// An element of Q/Z in lowest terms, 0 <= numerator < denominator.
class QmodZ {
 public:
  QmodZ() = default;
  /// Reduces numerator/denominator into [0, 1) and lowest terms.
  QmodZ(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }
  friend auto operator<=>(const QmodZ&, const QmodZ&) = default;

  /// "a/p", or "0".
  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Inverse of a modulo p in [0, p). Throws Error{InvalidArgument} unless
/// p >= 1 and gcd(a, p) = 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

/// L(p, q) with gcd(p, q) = 1, 1 <= q < p (or q = 0 when p = 1).
class LensSpace {
 public:
  /// Throws Error{InvalidArgument} on invalid (p, q).
  LensSpace(std::int64_t p, std::int64_t q);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  std::int64_t qbar() const noexcept { return qbar_; }
  friend bool operator==(const LensSpace&, const LensSpace&) = default;

  std::string to_string() const;

 private:
  std::int64_t p_;
  std::int64_t q_;
  std::int64_t qbar_;
};

/// lk(a[l_1], b[l_1]) = abq/p in Q/Z.
QmodZ linking_form(const LensSpace& lens, std::int64_t a, std::int64_t b);

/// Orientation-preserving homeomorphism: p = p' and q ≡ q' or qq' ≡ 1 (mod p).
bool homeomorphic(const LensSpace& l1, const LensSpace& l2);

/// Orientation-preserving homotopy equivalence: p = p' and qq' is a square
/// mod p.
bool homotopy_equivalent(const LensSpace& l1, const LensSpace& l2);

/// { n^2 q / p : 1 <= n < p }.
std::set<QmodZ> invariant_set(const LensSpace& lens);

/// (p, min(q, qbar)); equal exactly for homeomorphic lens spaces.
LensSpace normal_form(const LensSpace& lens);

}  // namespace lensknot
