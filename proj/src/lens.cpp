#include "lensknot/lens.hpp"

#include "lensknot/error.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace lensknot {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

// a·b mod p without overflow for |p| < 2^62.
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(mod_floor(a, p)) * mod_floor(b, p) % p);
}

}  // namespace

QmodZ::QmodZ(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0) throw Error(ErrorCode::InvalidArgument, "Q/Z denominator must be positive");
  num_ = mod_floor(numerator, denominator);
  den_ = denominator;
  const std::int64_t g = std::gcd(num_, den_);
  if (num_ == 0) {
    den_ = 1;
  } else {
    num_ /= g;
    den_ /= g;
  }
}

std::string QmodZ::to_string() const {
  if (num_ == 0) return "0";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  if (p < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  if (std::gcd(a, p) != 1)
    throw Error(ErrorCode::InvalidArgument,
                std::to_string(a) + " is not invertible modulo " + std::to_string(p));
  // Extended Euclid on (a mod p, p).
  std::int64_t old_r = mod_floor(a, p), r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    old_r = std::exchange(r, old_r - quot * r);
    old_s = std::exchange(s, old_s - quot * s);
  }
  return mod_floor(old_s, p);
}

LensSpace::LensSpace(std::int64_t p, std::int64_t q) : p_(p), q_(q), qbar_(0) {
  if (p < 1) throw Error(ErrorCode::InvalidArgument, "lens space needs p >= 1");
  const bool q_in_range = p == 1 ? q == 0 : (q >= 1 && q < p);
  if (!q_in_range)
    throw Error(ErrorCode::InvalidArgument,
                "L(" + std::to_string(p) + ", " + std::to_string(q) + "): q must satisfy 1 <= q < p");
  if (std::gcd(p, q) != 1)
    throw Error(ErrorCode::InvalidArgument,
                "L(" + std::to_string(p) + ", " + std::to_string(q) + "): p and q must be coprime");
  qbar_ = mod_inverse(q, p);
}

std::string LensSpace::to_string() const {
  return "L(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

QmodZ linking_form(const LensSpace& lens, std::int64_t a, std::int64_t b) {
  const std::int64_t p = lens.p();
  return QmodZ(mul_mod(mul_mod(a, b, p), lens.q(), p), p);
}

bool homeomorphic(const LensSpace& l1, const LensSpace& l2) {
  if (l1.p() != l2.p()) return false;
  const std::int64_t p = l1.p();
  return mod_floor(l1.q() - l2.q(), p) == 0 || mul_mod(l1.q(), l2.q(), p) == mod_floor(1, p);
}

bool homotopy_equivalent(const LensSpace& l1, const LensSpace& l2) {
  if (l1.p() != l2.p()) return false;
  const std::int64_t p = l1.p();
  const std::int64_t target = mul_mod(l1.q(), l2.q(), p);
  for (std::int64_t n = 0; n < p; ++n)
    if (mul_mod(n, n, p) == target) return true;
  return false;
}

std::set<QmodZ> invariant_set(const LensSpace& lens) {
  std::set<QmodZ> out;
  for (std::int64_t n = 1; n < lens.p(); ++n) out.insert(linking_form(lens, n, n));
  return out;
}

LensSpace normal_form(const LensSpace& lens) {
  return LensSpace(lens.p(), std::min(lens.q(), lens.qbar()));
}

}  // namespace lensknot
