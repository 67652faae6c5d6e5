#include "lensknot/torus.hpp"

#include "lensknot/error.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>

namespace lensknot {

namespace {

int checked_int(std::int64_t v, const char* what) {
  if (v > std::numeric_limits<int>::max() / 2 || v < -(std::numeric_limits<int>::max() / 2))
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " is too large");
  return static_cast<int>(v);
}

}  // namespace

bool TorusParams::is_unknot() const noexcept {
  return std::abs(a) <= 1 || std::abs(b) <= 1;
}

BraidWord torus_braid(const TorusParams& tp) {
  if (tp.a == 0) throw Error(ErrorCode::InvalidArgument, "torus braid needs a != 0");
  const int strands = checked_int(std::abs(tp.a), "torus parameter a");
  const int twists = checked_int(tp.b, "torus parameter b");
  if (strands == 1) return BraidWord(1, {});
  std::vector<int> row;
  for (int i = 1; i < strands; ++i) row.push_back(i);
  return BraidWord(strands, row).power(twists);
}

LaurentPoly torus_alexander_closed(const TorusParams& tp) {
  if (tp.is_unknot()) return LaurentPoly(1);
  const std::int64_t a = std::abs(tp.a);
  const std::int64_t b = std::abs(tp.b);
  if (std::gcd(a, b) != 1)
    throw Error(ErrorCode::InvalidArgument,
                "T(" + std::to_string(tp.a) + ", " + std::to_string(tp.b) + ") is a torus link");
  const int ai = checked_int(a, "torus parameter a");
  const int bi = checked_int(b, "torus parameter b");
  const int ab = checked_int(a * b, "torus parameter product");
  const int genus = checked_int((a - 1) * (b - 1) / 2, "torus genus");

  const LaurentPoly one(1);
  const LaurentPoly numerator = (one - LaurentPoly::t_power(1)) * (one - LaurentPoly::t_power(ab));
  const LaurentPoly denominator = (one - LaurentPoly::t_power(ai)) * (one - LaurentPoly::t_power(bi));
  return div_exact(numerator, denominator).shifted(-2 * genus);
}

TorusParams lift_generator(std::int64_t p, std::int64_t q, std::int64_t n) {
  if (p < 1) throw Error(ErrorCode::InvalidArgument, "p must be positive");
  if (std::gcd(p, q) != 1)
    throw Error(ErrorCode::InvalidArgument, "gcd(p, q) must be 1");
  if (n < 1 || n >= p)
    throw Error(ErrorCode::InvalidArgument, "n must satisfy 1 <= n < p");
  if (std::gcd(n, p) != 1)
    throw Error(ErrorCode::InvalidArgument, "gcd(n, p) must be 1");
  return TorusParams{n, p - q * n};
}

}  // namespace lensknot
