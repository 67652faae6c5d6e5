#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lensknot/error.hpp"
#include "lensknot/torus.hpp"
#include "support.hpp"

#include <numeric>

using namespace lensknot;

namespace {

LaurentPoly P(const char* s) { return parse_laurent(s); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("torus braids") {
  CHECK(torus_braid({2, 3}) == parse_braid("1 1 1"));
  CHECK(torus_braid({3, 5}) == parse_braid("1 2").power(5));
  const BraidWord unknot = torus_braid({1, 7});
  CHECK(unknot.strands() == 1);
  CHECK(unknot.length() == 0);
  CHECK(torus_braid({2, -3}) == parse_braid("-1 -1 -1"));
  CHECK(torus_braid({-3, 2}).strands() == 3);
  CHECK(code_of([] { torus_braid({0, 3}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("closed form examples") {
  CHECK(torus_alexander_closed({2, 3}) == P("t^-1 - 1 + t"));
  CHECK(torus_alexander_closed({2, 5}) == P("t^-2 - t^-1 + 1 - t + t^2"));
  CHECK(torus_alexander_closed({3, 5}) == P("t^-4 - t^-3 + t^-1 - 1 + t - t^3 + t^4"));
  CHECK(torus_alexander_closed({1, 9}) == LaurentPoly(1));
  CHECK(torus_alexander_closed({3, -1}) == LaurentPoly(1));
  CHECK(torus_alexander_closed({0, 5}) == LaurentPoly(1));
  CHECK(torus_alexander_closed({-2, 3}) == torus_alexander_closed({2, 3}));
  CHECK(torus_alexander_closed({3, -2}) == torus_alexander_closed({2, 3}));
  CHECK(code_of([] { torus_alexander_closed({2, 4}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { torus_alexander_closed({6, -9}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("closed form agrees with power-series oracle") {
  for (std::int64_t a = 2; a <= 12; ++a)
    for (std::int64_t b = a + 1; b <= 15; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const LaurentPoly closed = torus_alexander_closed({a, b});
      CHECK(closed == testsupport::torus_series_oracle(a, b));
      CHECK(closed == torus_alexander_closed({b, a}));
      CHECK(closed.value_at_one() == 1);
      CHECK(closed.inverted() == closed);
      // Degree span is the genus on each side.
      CHECK(closed.max_exponent() == (a - 1) * (b - 1));
    }
}

TEST_CASE("closed form agrees with braid pipeline for small torus knots") {
  for (std::int64_t a = 2; a <= 4; ++a)
    for (std::int64_t b = a + 1; a * b <= 40; ++b) {
      if (std::gcd(a, b) != 1) continue;
      CHECK(alexander_of_closure(torus_braid({a, b})) == torus_alexander_closed({a, b}));
      CHECK(alexander_of_closure(torus_braid({a, -b})) == torus_alexander_closed({a, b}));
    }
}

TEST_CASE("lift generator") {
  CHECK(lift_generator(5, 1, 2) == TorusParams{2, 3});
  CHECK(lift_generator(7, 2, 3) == TorusParams{3, 1});
  CHECK(lift_generator(8, 1, 3) == TorusParams{3, 5});
  CHECK(lift_generator(5, 2, 3) == TorusParams{3, -1});
  CHECK(lift_generator(5, 2, 3).is_unknot());
  CHECK_FALSE(lift_generator(8, 1, 3).is_unknot());
  // The lift of l_1 itself (n = 1) is always trivial.
  for (std::int64_t p = 2; p <= 30; ++p)
    for (std::int64_t q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) CHECK(lift_generator(p, q, 1).is_unknot());

  CHECK(code_of([] { lift_generator(6, 2, 1); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { lift_generator(6, 1, 2); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { lift_generator(6, 1, 7); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { lift_generator(0, 1, 1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("lifts are knots") {
  // gcd(n, p - qn) = gcd(n, p) = 1, so every lift has a closed form.
  for (std::int64_t p = 2; p <= 20; ++p)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t n = 1; n < p; ++n) {
        if (std::gcd(n, p) != 1) continue;
        const TorusParams tp = lift_generator(p, q, n);
        CHECK(torus_alexander_closed(tp).value_at_one() == 1);
      }
    }
}
