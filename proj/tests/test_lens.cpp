#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lensknot/error.hpp"
#include "lensknot/lens.hpp"

#include <numeric>
#include <vector>

using namespace lensknot;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Internal;
}

std::vector<LensSpace> all_lens_spaces(std::int64_t p) {
  std::vector<LensSpace> out;
  for (std::int64_t q = 1; q < p; ++q)
    if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  return out;
}

// Linking forms q/p and q'/p are isometric iff q' = k^2 q for some unit k.
bool isometric_oracle(const LensSpace& a, const LensSpace& b) {
  if (a.p() != b.p()) return false;
  for (std::int64_t k = 1; k < a.p(); ++k)
    if (std::gcd(k, a.p()) == 1 && (k * k % a.p()) * a.q() % a.p() == b.q()) return true;
  return false;
}

}  // namespace

TEST_CASE("QmodZ normalization") {
  CHECK(QmodZ(3, 6).to_string() == "1/2");
  CHECK(QmodZ(7, 5).to_string() == "2/5");
  CHECK(QmodZ(-1, 5).to_string() == "4/5");
  CHECK(QmodZ(5, 5).to_string() == "0");
  CHECK(QmodZ(0, 9) == QmodZ());
  CHECK(QmodZ(1, 7) < QmodZ(2, 7));
  CHECK(code_of([] { QmodZ(1, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(2, 5) == 3);
  CHECK(mod_inverse(1, 9) == 1);
  CHECK(mod_inverse(3, 8) == 3);
  CHECK(mod_inverse(-2, 5) == 2);
  CHECK(mod_inverse(0, 1) == 0);
  CHECK(code_of([] { mod_inverse(2, 4); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { mod_inverse(1, 0); }) == ErrorCode::InvalidArgument);
  for (std::int64_t p = 2; p <= 60; ++p)
    for (std::int64_t a = 1; a < p; ++a)
      if (std::gcd(a, p) == 1) {
        const std::int64_t inv = mod_inverse(a, p);
        CHECK(inv >= 0);
        CHECK(inv < p);
        CHECK(a * inv % p == 1);
      }
}

TEST_CASE("lens space construction") {
  const LensSpace l(7, 2);
  CHECK(l.qbar() == 4);
  CHECK(l.to_string() == "L(7,2)");
  CHECK(LensSpace(1, 0).p() == 1);
  CHECK(code_of([] { LensSpace(6, 2); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { LensSpace(5, 5); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { LensSpace(5, 0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { LensSpace(0, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("linking form") {
  CHECK(linking_form(LensSpace(5, 1), 1, 1) == QmodZ(1, 5));
  CHECK(linking_form(LensSpace(7, 2), 3, 3) == QmodZ(4, 7));
  CHECK(linking_form(LensSpace(7, 2), 0, 5) == QmodZ());
  CHECK(linking_form(LensSpace(9, 2), 3, 3) == QmodZ(0, 1));
  CHECK(linking_form(LensSpace(9, 2), -1, 1) == QmodZ(7, 9));
  // lk(l1, l1) = q/p and bilinearity.
  for (std::int64_t p = 2; p <= 30; ++p)
    for (const auto& l : all_lens_spaces(p)) {
      CHECK(linking_form(l, 1, 1) == QmodZ(l.q(), p));
      for (std::int64_t a = 0; a < p; ++a) {
        CHECK(linking_form(l, a, 2) == linking_form(l, 2 * a, 1));
        CHECK(linking_form(l, a + p, 1) == linking_form(l, a, 1));
      }
    }
}

TEST_CASE("classification examples") {
  CHECK_FALSE(homeomorphic(LensSpace(7, 1), LensSpace(7, 2)));
  CHECK(homeomorphic(LensSpace(7, 2), LensSpace(7, 4)));
  CHECK(homeomorphic(LensSpace(5, 2), LensSpace(5, 3)));
  CHECK_FALSE(homeomorphic(LensSpace(5, 1), LensSpace(7, 1)));
  // Orientation matters: L(5,1) and L(5,4) are not orientation-preservingly homeomorphic.
  CHECK_FALSE(homeomorphic(LensSpace(5, 1), LensSpace(5, 4)));

  CHECK(homotopy_equivalent(LensSpace(7, 1), LensSpace(7, 2)));
  CHECK(homotopy_equivalent(LensSpace(7, 1), LensSpace(7, 1)));
  CHECK_FALSE(homotopy_equivalent(LensSpace(5, 1), LensSpace(5, 2)));
  CHECK_FALSE(homotopy_equivalent(LensSpace(5, 1), LensSpace(6, 1)));

  CHECK(invariant_set(LensSpace(5, 1)) == std::set<QmodZ>{QmodZ(1, 5), QmodZ(4, 5)});
  CHECK(invariant_set(LensSpace(2, 1)) == std::set<QmodZ>{QmodZ(1, 2)});
  CHECK(invariant_set(LensSpace(7, 1)) == std::set<QmodZ>{QmodZ(1, 7), QmodZ(2, 7), QmodZ(4, 7)});
  CHECK(invariant_set(LensSpace(1, 0)).empty());

  CHECK(normal_form(LensSpace(7, 4)) == LensSpace(7, 2));
  CHECK(normal_form(LensSpace(5, 2)) == LensSpace(5, 2));
  CHECK(normal_form(LensSpace(11, 1)) == LensSpace(11, 1));
}

TEST_CASE("classification properties for p <= 50") {
  for (std::int64_t p = 2; p <= 50; ++p) {
    const auto spaces = all_lens_spaces(p);
    for (const auto& a : spaces) {
      CHECK(homeomorphic(a, a));
      CHECK(normal_form(normal_form(a)) == normal_form(a));
      for (const auto& b : spaces) {
        const bool h = homeomorphic(a, b);
        CHECK(h == homeomorphic(b, a));
        CHECK(h == (normal_form(a) == normal_form(b)));
        CHECK(h == (b.q() == a.q() || b.q() == a.qbar()));
        const bool he = homotopy_equivalent(a, b);
        CHECK(he == isometric_oracle(a, b));
        if (h) CHECK(he);
        if (he) CHECK(invariant_set(a) == invariant_set(b));
        for (const auto& c : spaces)
          if (h && homeomorphic(b, c)) CHECK(homeomorphic(a, c));
      }
    }
  }
}
