#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace lensknot {

using Integer = boost::multiprecision::cpp_int;

/// Laurent polynomial in t with integer coefficients, stored on the grid of
/// u = t^{1/2}. The u-exponent 2k is t^k; odd u-exponents are half-integer
/// powers of t, which is where Alexander polynomials of links with an even
/// number of components live.
///
/// Storage is dense between the lowest and highest nonzero term; both ends are
/// always nonzero, so the zero polynomial is the empty vector.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT: implicit, integers are polys
  explicit LaurentPoly(const Integer& constant);

  static LaurentPoly monomial(const Integer& coeff, int u_exponent);
  /// c·t^k, i.e. u-exponent 2k.
  static LaurentPoly t_power(int k, const Integer& coeff = 1);
  static LaurentPoly from_terms(const std::map<int, Integer>& terms);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Only meaningful when !is_zero().
  int min_exponent() const noexcept { return low_; }
  int max_exponent() const noexcept {
    return low_ + static_cast<int>(coeffs_.size()) - 1;
  }
  Integer coeff(int u_exponent) const;
  std::map<int, Integer> terms() const;
  std::size_t term_count() const;

  template <class F>
  void for_each_term(F&& f) const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) f(low_ + static_cast<int>(i), coeffs_[i]);
  }

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly pow(unsigned k) const;
  /// Multiplication by u^k.
  LaurentPoly shifted(int u_shift) const;
  /// t -> t^{-1}, i.e. every u-exponent negated.
  LaurentPoly inverted() const;
  /// Value at t = 1 (sum of coefficients).
  Integer value_at_one() const;

  /// Canonical text, ascending exponent: "t^-1 - 1 + t", "t^-1/2 - t^1/2".
  std::string to_string() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<Integer> coeffs_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient q with a = b·q. Throws Error{DivisionByZero} for b = 0 and
/// Error{NonExactDivision} when no Laurent polynomial quotient exists.
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Parses the canonical text form. Accepts "c*t^e", "t^e", "c", with e an
/// integer or k/2, terms joined by + and -. Throws Error{Parse}.
LaurentPoly parse_laurent(std::string_view text);

/// True when a = ±u^k·b for some k.
bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b);

/// z = t^{-1/2} - t^{1/2} as a LaurentPoly.
LaurentPoly conway_variable();

/// Ordinary polynomial in z, coefficient of z^k at index k. Used for ∇.
class ConwayPoly {
 public:
  ConwayPoly() = default;
  explicit ConwayPoly(std::vector<Integer> coeffs);

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  friend bool operator==(const ConwayPoly&, const ConwayPoly&) = default;

  /// Descending powers of z: "z^2 + 1".
  std::string to_string() const;

 private:
  std::vector<Integer> coeffs_;
};

/// Δ(t) = ∇(t^{-1/2} - t^{1/2}).
LaurentPoly substitute_z(const ConwayPoly& conway);

/// Inverse of substitute_z. Throws Error{InvalidArgument} if the polynomial
/// is not in the image (lacks the (-1)^{c-1} symmetry).
ConwayPoly conway_from_alexander(const LaurentPoly& delta);

/// Determinant over Z[t^{±1/2}] by fraction-free (Bareiss) elimination.
/// The matrix is square, row-major.
LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m);

/// The ideal (t^m - 1, r) with m = r^s and r prime.
class ModulusSpec {
 public:
  /// Throws Error{InvalidArgument} unless r is prime and s >= 1.
  ModulusSpec(std::int64_t r, int s);

  std::int64_t r() const noexcept { return r_; }
  int s() const noexcept { return s_; }
  std::int64_t m() const noexcept { return m_; }
  friend bool operator==(const ModulusSpec&, const ModulusSpec&) = default;

 private:
  std::int64_t r_;
  int s_;
  std::int64_t m_;
};

bool is_prime(std::int64_t n);

/// Element of Z/r[u]/(u^{2m} - 1): u-exponents in [0, 2m), coefficients in
/// [0, r).
class Residue {
 public:
  explicit Residue(const ModulusSpec& mod);

  const ModulusSpec& modulus() const noexcept { return mod_; }
  /// Coefficient of u^e for e in [0, 2m).
  std::int64_t coeff(std::int64_t u_exponent) const;
  std::map<std::int64_t, std::int64_t> terms() const;
  bool is_zero() const;

  Residue& add_term(std::int64_t u_exponent, std::int64_t coeff);
  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  friend bool operator==(const Residue&, const Residue&) = default;

  std::string to_string() const;

 private:
  ModulusSpec mod_;
  std::vector<std::int64_t> coeffs_;
};

Residue reduce_mod(const LaurentPoly& p, const ModulusSpec& mod);

}  // namespace lensknot
