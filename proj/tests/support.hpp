// Test-only oracles and random generators. Nothing here calls the library's
// own determinant, division or reduction code, so agreement is meaningful.
#pragma once

#include "lensknot/braid.hpp"
#include "lensknot/poly.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

namespace testsupport {

using lensknot::BraidWord;
using lensknot::Integer;
using lensknot::LaurentPoly;

// Laplace expansion along the first row.
inline LaurentPoly cofactor_det(const std::vector<std::vector<LaurentPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  if (n == 1) return m[0][0];
  LaurentPoly total;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<LaurentPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    const LaurentPoly term = m[0][col] * cofactor_det(minor);
    if (col % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

// det(uV - u^{-1}V^T) by cofactor expansion.
inline LaurentPoly seifert_det_oracle(const std::vector<std::vector<int>>& v) {
  const std::size_t n = v.size();
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = LaurentPoly::monomial(v[i][j], 1) - LaurentPoly::monomial(v[j][i], -1);
  return cofactor_det(m);
}

// Ordinary polynomial in t, coefficient of t^i at index i.
using Dense = std::vector<std::int64_t>;

inline Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Dense one_minus_t_power(std::int64_t k) {
  Dense out(static_cast<std::size_t>(k) + 1, 0);
  out[0] = 1;
  out[static_cast<std::size_t>(k)] = -1;
  return out;
}

// Quotient of num by den as a power series truncated at deg(num) - deg(den);
// den has constant term 1, so each step is a single subtraction.
inline Dense series_divide(Dense num, const Dense& den) {
  const std::size_t qlen = num.size() - den.size() + 1;
  Dense quotient(qlen, 0);
  for (std::size_t i = 0; i < qlen; ++i) {
    const std::int64_t c = num[i];
    quotient[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (std::int64_t c : num)
    if (c != 0) throw std::logic_error("series division left a remainder");
  return quotient;
}

// Torus knot Alexander polynomial via power-series division, symmetrized.
inline LaurentPoly torus_series_oracle(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  if (a <= 1 || b <= 1) return LaurentPoly(1);
  const Dense num = dense_mul(one_minus_t_power(1), one_minus_t_power(a * b));
  const Dense den = dense_mul(one_minus_t_power(a), one_minus_t_power(b));
  const Dense q = series_divide(num, den);
  const auto g = static_cast<int>((a - 1) * (b - 1) / 2);
  std::map<int, Integer> terms;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i] != 0) terms[2 * (static_cast<int>(i) - g)] = q[i];
  return LaurentPoly::from_terms(terms);
}

// Coefficient of u^e in p reduced mod (u^{2m} - 1, r), computed term by term.
inline std::int64_t residue_oracle(const LaurentPoly& p, std::int64_t r, std::int64_t m, std::int64_t e) {
  const std::int64_t period = 2 * m;
  Integer sum = 0;
  p.for_each_term([&](int exp, const Integer& c) {
    if (((exp % period) + period) % period == ((e % period) + period) % period) sum += c;
  });
  Integer rem = sum % r;
  if (rem < 0) rem += r;
  return static_cast<std::int64_t>(rem);
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  // Sparse random Laurent polynomial on the half-integer grid.
  LaurentPoly poly(int max_terms = 5, int span = 6, int coeff = 5, bool half = true) {
    std::map<int, Integer> terms;
    const int count = uniform(0, max_terms);
    for (int i = 0; i < count; ++i) {
      int e = uniform(-span, span);
      if (!half) e *= 2;
      terms[e] += uniform(-coeff, coeff);
    }
    return LaurentPoly::from_terms(terms);
  }

  BraidWord braid(int min_strands, int max_strands, int min_len, int max_len) {
    const int n = uniform(min_strands, max_strands);
    const int len = n == 1 ? 0 : uniform(min_len, max_len);
    std::vector<int> letters;
    for (int i = 0; i < len; ++i) {
      const int g = uniform(1, n - 1);
      letters.push_back(uniform(0, 1) == 0 ? g : -g);
    }
    return BraidWord(n, std::move(letters));
  }

 private:
  std::mt19937_64 rng_;
};

// Replaces the letter at pos with +|x|, -|x|, or removes it.
inline BraidWord with_letter(const BraidWord& w, std::size_t pos, int sign) {
  auto letters = w.letters();
  const int g = letters[pos] < 0 ? -letters[pos] : letters[pos];
  if (sign == 0)
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(pos));
  else
    letters[pos] = sign * g;
  return BraidWord(w.strands(), std::move(letters));
}

inline LaurentPoly hopf_factor() {
  return LaurentPoly::monomial(1, -1) - LaurentPoly::monomial(1, 1);
}

}  // namespace testsupport
