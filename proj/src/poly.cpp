#include "lensknot/poly.hpp"

#include "lensknot/error.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <utility>

namespace lensknot {

namespace {

// "k" for even u-exponents 2k, "e/2" for odd ones.
std::string t_exponent_text(long long u_exponent) {
  if (u_exponent % 2 == 0) return std::to_string(u_exponent / 2);
  return std::to_string(u_exponent) + "/2";
}

// Appends one signed term in the canonical style. `var` is "t" or "z";
// `exp_text` is empty for the constant term.
void append_term(std::string& out, const Integer& c, const std::string& var,
                 const std::string& exp_text, bool first) {
  const bool negative = c < 0;
  const Integer mag = negative ? Integer(-c) : c;
  if (first)
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (exp_text.empty()) {
    out += mag.str();
    return;
  }
  if (mag != 1) out += mag.str() + "*";
  out += var;
  if (exp_text != "1") out += "^" + exp_text;
}

}  // namespace

LaurentPoly::LaurentPoly(long long constant) : LaurentPoly(Integer(constant)) {}

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

LaurentPoly LaurentPoly::monomial(const Integer& coeff, int u_exponent) {
  LaurentPoly p(coeff);
  if (!p.is_zero()) p.low_ = u_exponent;
  return p;
}

LaurentPoly LaurentPoly::t_power(int k, const Integer& coeff) {
  return monomial(coeff, 2 * k);
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, Integer>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(c, e);
  return p;
}

Integer LaurentPoly::coeff(int u_exponent) const {
  if (is_zero() || u_exponent < low_ || u_exponent > max_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(u_exponent - low_)];
}

std::map<int, Integer> LaurentPoly::terms() const {
  std::map<int, Integer> out;
  for_each_term([&](int e, const Integer& c) { out.emplace(e, c); });
  return out;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(
      coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return !c.is_zero(); }));
}

void LaurentPoly::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const Integer& c) { return !c.is_zero(); });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back().is_zero()) coeffs_.pop_back();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(low_, rhs.low_);
  const int hi = std::max(max_exponent(), rhs.max_exponent());
  if (lo < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Integer(0));
  low_ = lo;
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[static_cast<std::size_t>(rhs.low_ - lo) + i] += rhs.coeffs_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  return *this += -rhs;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly out;
  out.low_ = a.low_ + b.low_;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  std::vector<std::size_t> b_support;
  for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
    if (!b.coeffs_[j].is_zero()) b_support.push_back(j);
  Integer prod;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j : b_support) {
      prod = a.coeffs_[i];
      prod *= b.coeffs_[j];
      out.coeffs_[i + j] += prod;
    }
  }
  out.trim();
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  return *this = *this * rhs;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (k != 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k != 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(int u_shift) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.low_ += u_shift;
  return out;
}

LaurentPoly LaurentPoly::inverted() const {
  if (is_zero()) return {};
  LaurentPoly out;
  out.low_ = -max_exponent();
  out.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return out;
}

Integer LaurentPoly::value_at_one() const {
  Integer sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for_each_term([&](int e, const Integer& c) {
    append_term(out, c, "t", e == 0 ? "" : t_exponent_text(e), first);
    first = false;
  });
  return out;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
  if (a.is_zero()) return {};
  const int q_low = a.min_exponent() - b.min_exponent();
  const int q_high = a.max_exponent() - b.max_exponent();
  if (q_high < q_low) throw Error(ErrorCode::NonExactDivision, "polynomial division is not exact");

  const int a_low = a.min_exponent();
  std::vector<Integer> rem(static_cast<std::size_t>(a.max_exponent() - a_low + 1));
  a.for_each_term([&](int e, const Integer& c) { rem[static_cast<std::size_t>(e - a_low)] = c; });
  std::vector<std::pair<int, Integer>> divisor;
  b.for_each_term([&](int e, const Integer& c) { divisor.emplace_back(e, c); });
  const Integer& lead = divisor.back().second;
  const int b_high = b.max_exponent();

  std::map<int, Integer> quotient;
  Integer qc;
  Integer r;
  Integer prod;
  for (int qe = q_high; qe >= q_low; --qe) {
    const Integer& top = rem[static_cast<std::size_t>(qe + b_high - a_low)];
    if (top.is_zero()) continue;
    divide_qr(top, lead, qc, r);
    if (!r.is_zero()) throw Error(ErrorCode::NonExactDivision, "polynomial division is not exact");
    for (const auto& [e, c] : divisor) {
      prod = qc;
      prod *= c;
      rem[static_cast<std::size_t>(qe + e - a_low)] -= prod;
    }
    quotient.emplace(qe, qc);
  }
  for (const auto& c : rem)
    if (!c.is_zero()) throw Error(ErrorCode::NonExactDivision, "polynomial division is not exact");
  return LaurentPoly::from_terms(quotient);
}

bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const LaurentPoly aligned = b.shifted(a.min_exponent() - b.min_exponent());
  return a == aligned || a == -aligned;
}

namespace {

class LaurentParser {
 public:
  explicit LaurentParser(std::string text) : s_(std::move(text)) {}

  LaurentPoly parse() {
    if (s_.empty()) fail("empty polynomial");
    LaurentPoly out;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected + or -");
      }
      out += parse_term(sign);
      first = false;
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::Parse, "cannot parse polynomial '" + s_ + "': " + why);
  }

  Integer parse_unsigned() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(s_.substr(start, pos_ - start));
  }

  LaurentPoly parse_term(int sign) {
    Integer coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_unsigned();
      have_coeff = true;
      if (peek() == '*') {
        ++pos_;
        if (peek() != 't') fail("expected t after *");
      }
    }
    int u_exp = 0;
    if (peek() == 't') {
      ++pos_;
      u_exp = 2;
      if (peek() == '^') {
        ++pos_;
        int esign = 1;
        if (peek() == '-' || peek() == '+') {
          esign = peek() == '-' ? -1 : 1;
          ++pos_;
        }
        const Integer num = parse_unsigned();
        if (num > 1'000'000'000) fail("exponent too large");
        const int k = esign * num.convert_to<int>();
        if (peek() == '/') {
          ++pos_;
          if (parse_unsigned() != 2) fail("only halves are allowed as fractional exponents");
          u_exp = k;
        } else {
          u_exp = 2 * k;
        }
      }
    } else if (!have_coeff) {
      fail("expected a term");
    }
    return LaurentPoly::monomial(sign * coeff, u_exp);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text) {
  std::string compact;
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN is accepted as '-'.
    if (text.substr(i, 3) == "\xE2\x88\x92") {
      compact += '-';
      i += 2;
    } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      compact += text[i];
    }
  }
  return LaurentParser(compact).parse();
}

LaurentPoly conway_variable() {
  return LaurentPoly::monomial(1, -1) - LaurentPoly::monomial(1, 1);
}

ConwayPoly::ConwayPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::string ConwayPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    append_term(out, coeffs_[k], "z", k == 0 ? "" : std::to_string(k), first);
    first = false;
  }
  return out;
}

LaurentPoly substitute_z(const ConwayPoly& conway) {
  const LaurentPoly z = conway_variable();
  LaurentPoly out;
  LaurentPoly power(1);
  for (const auto& c : conway.coeffs()) {
    out += LaurentPoly(c) * power;
    power *= z;
  }
  return out;
}

ConwayPoly conway_from_alexander(const LaurentPoly& delta) {
  std::vector<Integer> coeffs;
  LaurentPoly rest = delta;
  const LaurentPoly z = conway_variable();
  while (!rest.is_zero()) {
    const int top = rest.max_exponent();
    if (top < 0)
      throw Error(ErrorCode::InvalidArgument,
                  "polynomial " + delta.to_string() + " is not a Conway-normalized Alexander polynomial");
    // z^k has leading term (-1)^k u^k.
    Integer c = rest.coeff(top);
    if (top % 2 != 0) c = -c;
    coeffs.resize(std::max(coeffs.size(), static_cast<std::size_t>(top) + 1));
    coeffs[static_cast<std::size_t>(top)] = c;
    rest -= LaurentPoly(c) * z.pow(static_cast<unsigned>(top));
  }
  return ConwayPoly(std::move(coeffs));
}

LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  if (n == 0) return LaurentPoly(1);

  bool negate = false;
  LaurentPoly prev_pivot(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = m[k][k] * m[i][j];
        if (!m[i][k].is_zero() && !m[k][j].is_zero()) num -= m[i][k] * m[k][j];
        m[i][j] = div_exact(num, prev_pivot);
      }
      m[i][k] = LaurentPoly();
    }
    prev_pivot = m[k][k];
  }
  LaurentPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ModulusSpec::ModulusSpec(std::int64_t r, int s) : r_(r), s_(s), m_(1) {
  if (!is_prime(r)) throw Error(ErrorCode::InvalidArgument, "modulus base " + std::to_string(r) + " is not prime");
  if (s < 1) throw Error(ErrorCode::InvalidArgument, "modulus exponent must be at least 1");
  constexpr std::int64_t kMaxPeriod = std::int64_t{1} << 24;
  for (int i = 0; i < s; ++i) {
    if (m_ > kMaxPeriod / r) throw Error(ErrorCode::InvalidArgument, "r^s is too large");
    m_ *= r;
  }
  if (r_ > (std::int64_t{1} << 31)) throw Error(ErrorCode::InvalidArgument, "modulus base too large");
}

Residue::Residue(const ModulusSpec& mod)
    : mod_(mod), coeffs_(static_cast<std::size_t>(2 * mod.m()), 0) {}

std::int64_t Residue::coeff(std::int64_t u_exponent) const {
  if (u_exponent < 0 || u_exponent >= 2 * mod_.m()) return 0;
  return coeffs_[static_cast<std::size_t>(u_exponent)];
}

std::map<std::int64_t, std::int64_t> Residue::terms() const {
  std::map<std::int64_t, std::int64_t> out;
  for (std::size_t e = 0; e < coeffs_.size(); ++e)
    if (coeffs_[e] != 0) out.emplace(static_cast<std::int64_t>(e), coeffs_[e]);
  return out;
}

bool Residue::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

Residue& Residue::add_term(std::int64_t u_exponent, std::int64_t coeff) {
  const std::int64_t period = 2 * mod_.m();
  const std::int64_t r = mod_.r();
  auto& slot = coeffs_[static_cast<std::size_t>(((u_exponent % period) + period) % period)];
  slot = (((slot + coeff) % r) + r) % r;
  return *this;
}

Residue operator+(const Residue& a, const Residue& b) {
  if (!(a.mod_ == b.mod_)) throw Error(ErrorCode::InvalidArgument, "residues over different moduli");
  Residue out = a;
  for (std::size_t e = 0; e < b.coeffs_.size(); ++e)
    if (b.coeffs_[e] != 0) out.add_term(static_cast<std::int64_t>(e), b.coeffs_[e]);
  return out;
}

Residue operator*(const Residue& a, const Residue& b) {
  if (!(a.mod_ == b.mod_)) throw Error(ErrorCode::InvalidArgument, "residues over different moduli");
  Residue out(a.mod_);
  const auto period = a.coeffs_.size();
  const std::int64_t r = a.mod_.r();
  for (std::size_t i = 0; i < period; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < period; ++j) {
      if (b.coeffs_[j] == 0) continue;
      auto& slot = out.coeffs_[(i + j) % period];
      slot = (slot + a.coeffs_[i] * b.coeffs_[j]) % r;
    }
  }
  return out;
}

std::string Residue::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (coeffs_[e] == 0) continue;
    const auto exp = static_cast<long long>(e);
    append_term(out, Integer(coeffs_[e]), "t", exp == 0 ? "" : t_exponent_text(exp), first);
    first = false;
  }
  return out;
}

Residue reduce_mod(const LaurentPoly& p, const ModulusSpec& mod) {
  Residue out(mod);
  const Integer r = mod.r();
  p.for_each_term([&](int e, const Integer& c) {
    Integer c_mod = c % r;
    out.add_term(e, c_mod.convert_to<std::int64_t>());
  });
  return out;
}

}  // namespace lensknot
