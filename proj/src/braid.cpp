#include "lensknot/braid.hpp"

#include "lensknot/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace lensknot {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw Error(ErrorCode::InvalidArgument, "a braid needs at least one strand");
  for (int l : letters_) {
    if (l == 0 || std::abs(l) >= strands_)
      throw Error(ErrorCode::InvalidArgument,
                  "letter " + std::to_string(l) + " is not a generator of B_" + std::to_string(strands_));
  }
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (strands_ != rhs.strands_)
    throw Error(ErrorCode::InvalidArgument, "cannot concatenate braids on different strand counts");
  std::vector<int> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& l : out) l = -l;
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::power(int k) const {
  const BraidWord base = k < 0 ? inverse() : *this;
  std::vector<int> out;
  for (int i = 0; i < std::abs(k); ++i) out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return BraidWord(strands_, std::move(out));
}

std::string BraidWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

std::string BraidWord::canonical_key() const {
  std::string out = "n=" + std::to_string(strands_);
  for (int l : letters_) out += " " + std::to_string(l);
  return out;
}

BraidWord parse_braid(std::string_view text, int strands) {
  std::istringstream in{std::string(text)};
  std::string token;
  std::vector<int> letters;
  int declared = 0;
  bool first = true;
  while (in >> token) {
    if (first && token.rfind("n=", 0) == 0) {
      try {
        std::size_t used = 0;
        declared = std::stoi(token.substr(2), &used);
        if (used != token.size() - 2) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, "bad strand count '" + token + "'");
      }
      first = false;
      continue;
    }
    first = false;
    try {
      std::size_t used = 0;
      const int letter = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      letters.push_back(letter);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad braid letter '" + token + "'");
    }
  }
  if (strands > 0 && declared > 0 && strands != declared)
    throw Error(ErrorCode::InvalidArgument, "conflicting strand counts");
  int n = strands > 0 ? strands : declared;
  if (n == 0) {
    n = 1;
    for (int l : letters) n = std::max(n, std::abs(l) + 1);
  }
  return BraidWord(n, std::move(letters));
}

int closure_components(const BraidWord& w) {
  const int n = w.strands();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : w.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    std::swap(perm[i], perm[i + 1]);
  }
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (auto j = start; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
  }
  return cycles;
}

bool closure_is_split(const BraidWord& w) {
  std::vector<bool> used(static_cast<std::size_t>(w.strands()), false);
  for (int l : w.letters()) used[static_cast<std::size_t>(std::abs(l))] = true;
  for (int i = 1; i < w.strands(); ++i)
    if (!used[static_cast<std::size_t>(i)]) return true;
  return false;
}

SeifertMatrix seifert_matrix(const BraidWord& w) {
  if (closure_is_split(w))
    throw Error(ErrorCode::SplitClosure, "closure of " + w.canonical_key() + " is a split link");
  const auto& x = w.letters();
  const std::size_t len = x.size();

  // next[i]: position of the next letter on the same generator, or len.
  std::vector<std::size_t> next(len, len);
  std::vector<std::size_t> cycle_index(len, len);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      if (std::abs(x[j]) == std::abs(x[i])) {
        next[i] = j;
        break;
      }
    }
    if (next[i] != len) cycle_index[i] = cycles++;
  }

  SeifertMatrix v{std::vector<std::vector<int>>(cycles, std::vector<int>(cycles, 0))};
  for (std::size_t i = 0; i < len; ++i) {
    if (next[i] == len) continue;
    const std::size_t a = cycle_index[i];
    // Self-linking: the two bands of the cycle.
    if (x[i] > 0 && x[next[i]] > 0) v.entries[a][a] = -1;
    if (x[i] < 0 && x[next[i]] < 0) v.entries[a][a] = 1;

    for (std::size_t j = i + 1; j < len; ++j) {
      if (next[j] == len) continue;
      const std::size_t b = cycle_index[j];
      if (next[i] == j) {
        // Consecutive cycles on one generator sharing the band at j.
        if (x[j] > 0)
          v.entries[a][b] = 1;
        else
          v.entries[b][a] = -1;
        continue;
      }
      if (next[i] < j || next[i] > next[j]) continue;  // disjoint or nested
      // Interleaved spans on adjacent generators.
      const int gap = std::abs(x[i]) - std::abs(x[j]);
      if (gap == 1) v.entries[a][b] = -1;
      if (gap == -1) v.entries[b][a] = 1;
    }
  }
  return v;
}

LaurentPoly seifert_determinant(const SeifertMatrix& v) {
  const std::size_t n = v.size();
  const LaurentPoly u = LaurentPoly::monomial(1, 1);
  const LaurentPoly u_inv = LaurentPoly::monomial(1, -1);
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = u * LaurentPoly(v.entries[i][j]) - u_inv * LaurentPoly(v.entries[j][i]);
  return determinant(std::move(m));
}

LaurentPoly alexander_of_closure(const BraidWord& w) {
  if (closure_is_split(w)) return {};
  return seifert_determinant(seifert_matrix(w));
}

std::vector<std::vector<LaurentPoly>> reduced_burau(const BraidWord& w) {
  if (w.strands() < 2) throw Error(ErrorCode::InvalidArgument, "reduced Burau needs at least two strands");
  const int dim = w.strands() - 1;
  const auto d = static_cast<std::size_t>(dim);
  std::vector<std::vector<LaurentPoly>> b(d, std::vector<LaurentPoly>(d));
  for (std::size_t i = 0; i < d; ++i) b[i][i] = 1;

  const LaurentPoly t = LaurentPoly::t_power(1);
  const LaurentPoly t_inv = LaurentPoly::t_power(-1);
  for (int letter : w.letters()) {
    // 3×3 block on rows/columns i-2, i-1, i (0-based), clipped to the matrix.
    const std::vector<std::vector<LaurentPoly>> block =
        letter > 0 ? std::vector<std::vector<LaurentPoly>>{{1, t, 0}, {0, -t, 0}, {0, 1, 1}}
                   : std::vector<std::vector<LaurentPoly>>{{1, 1, 0}, {0, -t_inv, 0}, {0, t_inv, 1}};
    const int centre = std::abs(letter) - 1;
    // b <- b * M, where M differs from I only in columns centre-1..centre+1.
    std::vector<std::vector<LaurentPoly>> updated = b;
    for (int col = centre - 1; col <= centre + 1; ++col) {
      if (col < 0 || col >= dim) continue;
      for (std::size_t row = 0; row < d; ++row) {
        LaurentPoly sum;
        for (int k = centre - 1; k <= centre + 1; ++k) {
          if (k < 0 || k >= dim) continue;
          const auto& entry = block[static_cast<std::size_t>(k - centre + 1)][static_cast<std::size_t>(col - centre + 1)];
          if (!entry.is_zero()) sum += b[row][static_cast<std::size_t>(k)] * entry;
        }
        updated[row][static_cast<std::size_t>(col)] = sum;
      }
    }
    b = std::move(updated);
  }
  return b;
}

LaurentPoly burau_alexander_upto_units(const BraidWord& w) {
  auto b = reduced_burau(w);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) b[i][j] = (i == j ? LaurentPoly(1) : LaurentPoly()) - b[i][j];
  return determinant(std::move(b));
}

BraidWord crossing_change(const BraidWord& w, std::size_t pos) {
  if (pos >= w.length())
    throw Error(ErrorCode::OutOfRange, "crossing position " + std::to_string(pos) + " out of range");
  auto letters = w.letters();
  letters[pos] = -letters[pos];
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord delete_letter(const BraidWord& w, std::size_t pos) {
  if (pos >= w.length())
    throw Error(ErrorCode::OutOfRange, "letter position " + std::to_string(pos) + " out of range");
  auto letters = w.letters();
  letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(pos));
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord full_twist(int strands, int k) {
  if (strands < 2) throw Error(ErrorCode::InvalidArgument, "a full twist needs at least two strands");
  std::vector<int> row(static_cast<std::size_t>(strands - 1));
  std::iota(row.begin(), row.end(), 1);
  // The full twist is central and (σ_1⋯σ_{n-1})^{-n} = (σ_1^{-1}⋯σ_{n-1}^{-1})^n.
  std::vector<int> letters;
  for (int rep = 0; rep < std::abs(k) * strands; ++rep)
    for (int l : row) letters.push_back(k < 0 ? -l : l);
  return BraidWord(strands, std::move(letters));
}

PeriodicSpec::PeriodicSpec(BraidWord pattern_, ModulusSpec mod_, int q_)
    : pattern(std::move(pattern_)), mod(mod_), q(q_) {
  if (pattern.strands() < 2)
    throw Error(ErrorCode::InvalidArgument, "a periodic pattern needs at least two strands");
}

BraidWord periodic_closure(const PeriodicSpec& spec, TwistConvention convention) {
  const int twists = convention == TwistConvention::Standard ? -spec.q : spec.q;
  return spec.pattern.power(static_cast<int>(spec.mod.m())) * full_twist(spec.pattern.strands(), twists);
}

PeriodicSpec orbit_crossing_change(const PeriodicSpec& spec, std::size_t pos) {
  return PeriodicSpec(crossing_change(spec.pattern, pos), spec.mod, spec.q);
}

}  // namespace lensknot
