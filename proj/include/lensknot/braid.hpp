#pragma once

#include "lensknot/poly.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lensknot {

/// A word in the braid group B_n. Letter +i is σ_i, -i is σ_i^{-1}.
class BraidWord {
 public:
  BraidWord() = default;
  /// Throws Error{InvalidArgument} if strands < 1 or some |letter| is 0 or
  /// not below strands.
  BraidWord(int strands, std::vector<int> letters);

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }

  /// Concatenation; both words must have the same strand count.
  BraidWord operator*(const BraidWord& rhs) const;
  BraidWord inverse() const;
  BraidWord power(int k) const;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  /// "1 1 -2"; the empty word renders as "".
  std::string to_string() const;
  /// Cache key form, "n=3 1 1 -2".
  std::string canonical_key() const;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

/// Whitespace-separated signed integers. A leading "n=K" token or a positive
/// `strands` argument fixes the strand count, otherwise max|letter| + 1.
/// Throws Error{Parse} or Error{InvalidArgument}.
BraidWord parse_braid(std::string_view text, int strands = 0);

/// Seifert matrix of the Bennequin surface of a braid closure: one disk per
/// strand, one band per letter, and one homology generator per consecutive
/// pair of letters on the same generator index.
struct SeifertMatrix {
  std::vector<std::vector<int>> entries;

  std::size_t size() const noexcept { return entries.size(); }
  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;
};

int closure_components(const BraidWord& w);

/// True when some generator σ_i (1 <= i < n) never occurs, so the closure
/// is a split link.
bool closure_is_split(const BraidWord& w);

/// Throws Error{SplitClosure} when closure_is_split(w).
SeifertMatrix seifert_matrix(const BraidWord& w);

/// det(t^{1/2} V - t^{-1/2} V^T).
LaurentPoly seifert_determinant(const SeifertMatrix& v);

/// Conway-normalized Alexander polynomial of the closure; 0 for split
/// closures.
LaurentPoly alexander_of_closure(const BraidWord& w);

/// det(I - B(t)) for the reduced Burau matrix B of w. Equals
/// Δ·(1 + t + ... + t^{n-1}) up to ±t^{k/2}. Requires strands >= 2.
LaurentPoly burau_alexander_upto_units(const BraidWord& w);

/// Reduced Burau image of w, an (n-1)×(n-1) matrix over Z[t^{±1}].
std::vector<std::vector<LaurentPoly>> reduced_burau(const BraidWord& w);

/// Flips the sign of the letter at pos. Throws Error{OutOfRange}.
BraidWord crossing_change(const BraidWord& w, std::size_t pos);

/// Removes the letter at pos (the oriented smoothing). Throws Error{OutOfRange}.
BraidWord delete_letter(const BraidWord& w, std::size_t pos);

/// ((σ_1 ⋯ σ_{n-1})^n)^k. Throws Error{InvalidArgument} for n < 2.
BraidWord full_twist(int strands, int k);

/// Which way the axis twists are appended in periodic_closure. The standard
/// convention appends full_twist(n, -q); the mirrored one full_twist(n, q).
enum class TwistConvention { Standard, Mirrored };

/// An r^s-periodic link presented as the closure of a pattern repeated r^s
/// times, together with 1/q surgery on the braid axis.
struct PeriodicSpec {
  BraidWord pattern;
  ModulusSpec mod;
  int q = 0;

  /// Throws Error{InvalidArgument} if pattern.strands() < 2.
  PeriodicSpec(BraidWord pattern, ModulusSpec mod, int q);
  friend bool operator==(const PeriodicSpec&, const PeriodicSpec&) = default;
};

BraidWord periodic_closure(const PeriodicSpec& spec,
                           TwistConvention convention = TwistConvention::Standard);

/// Negates the pattern letter at pos, which changes the whole Z_{r^s}-orbit
/// of that crossing in the periodic closure. Throws Error{OutOfRange}.
PeriodicSpec orbit_crossing_change(const PeriodicSpec& spec, std::size_t pos);

}  // namespace lensknot
