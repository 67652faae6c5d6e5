#pragma once

#include "lensknot/braid.hpp"
#include "lensknot/lens.hpp"
#include "lensknot/poly.hpp"
#include "lensknot/torus.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lensknot {

/// Which square class n^2 falls in modulo r^s.
enum class Branch { Unit, Qbar, Both, Neither };

/// Conclusion about the class n taken modulo p as a whole.
enum class Conclusion {
  UnitSquare,  // n^2 ≡ 1 (mod p)
  QbarSquare,  // n^2 ≡ qbar^2 (mod p)
  Mixed,       // each factor has a branch, but no single branch holds mod p
  Excluded,    // some factor is NEITHER
};

std::string to_string(Branch b);
std::string to_string(Conclusion c);

struct FactorResult {
  ModulusSpec mod;
  bool congruence_holds;
  Branch branch;
};

struct ObstructionReport {
  std::int64_t p;
  std::int64_t q;
  std::int64_t n;
  TorusParams lift;
  LaurentPoly lift_alexander;
  std::vector<FactorResult> per_factor;
  Conclusion conclusion;
  QmodZ linking;  // n^2 q / p
};

/// One (r, s) per prime r dividing p, with r^s the exact power of r in p.
/// Throws Error{InvalidArgument} for p < 2.
std::vector<ModulusSpec> maximal_prime_powers(std::int64_t p);

/// Whether the Alexander polynomial of the lift T(n, p - qn) of K_n reduces
/// to 1 modulo (t^{r^s} - 1, r). Requires r^s | p.
bool theorem1_congruence(std::int64_t p, std::int64_t q, std::int64_t n, const ModulusSpec& mod);

/// n^2 ≡ 1 and/or n^2 q^2 ≡ 1 modulo r^s. Requires gcd(q, r) = gcd(n, r) = 1.
Branch theorem1_predicate(std::int64_t n, std::int64_t q, const ModulusSpec& mod);

ObstructionReport obstruction_report(std::int64_t p, std::int64_t q, std::int64_t n);

struct Lemma4Check {
  BraidWord original;  // periodic closure of the input pattern
  BraidWord changed;   // periodic closure after the orbit crossing change
  LaurentPoly original_alexander;
  LaurentPoly changed_alexander;
  Residue original_residue;
  Residue changed_residue;

  bool holds() const { return original_residue == changed_residue; }
};

Lemma4Check lemma4_check(const PeriodicSpec& spec, std::size_t pos,
                         TwistConvention convention = TwistConvention::Standard);

/// Δ of both periodic closures agree modulo (t^{r^s} - 1, r).
bool lemma4_verify(const PeriodicSpec& spec, std::size_t pos,
                   TwistConvention convention = TwistConvention::Standard);

}  // namespace lensknot
