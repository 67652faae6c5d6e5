#include "lensknot/obstruction.hpp"

#include "lensknot/error.hpp"

#include <numeric>

namespace lensknot {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

std::int64_t square_mod(std::int64_t a, std::int64_t m) {
  const auto r = static_cast<__int128>(mod_floor(a, m));
  return static_cast<std::int64_t>(r * r % m);
}

void check_triple(std::int64_t p, std::int64_t q, std::int64_t n) {
  // lift_generator carries the full precondition set.
  (void)lift_generator(p, q, n);
}

}  // namespace

std::string to_string(Branch b) {
  switch (b) {
    case Branch::Unit: return "UNIT";
    case Branch::Qbar: return "QBAR";
    case Branch::Both: return "BOTH";
    case Branch::Neither: return "NEITHER";
  }
  return "?";
}

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::UnitSquare: return "n^2=1";
    case Conclusion::QbarSquare: return "n^2=qbar^2";
    case Conclusion::Mixed: return "MIXED";
    case Conclusion::Excluded: return "EXCLUDED";
  }
  return "?";
}

std::vector<ModulusSpec> maximal_prime_powers(std::int64_t p) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "prime-power factorization needs p >= 2");
  std::vector<ModulusSpec> out;
  std::int64_t rest = p;
  for (std::int64_t r = 2; r * r <= rest; ++r) {
    int s = 0;
    while (rest % r == 0) {
      rest /= r;
      ++s;
    }
    if (s > 0) out.emplace_back(r, s);
  }
  if (rest > 1) out.emplace_back(rest, 1);
  return out;
}

bool theorem1_congruence(std::int64_t p, std::int64_t q, std::int64_t n, const ModulusSpec& mod) {
  check_triple(p, q, n);
  if (p % mod.m() != 0)
    throw Error(ErrorCode::InvalidArgument,
                std::to_string(mod.m()) + " does not divide " + std::to_string(p));
  const LaurentPoly delta = torus_alexander_closed(lift_generator(p, q, n));
  return reduce_mod(delta, mod) == reduce_mod(LaurentPoly(1), mod);
}

Branch theorem1_predicate(std::int64_t n, std::int64_t q, const ModulusSpec& mod) {
  const std::int64_t r = mod.r();
  if (mod_floor(q, r) == 0 || mod_floor(n, r) == 0)
    throw Error(ErrorCode::InvalidArgument, "n and q must be prime to " + std::to_string(r));
  const std::int64_t m = mod.m();
  const bool unit = square_mod(n, m) == 1 % m;
  const std::int64_t nq = static_cast<std::int64_t>(static_cast<__int128>(mod_floor(n, m)) * mod_floor(q, m) % m);
  const bool qbar = square_mod(nq, m) == 1 % m;
  if (unit && qbar) return Branch::Both;
  if (unit) return Branch::Unit;
  if (qbar) return Branch::Qbar;
  return Branch::Neither;
}

ObstructionReport obstruction_report(std::int64_t p, std::int64_t q, std::int64_t n) {
  const TorusParams lift = lift_generator(p, q, n);
  const LaurentPoly delta = torus_alexander_closed(lift);
  const LaurentPoly one(1);

  std::vector<FactorResult> factors;
  bool excluded = false;
  for (const auto& mod : maximal_prime_powers(p)) {
    const Branch branch = theorem1_predicate(n, q, mod);
    factors.push_back(FactorResult{mod, reduce_mod(delta, mod) == reduce_mod(one, mod), branch});
    excluded = excluded || branch == Branch::Neither;
  }

  const LensSpace lens(p, mod_floor(q, p));
  Conclusion conclusion = Conclusion::Mixed;
  if (excluded)
    conclusion = Conclusion::Excluded;
  else if (square_mod(n, p) == 1 % p)
    conclusion = Conclusion::UnitSquare;
  else if (square_mod(n, p) == square_mod(lens.qbar(), p))
    conclusion = Conclusion::QbarSquare;

  return ObstructionReport{p, q, n, lift, delta, std::move(factors), conclusion, linking_form(lens, n, n)};
}

Lemma4Check lemma4_check(const PeriodicSpec& spec, std::size_t pos, TwistConvention convention) {
  const PeriodicSpec changed_spec = orbit_crossing_change(spec, pos);
  BraidWord original = periodic_closure(spec, convention);
  BraidWord changed = periodic_closure(changed_spec, convention);
  LaurentPoly original_alexander = alexander_of_closure(original);
  LaurentPoly changed_alexander = alexander_of_closure(changed);
  Residue original_residue = reduce_mod(original_alexander, spec.mod);
  Residue changed_residue = reduce_mod(changed_alexander, spec.mod);
  return Lemma4Check{std::move(original),          std::move(changed),
                     std::move(original_alexander), std::move(changed_alexander),
                     std::move(original_residue),   std::move(changed_residue)};
}

bool lemma4_verify(const PeriodicSpec& spec, std::size_t pos, TwistConvention convention) {
  return lemma4_check(spec, pos, convention).holds();
}

}  // namespace lensknot
