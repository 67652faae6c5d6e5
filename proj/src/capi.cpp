#include "lensknot/lensknot.h"

#include "lensknot/braid.hpp"
#include "lensknot/error.hpp"
#include "lensknot/lens.hpp"
#include "lensknot/obstruction.hpp"
#include "lensknot/poly.hpp"
#include "lensknot/torus.hpp"
#include "lensknot/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

using namespace lensknot;

struct lk_poly {
  LaurentPoly value;
};

struct lk_residue {
  Residue value;
};

struct lk_braid {
  BraidWord value;
};

struct lk_report {
  ObstructionReport value;
};

struct lk_lemma4 {
  Lemma4Check value;
};

struct lk_cache {
  AlexanderCache value;
};

struct lk_verify_result {
  lk_verify_summary summary{};
  std::vector<std::string> violations;
};

namespace {

thread_local std::string g_last_error;

lk_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return LK_ERR_INVALID_ARGUMENT;
    case ErrorCode::OutOfRange: return LK_ERR_OUT_OF_RANGE;
    case ErrorCode::DivisionByZero: return LK_ERR_DIVISION_BY_ZERO;
    case ErrorCode::NonExactDivision: return LK_ERR_NON_EXACT;
    case ErrorCode::SplitClosure: return LK_ERR_SPLIT_CLOSURE;
    case ErrorCode::Parse: return LK_ERR_PARSE;
    case ErrorCode::Io: return LK_ERR_IO;
    case ErrorCode::Internal: return LK_ERR_INTERNAL;
  }
  return LK_ERR_INTERNAL;
}

lk_status fail(lk_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
lk_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return LK_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LK_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LK_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LK_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

void require_side(int which) {
  if (which != 0 && which != 1) throw Error(ErrorCode::InvalidArgument, "which must be 0 or 1");
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

TwistConvention convention_of(lk_twist_convention c) {
  switch (c) {
    case LK_TWIST_STANDARD: return TwistConvention::Standard;
    case LK_TWIST_MIRRORED: return TwistConvention::Mirrored;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown twist convention");
}

lk_branch branch_of(Branch b) {
  switch (b) {
    case Branch::Unit: return LK_BRANCH_UNIT;
    case Branch::Qbar: return LK_BRANCH_QBAR;
    case Branch::Both: return LK_BRANCH_BOTH;
    case Branch::Neither: return LK_BRANCH_NEITHER;
  }
  return LK_BRANCH_NEITHER;
}

lk_conclusion conclusion_of(Conclusion c) {
  switch (c) {
    case Conclusion::UnitSquare: return LK_CONCLUSION_UNIT_SQUARE;
    case Conclusion::QbarSquare: return LK_CONCLUSION_QBAR_SQUARE;
    case Conclusion::Mixed: return LK_CONCLUSION_MIXED;
    case Conclusion::Excluded: return LK_CONCLUSION_EXCLUDED;
  }
  return LK_CONCLUSION_MIXED;
}

template <class Op>
lk_status poly_binary(const lk_poly* a, const lk_poly* b, lk_poly** out, Op op) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new lk_poly{op(a->value, b->value)};
  });
}

}  // namespace

extern "C" {

const char* lk_last_error(void) { return g_last_error.c_str(); }

const char* lk_status_name(lk_status status) {
  switch (status) {
    case LK_OK: return "ok";
    case LK_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LK_ERR_OUT_OF_RANGE: return "out of range";
    case LK_ERR_DIVISION_BY_ZERO: return "division by zero";
    case LK_ERR_NON_EXACT: return "non-exact division";
    case LK_ERR_SPLIT_CLOSURE: return "split closure";
    case LK_ERR_PARSE: return "parse error";
    case LK_ERR_IO: return "i/o error";
    case LK_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void lk_string_free(char* s) { std::free(s); }

const char* lk_version(void) { return "0.1.0"; }

// ---- polynomials ----

lk_status lk_poly_parse(const char* text, lk_poly** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new lk_poly{parse_laurent(text)};
  });
}

lk_status lk_poly_from_terms(const int* u_exponents, const int64_t* coeffs, size_t count, lk_poly** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) {
      require(u_exponents, "u_exponents");
      require(coeffs, "coeffs");
    }
    LaurentPoly p;
    for (size_t i = 0; i < count; ++i) p += LaurentPoly::monomial(Integer(coeffs[i]), u_exponents[i]);
    *out = new lk_poly{std::move(p)};
  });
}

lk_status lk_poly_clone(const lk_poly* p, lk_poly** out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = new lk_poly{p->value};
  });
}

void lk_poly_free(lk_poly* p) { delete p; }

lk_status lk_poly_to_string(const lk_poly* p, char** out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = dup_string(p->value.to_string());
  });
}

size_t lk_poly_term_count(const lk_poly* p) { return p == nullptr ? 0 : p->value.term_count(); }

lk_status lk_poly_term(const lk_poly* p, size_t index, int* u_exponent, char** coeff) {
  return guarded([&] {
    require(p, "p");
    require(u_exponent, "u_exponent");
    require(coeff, "coeff");
    size_t seen = 0;
    std::optional<std::pair<int, Integer>> found;
    p->value.for_each_term([&](int e, const Integer& c) {
      if (seen++ == index) found.emplace(e, c);
    });
    if (!found) throw Error(ErrorCode::OutOfRange, "term index out of range");
    *coeff = dup_string(found->second.str());
    *u_exponent = found->first;
  });
}

int lk_poly_equal(const lk_poly* a, const lk_poly* b) {
  return a != nullptr && b != nullptr && a->value == b->value ? 1 : 0;
}

int lk_poly_equal_up_to_units(const lk_poly* a, const lk_poly* b) {
  return a != nullptr && b != nullptr && equal_up_to_units(a->value, b->value) ? 1 : 0;
}

lk_status lk_poly_add(const lk_poly* a, const lk_poly* b, lk_poly** out) {
  return poly_binary(a, b, out, [](const LaurentPoly& x, const LaurentPoly& y) { return add(x, y); });
}

lk_status lk_poly_mul(const lk_poly* a, const lk_poly* b, lk_poly** out) {
  return poly_binary(a, b, out, [](const LaurentPoly& x, const LaurentPoly& y) { return mul(x, y); });
}

lk_status lk_poly_div_exact(const lk_poly* a, const lk_poly* b, lk_poly** out) {
  return poly_binary(a, b, out, [](const LaurentPoly& x, const LaurentPoly& y) { return div_exact(x, y); });
}

lk_status lk_poly_substitute_z(const int64_t* coeffs, size_t count, lk_poly** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) require(coeffs, "coeffs");
    std::vector<Integer> c;
    for (size_t i = 0; i < count; ++i) c.emplace_back(coeffs[i]);
    *out = new lk_poly{substitute_z(ConwayPoly(std::move(c)))};
  });
}

lk_status lk_poly_conway_string(const lk_poly* delta, char** out) {
  return guarded([&] {
    require(delta, "delta");
    require(out, "out");
    *out = dup_string(conway_from_alexander(delta->value).to_string());
  });
}

lk_status lk_poly_conway_degree(const lk_poly* delta, int* degree) {
  return guarded([&] {
    require(delta, "delta");
    require(degree, "degree");
    *degree = static_cast<int>(conway_from_alexander(delta->value).coeffs().size()) - 1;
  });
}

lk_status lk_poly_conway_coefficient(const lk_poly* delta, int k, char** coeff) {
  return guarded([&] {
    require(delta, "delta");
    require(coeff, "coeff");
    const auto conway = conway_from_alexander(delta->value);
    const bool in_range = k >= 0 && static_cast<size_t>(k) < conway.coeffs().size();
    *coeff = dup_string(in_range ? conway.coeffs()[static_cast<size_t>(k)].str() : "0");
  });
}

// ---- residues ----

lk_status lk_poly_reduce(const lk_poly* p, int64_t r, int s, lk_residue** out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = new lk_residue{reduce_mod(p->value, ModulusSpec(r, s))};
  });
}

void lk_residue_free(lk_residue* res) { delete res; }

lk_status lk_residue_to_string(const lk_residue* res, char** out) {
  return guarded([&] {
    require(res, "res");
    require(out, "out");
    *out = dup_string(res->value.to_string());
  });
}

int lk_residue_equal(const lk_residue* a, const lk_residue* b) {
  return a != nullptr && b != nullptr && a->value == b->value ? 1 : 0;
}

// ---- braids ----

lk_status lk_braid_parse(const char* text, int strands, lk_braid** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new lk_braid{parse_braid(text, strands > 0 ? strands : 0)};
  });
}

lk_status lk_braid_from_letters(int strands, const int* letters, size_t count, lk_braid** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) require(letters, "letters");
    *out = new lk_braid{BraidWord(strands, std::vector<int>(letters, letters + count))};
  });
}

void lk_braid_free(lk_braid* b) { delete b; }

lk_status lk_braid_to_string(const lk_braid* b, char** out) {
  return guarded([&] {
    require(b, "b");
    require(out, "out");
    *out = dup_string(b->value.to_string());
  });
}

int lk_braid_strands(const lk_braid* b) { return b == nullptr ? 0 : b->value.strands(); }

size_t lk_braid_length(const lk_braid* b) { return b == nullptr ? 0 : b->value.length(); }

lk_status lk_braid_components(const lk_braid* b, int* out) {
  return guarded([&] {
    require(b, "b");
    require(out, "out");
    *out = closure_components(b->value);
  });
}

lk_status lk_braid_seifert(const lk_braid* b, int* entries, size_t capacity, size_t* size) {
  return guarded([&] {
    require(b, "b");
    require(size, "size");
    const SeifertMatrix v = seifert_matrix(b->value);
    const size_t n = v.size();
    if (entries != nullptr) {
      if (capacity < n * n) throw Error(ErrorCode::OutOfRange, "Seifert buffer too small");
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) entries[i * n + j] = v.entries[i][j];
    }
    *size = n;
  });
}

lk_status lk_braid_alexander(const lk_braid* b, lk_poly** out) {
  return guarded([&] {
    require(b, "b");
    require(out, "out");
    *out = new lk_poly{alexander_of_closure(b->value)};
  });
}

lk_status lk_braid_alexander_cached(const lk_braid* b, lk_cache* cache, lk_poly** out) {
  return guarded([&] {
    require(b, "b");
    require(cache, "cache");
    require(out, "out");
    *out = new lk_poly{cache->value.get(b->value)};
  });
}

lk_status lk_braid_burau(const lk_braid* b, lk_poly** out) {
  return guarded([&] {
    require(b, "b");
    require(out, "out");
    *out = new lk_poly{burau_alexander_upto_units(b->value)};
  });
}

lk_status lk_braid_crossing_change(const lk_braid* b, size_t pos, lk_braid** out) {
  return guarded([&] {
    require(b, "b");
    require(out, "out");
    *out = new lk_braid{crossing_change(b->value, pos)};
  });
}

lk_status lk_braid_delete_letter(const lk_braid* b, size_t pos, lk_braid** out) {
  return guarded([&] {
    require(b, "b");
    require(out, "out");
    *out = new lk_braid{delete_letter(b->value, pos)};
  });
}

lk_status lk_braid_full_twist(int strands, int k, lk_braid** out) {
  return guarded([&] {
    require(out, "out");
    *out = new lk_braid{full_twist(strands, k)};
  });
}

lk_status lk_braid_periodic_closure(const lk_braid* pattern, int64_t r, int s, int q,
                                    lk_twist_convention convention, lk_braid** out) {
  return guarded([&] {
    require(pattern, "pattern");
    require(out, "out");
    const PeriodicSpec spec(pattern->value, ModulusSpec(r, s), q);
    *out = new lk_braid{periodic_closure(spec, convention_of(convention))};
  });
}

// ---- torus ----

lk_status lk_torus_braid(int64_t a, int64_t b, lk_braid** out) {
  return guarded([&] {
    require(out, "out");
    *out = new lk_braid{torus_braid(TorusParams{a, b})};
  });
}

lk_status lk_torus_alexander(int64_t a, int64_t b, lk_poly** out) {
  return guarded([&] {
    require(out, "out");
    *out = new lk_poly{torus_alexander_closed(TorusParams{a, b})};
  });
}

lk_status lk_lift_generator(int64_t p, int64_t q, int64_t n, int64_t* a, int64_t* b) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    const TorusParams tp = lift_generator(p, q, n);
    *a = tp.a;
    *b = tp.b;
  });
}

// ---- lens spaces ----

lk_status lk_mod_inverse(int64_t a, int64_t p, int64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = mod_inverse(a, p);
  });
}

lk_status lk_lens_qbar(int64_t p, int64_t q, int64_t* qbar) {
  return guarded([&] {
    require(qbar, "qbar");
    *qbar = LensSpace(p, q).qbar();
  });
}

lk_status lk_linking_form(int64_t p, int64_t q, int64_t a, int64_t b, int64_t* num, int64_t* den) {
  return guarded([&] {
    require(num, "num");
    require(den, "den");
    const QmodZ v = linking_form(LensSpace(p, q), a, b);
    *num = v.numerator();
    *den = v.denominator();
  });
}

lk_status lk_lens_homeomorphic(int64_t p, int64_t q, int64_t p2, int64_t q2, int* out) {
  return guarded([&] {
    require(out, "out");
    *out = homeomorphic(LensSpace(p, q), LensSpace(p2, q2)) ? 1 : 0;
  });
}

lk_status lk_lens_homotopy_equivalent(int64_t p, int64_t q, int64_t p2, int64_t q2, int* out) {
  return guarded([&] {
    require(out, "out");
    *out = homotopy_equivalent(LensSpace(p, q), LensSpace(p2, q2)) ? 1 : 0;
  });
}

lk_status lk_lens_normal_form(int64_t p, int64_t q, int64_t* p_out, int64_t* q_out) {
  return guarded([&] {
    require(p_out, "p_out");
    require(q_out, "q_out");
    const LensSpace nf = normal_form(LensSpace(p, q));
    *p_out = nf.p();
    *q_out = nf.q();
  });
}

lk_status lk_lens_invariant_set(int64_t p, int64_t q, int64_t* nums, int64_t* dens, size_t capacity,
                                size_t* count) {
  return guarded([&] {
    require(count, "count");
    const auto values = invariant_set(LensSpace(p, q));
    if (nums != nullptr || dens != nullptr) {
      require(nums, "nums");
      require(dens, "dens");
      if (capacity < values.size()) throw Error(ErrorCode::OutOfRange, "invariant set buffer too small");
      size_t i = 0;
      for (const auto& v : values) {
        nums[i] = v.numerator();
        dens[i] = v.denominator();
        ++i;
      }
    }
    *count = values.size();
  });
}

// ---- obstruction ----

lk_status lk_maximal_prime_powers(int64_t p, int64_t* r, int* s, size_t capacity, size_t* count) {
  return guarded([&] {
    require(count, "count");
    const auto factors = maximal_prime_powers(p);
    if (r != nullptr || s != nullptr) {
      require(r, "r");
      require(s, "s");
      if (capacity < factors.size()) throw Error(ErrorCode::OutOfRange, "factor buffer too small");
      for (size_t i = 0; i < factors.size(); ++i) {
        r[i] = factors[i].r();
        s[i] = factors[i].s();
      }
    }
    *count = factors.size();
  });
}

lk_status lk_theorem1_congruence(int64_t p, int64_t q, int64_t n, int64_t r, int s, int* out) {
  return guarded([&] {
    require(out, "out");
    *out = theorem1_congruence(p, q, n, ModulusSpec(r, s)) ? 1 : 0;
  });
}

lk_status lk_theorem1_predicate(int64_t n, int64_t q, int64_t r, int s, lk_branch* out) {
  return guarded([&] {
    require(out, "out");
    *out = branch_of(theorem1_predicate(n, q, ModulusSpec(r, s)));
  });
}

const char* lk_branch_name(lk_branch branch) {
  switch (branch) {
    case LK_BRANCH_UNIT: return "UNIT";
    case LK_BRANCH_QBAR: return "QBAR";
    case LK_BRANCH_BOTH: return "BOTH";
    case LK_BRANCH_NEITHER: return "NEITHER";
  }
  return "?";
}

const char* lk_conclusion_name(lk_conclusion conclusion) {
  switch (conclusion) {
    case LK_CONCLUSION_UNIT_SQUARE: return "n^2=1";
    case LK_CONCLUSION_QBAR_SQUARE: return "n^2=qbar^2";
    case LK_CONCLUSION_MIXED: return "MIXED";
    case LK_CONCLUSION_EXCLUDED: return "EXCLUDED";
  }
  return "?";
}

lk_status lk_obstruction_report(int64_t p, int64_t q, int64_t n, lk_report** out) {
  return guarded([&] {
    require(out, "out");
    *out = new lk_report{obstruction_report(p, q, n)};
  });
}

void lk_report_free(lk_report* report) { delete report; }

size_t lk_report_factor_count(const lk_report* report) {
  return report == nullptr ? 0 : report->value.per_factor.size();
}

lk_status lk_report_factor(const lk_report* report, size_t index, int64_t* r, int* s, int* congruence_holds,
                           lk_branch* branch) {
  return guarded([&] {
    require(report, "report");
    if (index >= report->value.per_factor.size()) throw Error(ErrorCode::OutOfRange, "factor index out of range");
    const FactorResult& f = report->value.per_factor[index];
    if (r != nullptr) *r = f.mod.r();
    if (s != nullptr) *s = f.mod.s();
    if (congruence_holds != nullptr) *congruence_holds = f.congruence_holds ? 1 : 0;
    if (branch != nullptr) *branch = branch_of(f.branch);
  });
}

lk_conclusion lk_report_conclusion(const lk_report* report) {
  return report == nullptr ? LK_CONCLUSION_MIXED : conclusion_of(report->value.conclusion);
}

void lk_report_linking(const lk_report* report, int64_t* num, int64_t* den) {
  if (report == nullptr) return;
  if (num != nullptr) *num = report->value.linking.numerator();
  if (den != nullptr) *den = report->value.linking.denominator();
}

void lk_report_lift(const lk_report* report, int64_t* a, int64_t* b) {
  if (report == nullptr) return;
  if (a != nullptr) *a = report->value.lift.a;
  if (b != nullptr) *b = report->value.lift.b;
}

lk_status lk_report_lift_alexander(const lk_report* report, lk_poly** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = new lk_poly{report->value.lift_alexander};
  });
}

lk_status lk_lemma4_check(const lk_braid* pattern, int64_t r, int s, int q, size_t pos,
                          lk_twist_convention convention, lk_lemma4** out) {
  return guarded([&] {
    require(pattern, "pattern");
    require(out, "out");
    const PeriodicSpec spec(pattern->value, ModulusSpec(r, s), q);
    *out = new lk_lemma4{lemma4_check(spec, pos, convention_of(convention))};
  });
}

void lk_lemma4_free(lk_lemma4* check) { delete check; }

int lk_lemma4_holds(const lk_lemma4* check) { return check != nullptr && check->value.holds() ? 1 : 0; }

lk_status lk_lemma4_braid(const lk_lemma4* check, int which, lk_braid** out) {
  return guarded([&] {
    require(check, "check");
    require(out, "out");
    require_side(which);
    *out = new lk_braid{which == 0 ? check->value.original : check->value.changed};
  });
}

lk_status lk_lemma4_alexander(const lk_lemma4* check, int which, lk_poly** out) {
  return guarded([&] {
    require(check, "check");
    require(out, "out");
    require_side(which);
    *out = new lk_poly{which == 0 ? check->value.original_alexander : check->value.changed_alexander};
  });
}

lk_status lk_lemma4_residue(const lk_lemma4* check, int which, lk_residue** out) {
  return guarded([&] {
    require(check, "check");
    require(out, "out");
    require_side(which);
    *out = new lk_residue{which == 0 ? check->value.original_residue : check->value.changed_residue};
  });
}

// ---- cache ----

lk_status lk_cache_new(lk_cache** out) {
  return guarded([&] {
    require(out, "out");
    *out = new lk_cache{};
  });
}

void lk_cache_free(lk_cache* cache) { delete cache; }

lk_status lk_cache_load(lk_cache* cache, const char* path) {
  return guarded([&] {
    require(cache, "cache");
    require(path, "path");
    cache->value.load(path);
  });
}

lk_status lk_cache_save(const lk_cache* cache, const char* path) {
  return guarded([&] {
    require(cache, "cache");
    require(path, "path");
    cache->value.save(path);
  });
}

size_t lk_cache_size(const lk_cache* cache) { return cache == nullptr ? 0 : cache->value.size(); }

// ---- verify ----

void lk_verify_options_default(lk_verify_options* options) {
  if (options == nullptr) return;
  options->calibration_path = nullptr;
  options->torus_max_product = 40;
  options->theorem1_pmax = 30;
  options->lemma4_count = 100;
  options->seed = 20011;
  options->threads = 1;
  options->cache = nullptr;
}

lk_status lk_verify_run(const lk_verify_options* options, lk_verify_result** out) {
  return guarded([&] {
    require(options, "options");
    require(out, "out");
    auto result = std::make_unique<lk_verify_result>();
    auto& sum = result->summary;
    AlexanderCache* cache = options->cache != nullptr ? &options->cache->value : nullptr;
    const unsigned threads = options->threads == 0 ? 1 : options->threads;

    if (options->calibration_path != nullptr) {
      const auto entries = load_calibration(options->calibration_path);
      const auto mismatches = run_calibration(entries, cache);
      sum.calibration_entries = entries.size();
      sum.calibration_failures = mismatches.size();
      for (const auto& m : mismatches)
        result->violations.push_back("calibration: " + m.entry.word.canonical_key() + " expected " +
                                     m.entry.expected.to_string() + " got " + m.actual.to_string());
    }
    if (options->torus_max_product > 0) {
      const auto torus = torus_sweep(options->torus_max_product, threads, cache);
      sum.torus_checked = torus.checked;
      sum.torus_failures = torus.mismatches.size();
      for (const auto& m : torus.mismatches)
        result->violations.push_back("torus: T(" + std::to_string(m.params.a) + "," + std::to_string(m.params.b) +
                                     ") closed form " + m.closed_form.to_string() + " braid " +
                                     m.braid_pipeline.to_string());
    }
    if (options->theorem1_pmax >= 2) {
      const auto sweep = theorem1_sweep(options->theorem1_pmax, threads);
      sum.theorem1_triples = sweep.triples;
      sum.theorem1_factor_checks = sweep.factor_checks;
      sum.theorem1_congruences = sweep.congruences_holding;
      sum.theorem1_violations = sweep.violations.size();
      for (const auto& v : sweep.violations)
        result->violations.push_back("lift congruence: (p,q,n)=(" + std::to_string(v.p) + "," + std::to_string(v.q) + "," +
                                     std::to_string(v.n) + ") (r,s)=(" + std::to_string(v.mod.r()) + "," +
                                     std::to_string(v.mod.s()) + ") congruence holds but branch " +
                                     to_string(v.branch));
    }
    if (options->lemma4_count > 0) {
      const auto specs = random_periodic_specs(options->lemma4_count, options->seed);
      const auto suite = lemma4_suite(specs, threads, cache);
      sum.lemma4_specs = suite.specs;
      sum.lemma4_checks = suite.checks;
      sum.lemma4_failures = suite.failures.size();
      for (const auto& f : suite.failures)
        result->violations.push_back("crossing change: " + describe(f.spec) + " pos " + std::to_string(f.pos) + " twist " +
                                     to_string(f.convention));
    }
    *out = result.release();
  });
}

void lk_verify_result_free(lk_verify_result* result) { delete result; }

void lk_verify_get_summary(const lk_verify_result* result, lk_verify_summary* summary) {
  if (result != nullptr && summary != nullptr) *summary = result->summary;
}

size_t lk_verify_violation_count(const lk_verify_result* result) {
  return result == nullptr ? 0 : result->violations.size();
}

lk_status lk_verify_violation(const lk_verify_result* result, size_t index, char** out) {
  return guarded([&] {
    require(result, "result");
    require(out, "out");
    if (index >= result->violations.size()) throw Error(ErrorCode::OutOfRange, "violation index out of range");
    *out = dup_string(result->violations[index]);
  });
}

}  // extern "C"
