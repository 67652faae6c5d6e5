// Command-line front end. Everything here goes through the C API in
// lensknot.h; this file only parses arguments and renders results.

#include "lensknot/lensknot.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifndef LENSKNOT_CALIBRATION_FILE
#define LENSKNOT_CALIBRATION_FILE "data/calibration.txt"
#endif

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitCrossCheck = 2;

// Thrown to abort a command with a given exit code.
struct CommandFailure {
  int exit_code;
  std::string message;
};

void check(lk_status status) {
  if (status == LK_OK) return;
  const int code = status == LK_ERR_INTERNAL ? kExitCrossCheck : kExitInvalid;
  throw CommandFailure{code, std::string(lk_status_name(status)) + ": " + lk_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Poly = std::unique_ptr<lk_poly, Deleter<lk_poly, lk_poly_free>>;
using Braid = std::unique_ptr<lk_braid, Deleter<lk_braid, lk_braid_free>>;
using Residue = std::unique_ptr<lk_residue, Deleter<lk_residue, lk_residue_free>>;
using Report = std::unique_ptr<lk_report, Deleter<lk_report, lk_report_free>>;
using Lemma4 = std::unique_ptr<lk_lemma4, Deleter<lk_lemma4, lk_lemma4_free>>;
using Cache = std::unique_ptr<lk_cache, Deleter<lk_cache, lk_cache_free>>;
using VerifyResult = std::unique_ptr<lk_verify_result, Deleter<lk_verify_result, lk_verify_result_free>>;

template <class F>
std::string take_string(F&& producer) {
  char* raw = nullptr;
  check(producer(&raw));
  std::string out(raw);
  lk_string_free(raw);
  return out;
}

std::string text(const lk_poly* p) {
  return take_string([&](char** s) { return lk_poly_to_string(p, s); });
}
std::string text(const lk_braid* b) {
  return take_string([&](char** s) { return lk_braid_to_string(b, s); });
}
std::string text(const lk_residue* r) {
  return take_string([&](char** s) { return lk_residue_to_string(r, s); });
}
std::string conway_text(const lk_poly* p) {
  return take_string([&](char** s) { return lk_poly_conway_string(p, s); });
}

json integer_json(const std::string& decimal) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(decimal, &used);
    if (used == decimal.size()) return v;
  } catch (const std::exception&) {
  }
  return decimal;
}

// Map from u-exponent (as a string) to coefficient.
json poly_json(const lk_poly* p) {
  json out = json::object();
  const std::size_t n = lk_poly_term_count(p);
  for (std::size_t i = 0; i < n; ++i) {
    int e = 0;
    char* c = nullptr;
    check(lk_poly_term(p, i, &e, &c));
    out[std::to_string(e)] = integer_json(c);
    lk_string_free(c);
  }
  return out;
}

json conway_json(const lk_poly* p) {
  int degree = -1;
  check(lk_poly_conway_degree(p, &degree));
  json coeffs = json::array();
  for (int k = 0; k <= degree; ++k)
    coeffs.push_back(integer_json(take_string([&](char** s) { return lk_poly_conway_coefficient(p, k, s); })));
  return coeffs;
}

std::string fraction(int64_t num, int64_t den) {
  return num == 0 ? "0" : std::to_string(num) + "/" + std::to_string(den);
}

std::string lens_name(int64_t p, int64_t q) {
  return "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

Braid parse_braid(const std::string& word, int strands) {
  lk_braid* b = nullptr;
  check(lk_braid_parse(word.c_str(), strands, &b));
  return Braid(b);
}

class Output {
 public:
  explicit Output(bool json_mode) : json_mode_(json_mode) {}
  bool json_mode() const { return json_mode_; }
  void line(const std::string& s) { text_ << s << '\n'; }
  void set(json value) { json_ = std::move(value); }

  void flush() const {
    if (json_mode_)
      std::cout << json_.dump(2) << '\n';
    else
      std::cout << text_.str();
  }

 private:
  bool json_mode_;
  std::ostringstream text_;
  json json_;
};

struct CacheOptions {
  std::string path;

  std::string resolved() const {
    if (!path.empty()) return path;
    const char* env = std::getenv("LENSKNOT_CACHE");
    return env != nullptr ? env : "";
  }
};

// Opens the cache named by --cache or LENSKNOT_CACHE; no file means no cache.
class ScopedCache {
 public:
  explicit ScopedCache(const CacheOptions& opts) : path_(opts.resolved()) {
    if (path_.empty()) return;
    lk_cache* c = nullptr;
    check(lk_cache_new(&c));
    cache_.reset(c);
    check(lk_cache_load(c, path_.c_str()));
  }
  ScopedCache(const ScopedCache&) = delete;
  ScopedCache& operator=(const ScopedCache&) = delete;

  lk_cache* get() const { return cache_.get(); }
  void save() const {
    if (cache_) check(lk_cache_save(cache_.get(), path_.c_str()));
  }

 private:
  std::string path_;
  Cache cache_;
};

// ---- alexander ----

struct AlexanderOptions {
  std::string braid;
  std::string input;
  int strands = 0;
  CacheOptions cache;
};

json alexander_one(const std::string& word, int strands, lk_cache* cache, Output& out) {
  const Braid b = parse_braid(word, strands);
  int components = 0;
  check(lk_braid_components(b.get(), &components));
  lk_poly* raw = nullptr;
  check(cache != nullptr ? lk_braid_alexander_cached(b.get(), cache, &raw) : lk_braid_alexander(b.get(), &raw));
  const Poly delta(raw);
  const std::string delta_text = text(delta.get());
  const std::string nabla_text = conway_text(delta.get());

  out.line("braid: n=" + std::to_string(lk_braid_strands(b.get())) + " " + text(b.get()));
  out.line("components: " + std::to_string(components));
  out.line("Δ = " + delta_text);
  out.line("∇ = " + nabla_text);
  return json{{"braid", text(b.get())},
              {"strands", lk_braid_strands(b.get())},
              {"components", components},
              {"alexander", delta_text},
              {"alexander_terms", poly_json(delta.get())},
              {"conway", nabla_text},
              {"conway_coefficients", conway_json(delta.get())}};
}

int run_alexander(const AlexanderOptions& opts, Output& out) {
  if (opts.braid.empty() == opts.input.empty())
    throw CommandFailure{kExitInvalid, "give exactly one of --braid or --input"};
  ScopedCache cache(opts.cache);
  if (!opts.braid.empty()) {
    out.set(alexander_one(opts.braid, opts.strands, cache.get(), out));
  } else {
    std::ifstream in(opts.input);
    if (!in) throw CommandFailure{kExitInvalid, "cannot read " + opts.input};
    json results = json::array();
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#')
        continue;
      if (!first) out.line("");
      first = false;
      results.push_back(alexander_one(line, opts.strands, cache.get(), out));
    }
    out.set(std::move(results));
  }
  cache.save();
  return kExitOk;
}

// ---- torus / lift ----

int run_torus(int64_t a, int64_t b, Output& out) {
  lk_poly* raw = nullptr;
  check(lk_torus_alexander(a, b, &raw));
  const Poly closed(raw);
  lk_braid* braw = nullptr;
  check(lk_torus_braid(a, b, &braw));
  const Braid braid(braw);
  check(lk_braid_alexander(braid.get(), &raw));
  const Poly pipeline(raw);
  const bool agree = lk_poly_equal(closed.get(), pipeline.get()) != 0;

  out.line("T(" + std::to_string(a) + "," + std::to_string(b) + ")");
  out.line("braid: n=" + std::to_string(lk_braid_strands(braid.get())) + " " + text(braid.get()));
  out.line("closed form: Δ = " + text(closed.get()));
  out.line("braid pipeline: Δ = " + text(pipeline.get()));
  out.line(std::string("cross-check: ") + (agree ? "ok" : "MISMATCH"));
  out.set(json{{"a", a},
               {"b", b},
               {"braid", text(braid.get())},
               {"strands", lk_braid_strands(braid.get())},
               {"closed_form", text(closed.get())},
               {"closed_form_terms", poly_json(closed.get())},
               {"braid_pipeline", text(pipeline.get())},
               {"cross_check", agree}});
  return agree ? kExitOk : kExitCrossCheck;
}

int run_lift(int64_t p, int64_t q, int64_t n, Output& out) {
  int64_t a = 0;
  int64_t b = 0;
  check(lk_lift_generator(p, q, n, &a, &b));
  lk_poly* raw = nullptr;
  check(lk_torus_alexander(a, b, &raw));
  const Poly delta(raw);
  out.line("K_" + std::to_string(n) + " in " + lens_name(p, q) + " lifts to T(" + std::to_string(a) + "," +
           std::to_string(b) + ")");
  out.line("Δ = " + text(delta.get()));
  out.set(json{{"p", p},
               {"q", q},
               {"n", n},
               {"torus", {a, b}},
               {"alexander", text(delta.get())},
               {"alexander_terms", poly_json(delta.get())}});
  return kExitOk;
}

// ---- lens / linking ----

json invariant_set_json(int64_t p, int64_t q, std::string& rendered) {
  std::size_t count = 0;
  check(lk_lens_invariant_set(p, q, nullptr, nullptr, 0, &count));
  std::vector<int64_t> nums(count);
  std::vector<int64_t> dens(count);
  check(lk_lens_invariant_set(p, q, nums.data(), dens.data(), count, &count));
  json values = json::array();
  rendered = "{";
  for (std::size_t i = 0; i < count; ++i) {
    const std::string f = fraction(nums[i], dens[i]);
    values.push_back(f);
    rendered += (i == 0 ? "" : ", ") + f;
  }
  rendered += "}";
  return values;
}

std::string yes_no(int v) { return v != 0 ? "yes" : "no"; }

int run_lens_compare(int64_t p, int64_t q, int64_t p2, int64_t q2, Output& out) {
  int homeo = 0;
  int homotopy = 0;
  check(lk_lens_homeomorphic(p, q, p2, q2, &homeo));
  check(lk_lens_homotopy_equivalent(p, q, p2, q2, &homotopy));
  std::string set1;
  std::string set2;
  json inv1 = invariant_set_json(p, q, set1);
  json inv2 = invariant_set_json(p2, q2, set2);
  int64_t np1 = 0, nq1 = 0, np2 = 0, nq2 = 0;
  check(lk_lens_normal_form(p, q, &np1, &nq1));
  check(lk_lens_normal_form(p2, q2, &np2, &nq2));

  const std::string n1 = lens_name(p, q);
  const std::string n2 = lens_name(p2, q2);
  out.line(n1 + " vs " + n2);
  out.line("homeomorphic: " + yes_no(homeo));
  out.line("homotopy-equivalent: " + yes_no(homotopy));
  out.line("invariant set " + n1 + ": " + set1);
  out.line("invariant set " + n2 + ": " + set2);
  out.line("normal form " + n1 + ": " + lens_name(np1, nq1));
  out.line("normal form " + n2 + ": " + lens_name(np2, nq2));
  out.set(json{{"first", {p, q}},
               {"second", {p2, q2}},
               {"homeomorphic", homeo != 0},
               {"homotopy_equivalent", homotopy != 0},
               {"invariant_sets", {inv1, inv2}},
               {"normal_forms", {{np1, nq1}, {np2, nq2}}}});
  return kExitOk;
}

int run_lens_info(int64_t p, int64_t q, Output& out) {
  int64_t qbar = 0;
  check(lk_lens_qbar(p, q, &qbar));
  int64_t np = 0, nq = 0;
  check(lk_lens_normal_form(p, q, &np, &nq));
  int64_t num = 0, den = 1;
  check(lk_linking_form(p, q, 1, 1, &num, &den));
  std::string set;
  json inv = invariant_set_json(p, q, set);
  out.line(lens_name(p, q));
  out.line("qbar: " + std::to_string(qbar));
  out.line("lk(l1, l1) = " + fraction(num, den));
  out.line("invariant set: " + set);
  out.line("normal form: " + lens_name(np, nq));
  out.set(json{{"p", p},
               {"q", q},
               {"qbar", qbar},
               {"linking_l1", fraction(num, den)},
               {"invariant_set", inv},
               {"normal_form", {np, nq}}});
  return kExitOk;
}

int run_linking(int64_t p, int64_t q, int64_t n, Output& out) {
  int64_t num = 0, den = 1;
  check(lk_linking_form(p, q, n, n, &num, &den));
  out.line("lk(" + std::to_string(n) + "[l1], " + std::to_string(n) + "[l1]) in " + lens_name(p, q) + " = " +
           fraction(num, den));
  out.set(json{{"p", p}, {"q", q}, {"n", n}, {"linking", fraction(num, den)}});
  return kExitOk;
}

// ---- obstruct ----

int run_obstruct(int64_t p, int64_t q, int64_t n, Output& out) {
  lk_report* raw = nullptr;
  check(lk_obstruction_report(p, q, n, &raw));
  const Report report(raw);
  int64_t a = 0, b = 0, num = 0, den = 1;
  lk_report_lift(report.get(), &a, &b);
  lk_report_linking(report.get(), &num, &den);
  lk_poly* praw = nullptr;
  check(lk_report_lift_alexander(report.get(), &praw));
  const Poly delta(praw);
  int64_t qbar = 0;
  check(lk_lens_qbar(p, ((q % p) + p) % p, &qbar));

  out.line("L(p,q) = " + lens_name(p, q) + ", n = " + std::to_string(n) + ", qbar = " + std::to_string(qbar));
  out.line("lift: T(" + std::to_string(a) + "," + std::to_string(b) + "), Δ = " + text(delta.get()));
  out.line("r^s  congruence  branch");
  json factors = json::array();
  for (std::size_t i = 0; i < lk_report_factor_count(report.get()); ++i) {
    int64_t r = 0;
    int s = 0;
    int holds = 0;
    lk_branch branch = LK_BRANCH_NEITHER;
    check(lk_report_factor(report.get(), i, &r, &s, &holds, &branch));
    std::string rs = std::to_string(r) + "^" + std::to_string(s);
    rs.resize(std::max<std::size_t>(rs.size(), 5), ' ');
    out.line(rs + std::string(holds != 0 ? "holds       " : "fails       ") + lk_branch_name(branch));
    factors.push_back(json{{"r", r}, {"s", s}, {"congruence_holds", holds != 0}, {"branch", lk_branch_name(branch)}});
  }
  const char* conclusion = lk_conclusion_name(lk_report_conclusion(report.get()));
  out.line(std::string("conclusion: ") + conclusion);
  out.line("lk(K,K) = " + fraction(num, den));
  out.set(json{{"p", p},
               {"q", q},
               {"n", n},
               {"qbar", qbar},
               {"lift", {a, b}},
               {"lift_alexander", text(delta.get())},
               {"per_factor", factors},
               {"global_conclusion", conclusion},
               {"linking", fraction(num, den)}});
  return kExitOk;
}

// ---- lemma4 ----

struct Lemma4Options {
  std::string pattern;
  int strands = 0;
  int64_t r = 2;
  int s = 1;
  int q = 0;
  std::size_t pos = 0;
  std::string twist = "standard";
};

int run_lemma4(const Lemma4Options& opts, Output& out) {
  const Braid pattern = parse_braid(opts.pattern, opts.strands);
  lk_twist_convention convention = LK_TWIST_STANDARD;
  if (opts.twist == "mirrored")
    convention = LK_TWIST_MIRRORED;
  else if (opts.twist != "standard")
    throw CommandFailure{kExitInvalid, "--twist must be standard or mirrored"};
  lk_lemma4* raw = nullptr;
  check(lk_lemma4_check(pattern.get(), opts.r, opts.s, opts.q, opts.pos, convention, &raw));
  const Lemma4 result(raw);

  json sides = json::array();
  const char* labels[] = {"L(q) ", "L'(q)"};
  for (int which = 0; which < 2; ++which) {
    lk_braid* b = nullptr;
    check(lk_lemma4_braid(result.get(), which, &b));
    const Braid braid(b);
    lk_poly* p = nullptr;
    check(lk_lemma4_alexander(result.get(), which, &p));
    const Poly delta(p);
    lk_residue* res = nullptr;
    check(lk_lemma4_residue(result.get(), which, &res));
    const Residue residue(res);
    out.line(std::string(labels[which]) + ": braid " + text(braid.get()));
    out.line("        Δ = " + text(delta.get()) + ", residue " + text(residue.get()));
    sides.push_back(json{{"braid", text(braid.get())},
                         {"alexander", text(delta.get())},
                         {"residue", text(residue.get())}});
  }
  const bool holds = lk_lemma4_holds(result.get()) != 0;
  out.line("modulus: (t^" + std::to_string([&] {
             int64_t m = 1;
             for (int i = 0; i < opts.s; ++i) m *= opts.r;
             return m;
           }()) + " - 1, " + std::to_string(opts.r) + ")");
  out.line(std::string("congruence: ") + (holds ? "holds" : "FAILS"));
  out.set(json{{"pattern", text(pattern.get())},
               {"strands", lk_braid_strands(pattern.get())},
               {"r", opts.r},
               {"s", opts.s},
               {"q", opts.q},
               {"pos", opts.pos},
               {"twist", opts.twist},
               {"closures", sides},
               {"holds", holds}});
  // A failing instance contradicts a theorem, so it is an internal failure.
  return holds ? kExitOk : kExitCrossCheck;
}

// ---- verify ----

struct VerifyOptions {
  int64_t pmax = 30;
  uint64_t seed = 20011;
  std::size_t lemma4_count = 100;
  int torus_max = 40;
  unsigned threads = 1;
  std::string calibration = LENSKNOT_CALIBRATION_FILE;
  CacheOptions cache;
};

int run_verify(const VerifyOptions& opts, Output& out) {
  ScopedCache cache(opts.cache);
  lk_verify_options options;
  lk_verify_options_default(&options);
  options.calibration_path = opts.calibration.empty() ? nullptr : opts.calibration.c_str();
  options.torus_max_product = opts.torus_max;
  options.theorem1_pmax = opts.pmax;
  options.lemma4_count = opts.lemma4_count;
  options.seed = opts.seed;
  options.threads = opts.threads;
  options.cache = cache.get();
  lk_verify_result* raw = nullptr;
  check(lk_verify_run(&options, &raw));
  const VerifyResult result(raw);
  cache.save();

  lk_verify_summary s{};
  lk_verify_get_summary(result.get(), &s);
  const std::size_t violations = lk_verify_violation_count(result.get());
  json listed = json::array();
  for (std::size_t i = 0; i < violations; ++i) {
    const std::string v = take_string([&](char** str) { return lk_verify_violation(result.get(), i, str); });
    out.line("VIOLATION " + v);
    listed.push_back(v);
  }
  out.line("calibration corpus: " + std::to_string(s.calibration_entries) + " entries, " +
           std::to_string(s.calibration_failures) + " failures");
  out.line("torus closed form vs braid (ab <= " + std::to_string(opts.torus_max) +
           "): " + std::to_string(s.torus_checked) + " pairs, " + std::to_string(s.torus_failures) + " mismatches");
  out.line("lift congruence sweep (p <= " + std::to_string(opts.pmax) + "): " + std::to_string(s.theorem1_triples) +
           " triples, " + std::to_string(s.theorem1_factor_checks) + " factor checks, " +
           std::to_string(s.theorem1_congruences) + " congruences holding, " + std::to_string(s.theorem1_violations) +
           " violations");
  out.line("orbit crossing-change suite (seed " + std::to_string(opts.seed) + "): " + std::to_string(s.lemma4_specs) + " specs, " +
           std::to_string(s.lemma4_checks) + " checks, " + std::to_string(s.lemma4_failures) + " failures");
  out.line(std::to_string(violations) + " violations");
  out.set(json{{"calibration", {{"entries", s.calibration_entries}, {"failures", s.calibration_failures}}},
               {"torus", {{"checked", s.torus_checked}, {"mismatches", s.torus_failures}}},
               {"theorem1",
                {{"pmax", opts.pmax},
                 {"triples", s.theorem1_triples},
                 {"factor_checks", s.theorem1_factor_checks},
                 {"congruences_holding", s.theorem1_congruences},
                 {"violations", s.theorem1_violations}}},
               {"lemma4",
                {{"seed", opts.seed},
                 {"specs", s.lemma4_specs},
                 {"checks", s.lemma4_checks},
                 {"failures", s.lemma4_failures}}},
               {"violations", listed}});
  return violations == 0 ? kExitOk : kExitCrossCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alexander polynomials of braid closures, periodic-link congruences and lens space classification"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "Structured (JSON) output");

  std::function<int(Output&)> action;

  AlexanderOptions alex;
  auto* alexander = app.add_subcommand("alexander", "Δ and ∇ of a braid closure");
  alexander->add_option("--braid", alex.braid, "Braid word, e.g. \"1 1 1\"");
  alexander->add_option("--input", alex.input, "File with one braid word per line");
  alexander->add_option("--strands", alex.strands, "Strand count (default: n= prefix or max|letter|+1)");
  alexander->add_option("--cache", alex.cache.path, "Cache file (default: $LENSKNOT_CACHE)");
  alexander->callback([&] { action = [&](Output& o) { return run_alexander(alex, o); }; });

  int64_t ta = 0, tb = 0;
  auto* torus = app.add_subcommand("torus", "Closed-form Δ of T(a,b), cross-checked against the braid pipeline");
  torus->add_option("a", ta)->required();
  torus->add_option("b", tb)->required();
  torus->callback([&] { action = [&](Output& o) { return run_torus(ta, tb, o); }; });

  int64_t lp = 0, lq = 0, ln = 0;
  auto* lift = app.add_subcommand("lift", "Torus knot covering K_n in L(p,q)");
  lift->add_option("p", lp)->required();
  lift->add_option("q", lq)->required();
  lift->add_option("n", ln)->required();
  lift->callback([&] { action = [&](Output& o) { return run_lift(lp, lq, ln, o); }; });

  auto* lens = app.add_subcommand("lens", "Lens space classification");
  lens->require_subcommand(1);
  std::vector<int64_t> compare_args;
  auto* compare = lens->add_subcommand("compare", "Compare L(p,q) and L(p',q')");
  compare->add_option("values", compare_args, "p q p' q'")->required()->expected(4);
  compare->callback([&] {
    action = [&](Output& o) {
      return run_lens_compare(compare_args[0], compare_args[1], compare_args[2], compare_args[3], o);
    };
  });
  std::vector<int64_t> info_args;
  auto* info = lens->add_subcommand("info", "Derived quantities of L(p,q)");
  info->add_option("values", info_args, "p q")->required()->expected(2);
  info->callback([&] { action = [&](Output& o) { return run_lens_info(info_args[0], info_args[1], o); }; });

  int64_t kp = 0, kq = 0, kn = 0;
  auto* linking = app.add_subcommand("linking", "Linking form value n^2 q / p");
  linking->add_option("p", kp)->required();
  linking->add_option("q", kq)->required();
  linking->add_option("n", kn)->required();
  linking->callback([&] { action = [&](Output& o) { return run_linking(kp, kq, kn, o); }; });

  int64_t op = 0, oq = 0, on = 0;
  auto* obstruct = app.add_subcommand("obstruct", "Per-prime-power congruence report for K_n in L(p,q)");
  obstruct->add_option("p", op)->required();
  obstruct->add_option("q", oq)->required();
  obstruct->add_option("n", on)->required();
  obstruct->callback([&] { action = [&](Output& o) { return run_obstruct(op, oq, on, o); }; });

  Lemma4Options l4;
  auto* lemma4 = app.add_subcommand("lemma4", "Congruence of a periodic closure and its orbit crossing change");
  lemma4->add_option("--pattern", l4.pattern, "Pattern braid word")->required();
  lemma4->add_option("--strands", l4.strands, "Pattern strand count");
  lemma4->add_option("--r", l4.r, "Prime r")->required();
  lemma4->add_option("--s", l4.s, "Exponent s")->required();
  lemma4->add_option("--q", l4.q, "Axis surgery coefficient");
  lemma4->add_option("--pos", l4.pos, "Pattern position of the changed crossing");
  lemma4->add_option("--twist", l4.twist, "standard | mirrored");
  lemma4->callback([&] { action = [&](Output& o) { return run_lemma4(l4, o); }; });

  VerifyOptions ver;
  auto* verify = app.add_subcommand("verify", "Calibration corpus and reproducibility sweeps");
  verify->add_option("--pmax", ver.pmax, "Largest p in the lift congruence sweep");
  verify->add_option("--seed", ver.seed, "Seed for the randomized crossing-change suite");
  verify->add_option("--lemma4-count", ver.lemma4_count, "Number of random periodic specs");
  verify->add_option("--torus-max", ver.torus_max, "Largest ab in the torus cross-check (0 skips)");
  verify->add_option("--threads", ver.threads, "Worker threads");
  verify->add_option("--calibration", ver.calibration, "Calibration corpus file (empty skips)");
  verify->add_option("--cache", ver.cache.path, "Cache file (default: $LENSKNOT_CACHE)");
  verify->callback([&] { action = [&](Output& o) { return run_verify(ver, o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  Output out(json_mode);
  try {
    const int code = action(out);
    out.flush();
    return code;
  } catch (const CommandFailure& f) {
    if (json_mode)
      std::cout << json{{"error", f.message}}.dump(2) << '\n';
    std::cerr << "error: " << f.message << '\n';
    return f.exit_code;
  }
}
