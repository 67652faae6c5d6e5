#pragma once

#include "lensknot/braid.hpp"
#include "lensknot/obstruction.hpp"
#include "lensknot/poly.hpp"

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <shared_mutex>
#include <string>
#include <vector>

namespace lensknot {

/// Memoized alexander_of_closure keyed by BraidWord::canonical_key().
/// Safe to share between threads.
class AlexanderCache {
 public:
  LaurentPoly get(const BraidWord& w);
  std::size_t size() const;
  std::size_t hits() const;

  /// Lines "<key>\t<polynomial>". A missing file is not an error.
  void load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, LaurentPoly> entries_;
  std::atomic<std::size_t> hits_{0};
};

struct CalibrationEntry {
  BraidWord word;
  LaurentPoly expected;
};

/// Lines "<braid word> | <polynomial>"; '#' starts a comment.
std::vector<CalibrationEntry> parse_calibration(const std::string& text);
std::vector<CalibrationEntry> load_calibration(const std::filesystem::path& path);

struct CalibrationMismatch {
  CalibrationEntry entry;
  LaurentPoly actual;
};

std::vector<CalibrationMismatch> run_calibration(const std::vector<CalibrationEntry>& entries,
                                                 AlexanderCache* cache = nullptr);

struct TorusMismatch {
  TorusParams params;
  LaurentPoly closed_form;
  LaurentPoly braid_pipeline;
};

/// Closed form against the braid pipeline for coprime 2 <= a < b, ab <= max_product.
struct TorusSweepResult {
  std::size_t checked = 0;
  std::vector<TorusMismatch> mismatches;
};

TorusSweepResult torus_sweep(int max_product, unsigned threads = 1, AlexanderCache* cache = nullptr);

struct Theorem1Violation {
  std::int64_t p, q, n;
  ModulusSpec mod;
  Branch branch;
};

struct Theorem1SweepResult {
  std::size_t triples = 0;
  std::size_t factor_checks = 0;
  std::size_t congruences_holding = 0;
  std::vector<Theorem1Violation> violations;  // sorted by (p, q, n, r)
};

/// Every 2 <= p <= pmax, 1 <= q < p and 1 <= n < p prime to p, and every
/// maximal prime power of p: a holding congruence must not have branch NEITHER.
Theorem1SweepResult theorem1_sweep(std::int64_t pmax, unsigned threads = 1);

/// Randomized periodic specs: 2-3 strands, pattern length 1-6,
/// q in [-2, 2], (r, s) in {(2,1), (3,1), (2,2)}.
std::vector<PeriodicSpec> random_periodic_specs(std::size_t count, std::uint64_t seed);

struct Lemma4Failure {
  PeriodicSpec spec;
  std::size_t pos;
  TwistConvention convention;
};

struct Lemma4SuiteResult {
  std::size_t specs = 0;
  std::size_t checks = 0;
  std::vector<Lemma4Failure> failures;  // in input order
};

/// Every spec, every pattern position, both twist conventions.
Lemma4SuiteResult lemma4_suite(const std::vector<PeriodicSpec>& specs, unsigned threads = 1,
                               AlexanderCache* cache = nullptr);

std::string describe(const PeriodicSpec& spec);
std::string to_string(TwistConvention convention);

}  // namespace lensknot
