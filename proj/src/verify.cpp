#include "lensknot/verify.hpp"

#include "lensknot/error.hpp"
#include "lensknot/torus.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

namespace lensknot {

namespace {

// Runs body(i) for i in [0, count) on up to `threads` workers. Results are
// written by index, so output order never depends on scheduling.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

LaurentPoly alexander(const BraidWord& w, AlexanderCache* cache) {
  return cache != nullptr ? cache->get(w) : alexander_of_closure(w);
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

LaurentPoly AlexanderCache::get(const BraidWord& w) {
  const std::string key = w.canonical_key();
  {
    std::shared_lock lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) {
      ++hits_;
      return it->second;
    }
  }
  LaurentPoly value = alexander_of_closure(w);
  std::unique_lock lock(mutex_);
  entries_.emplace(key, value);
  return value;
}

std::size_t AlexanderCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

std::size_t AlexanderCache::hits() const {
  return hits_.load();
}

void AlexanderCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return;
  std::map<std::string, LaurentPoly> loaded;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw Error(ErrorCode::Parse, "malformed cache line in " + path.string() + ": " + line);
    // Re-canonicalize the key so hand-edited files still match.
    const BraidWord w = parse_braid(line.substr(0, tab));
    loaded.insert_or_assign(w.canonical_key(), parse_laurent(line.substr(tab + 1)));
  }
  std::unique_lock lock(mutex_);
  for (auto& [k, v] : loaded) entries_.insert_or_assign(k, std::move(v));
}

void AlexanderCache::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write cache file " + path.string());
  std::shared_lock lock(mutex_);
  for (const auto& [key, value] : entries_) out << key << '\t' << value.to_string() << '\n';
  if (!out) throw Error(ErrorCode::Io, "failed writing cache file " + path.string());
}

std::vector<CalibrationEntry> parse_calibration(const std::string& text) {
  std::vector<CalibrationEntry> out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto bar = line.find('|');
    if (bar == std::string::npos)
      throw Error(ErrorCode::Parse, "calibration line " + std::to_string(line_no) + " has no '|'");
    out.push_back(CalibrationEntry{parse_braid(line.substr(0, bar)), parse_laurent(line.substr(bar + 1))});
  }
  return out;
}

std::vector<CalibrationEntry> load_calibration(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read calibration file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_calibration(buffer.str());
}

std::vector<CalibrationMismatch> run_calibration(const std::vector<CalibrationEntry>& entries,
                                                 AlexanderCache* cache) {
  std::vector<CalibrationMismatch> out;
  for (const auto& entry : entries) {
    LaurentPoly actual = alexander(entry.word, cache);
    if (!(actual == entry.expected)) out.push_back(CalibrationMismatch{entry, std::move(actual)});
  }
  return out;
}

TorusSweepResult torus_sweep(int max_product, unsigned threads, AlexanderCache* cache) {
  std::vector<TorusParams> params;
  for (std::int64_t a = 2; a * (a + 1) <= max_product; ++a)
    for (std::int64_t b = a + 1; a * b <= max_product; ++b)
      if (std::gcd(a, b) == 1) params.push_back(TorusParams{a, b});

  std::vector<std::optional<TorusMismatch>> slots(params.size());
  parallel_for(params.size(), threads, [&](std::size_t i) {
    LaurentPoly closed = torus_alexander_closed(params[i]);
    LaurentPoly braid = alexander(torus_braid(params[i]), cache);
    if (!(closed == braid)) slots[i] = TorusMismatch{params[i], std::move(closed), std::move(braid)};
  });

  TorusSweepResult result;
  result.checked = params.size();
  for (auto& slot : slots)
    if (slot) result.mismatches.push_back(std::move(*slot));
  return result;
}

Theorem1SweepResult theorem1_sweep(std::int64_t pmax, unsigned threads) {
  struct Triple {
    std::int64_t p, q, n;
  };
  std::vector<Triple> triples;
  for (std::int64_t p = 2; p <= pmax; ++p)
    for (std::int64_t q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1)
        for (std::int64_t n = 1; n < p; ++n)
          if (std::gcd(n, p) == 1) triples.push_back(Triple{p, q, n});

  struct Outcome {
    std::size_t factors = 0;
    std::size_t holding = 0;
    std::vector<Theorem1Violation> violations;
  };
  std::vector<Outcome> outcomes(triples.size());
  parallel_for(triples.size(), threads, [&](std::size_t i) {
    const auto [p, q, n] = triples[i];
    const ObstructionReport report = obstruction_report(p, q, n);
    Outcome& out = outcomes[i];
    for (const auto& f : report.per_factor) {
      ++out.factors;
      if (!f.congruence_holds) continue;
      ++out.holding;
      if (f.branch == Branch::Neither) out.violations.push_back(Theorem1Violation{p, q, n, f.mod, f.branch});
    }
  });

  Theorem1SweepResult result;
  result.triples = triples.size();
  for (auto& o : outcomes) {
    result.factor_checks += o.factors;
    result.congruences_holding += o.holding;
    for (auto& v : o.violations) result.violations.push_back(v);
  }
  return result;
}

std::vector<PeriodicSpec> random_periodic_specs(std::size_t count, std::uint64_t seed) {
  static const ModulusSpec kMods[] = {ModulusSpec(2, 1), ModulusSpec(3, 1), ModulusSpec(2, 2)};
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::vector<PeriodicSpec> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const int strands = uniform(2, 3);
    const int length = uniform(1, 6);
    std::vector<int> letters;
    for (int k = 0; k < length; ++k) {
      const int gen = uniform(1, strands - 1);
      letters.push_back(uniform(0, 1) == 0 ? gen : -gen);
    }
    const int q = uniform(-2, 2);
    const ModulusSpec& mod = kMods[uniform(0, 2)];
    out.emplace_back(BraidWord(strands, std::move(letters)), mod, q);
  }
  return out;
}

Lemma4SuiteResult lemma4_suite(const std::vector<PeriodicSpec>& specs, unsigned threads,
                               AlexanderCache* cache) {
  struct Job {
    std::size_t spec;
    std::size_t pos;
    TwistConvention convention;
  };
  std::vector<Job> jobs;
  for (std::size_t s = 0; s < specs.size(); ++s)
    for (std::size_t pos = 0; pos < specs[s].pattern.length(); ++pos)
      for (auto conv : {TwistConvention::Standard, TwistConvention::Mirrored})
        jobs.push_back(Job{s, pos, conv});

  std::vector<char> ok(jobs.size(), 0);
  parallel_for(jobs.size(), threads, [&](std::size_t i) {
    const Job& job = jobs[i];
    const PeriodicSpec& spec = specs[job.spec];
    const LaurentPoly before = alexander(periodic_closure(spec, job.convention), cache);
    const LaurentPoly after =
        alexander(periodic_closure(orbit_crossing_change(spec, job.pos), job.convention), cache);
    ok[i] = reduce_mod(before, spec.mod) == reduce_mod(after, spec.mod) ? 1 : 0;
  });

  Lemma4SuiteResult result;
  result.specs = specs.size();
  result.checks = jobs.size();
  for (std::size_t i = 0; i < jobs.size(); ++i)
    if (ok[i] == 0) result.failures.push_back(Lemma4Failure{specs[jobs[i].spec], jobs[i].pos, jobs[i].convention});
  return result;
}

std::string describe(const PeriodicSpec& spec) {
  std::ostringstream out;
  out << "pattern [" << spec.pattern.canonical_key() << "], (r,s)=(" << spec.mod.r() << ","
      << spec.mod.s() << "), q=" << spec.q;
  return out.str();
}

std::string to_string(TwistConvention convention) {
  return convention == TwistConvention::Standard ? "standard" : "mirrored";
}

}  // namespace lensknot
