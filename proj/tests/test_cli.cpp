#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + LENSKNOT_CLI + std::string(" ") + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = ::pclose(pipe);
  return Run{WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / (name + "." + std::to_string(::getpid()));
}

}  // namespace

TEST_CASE("alexander prints both polynomials") {
  const Run r = run("alexander --braid \"1 1 1\"");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "Δ = t^-1 - 1 + t\n"));
  CHECK(contains(r.out, "∇ = z^2 + 1\n"));

  const Run hopf = run("alexander --braid \"1 1\"");
  CHECK(contains(hopf.out, "Δ = t^-1/2 - t^1/2\n"));
  CHECK(contains(hopf.out, "components: 2\n"));

  CHECK(run("alexander --braid \"1 x\"").status == 1);
  CHECK(run("alexander").status == 1);
  CHECK(run("alexander --braid \"1 1\" --strands 1").status == 1);
}

TEST_CASE("alexander JSON and batch mode") {
  const Run r = run("--json alexander --braid \"1 -2 1 -2\"");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["alexander"] == "-t^-1 + 3 - t");
  CHECK(j["conway"] == "-z^2 + 1");
  CHECK(j["components"] == 1);
  CHECK(j["alexander_terms"]["0"] == 3);

  const auto input = temp_path("lensknot-batch");
  {
    std::ofstream out(input);
    out << "# words\n1 1 1\n\nn=3 1 1 1\n-1 -1 -1 -1 -1\n";
  }
  const Run batch = run("--json alexander --input " + input.string());
  REQUIRE(batch.status == 0);
  const auto arr = nlohmann::json::parse(batch.out);
  REQUIRE(arr.size() == 3);
  CHECK(arr[0]["alexander"] == "t^-1 - 1 + t");
  CHECK(arr[1]["alexander"] == "0");
  CHECK(arr[1]["strands"] == 3);
  CHECK(arr[2]["alexander"] == "t^-2 - t^-1 + 1 - t + t^2");
  std::filesystem::remove(input);
  CHECK(run("alexander --input /nonexistent/words.txt").status == 1);
}

TEST_CASE("cache via flag and environment") {
  const auto cache = temp_path("lensknot-cli-cache");
  std::filesystem::remove(cache);
  CHECK(run("alexander --braid \"1 2 1 2 1\" --cache " + cache.string()).status == 0);
  CHECK(std::filesystem::exists(cache));
  std::filesystem::remove(cache);
  CHECK(run("alexander --braid \"1 1 1\"", "LENSKNOT_CACHE=" + cache.string()).status == 0);
  std::ifstream in(cache);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n=2 1 1 1\tt^-1 - 1 + t");
  std::filesystem::remove(cache);
}

TEST_CASE("torus and lift") {
  const Run r = run("torus 3 5");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "closed form: Δ = t^-4 - t^-3 + t^-1 - 1 + t - t^3 + t^4\n"));
  CHECK(contains(r.out, "cross-check: ok\n"));
  CHECK(run("torus 2 4").status == 1);
  CHECK(run("torus 0 3").status == 1);

  const Run lift = run("--json lift 8 1 3");
  REQUIRE(lift.status == 0);
  const auto j = nlohmann::json::parse(lift.out);
  CHECK(j["torus"] == nlohmann::json::array({3, 5}));
  CHECK(run("lift 8 2 3").status == 1);
}

TEST_CASE("lens compare and linking") {
  const Run r = run("lens compare 7 1 7 2");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "homeomorphic: no\n"));
  CHECK(contains(r.out, "homotopy-equivalent: yes\n"));
  CHECK(contains(r.out, "invariant set L(7,1): {1/7, 2/7, 4/7}\n"));

  const Run same = run("lens compare 7 2 7 4");
  CHECK(contains(same.out, "homeomorphic: yes\n"));
  CHECK(contains(same.out, "normal form L(7,4): L(7,2)\n"));
  CHECK(run("lens compare 7 0 7 2").status == 1);
  CHECK(run("lens compare 7 1 7").status == 1);
  CHECK(run("lens info 7 2").status == 0);

  const Run lk = run("linking 7 2 3");
  CHECK(lk.status == 0);
  CHECK(contains(lk.out, "= 4/7\n"));
}

TEST_CASE("obstruct report") {
  const Run r = run("--json obstruct 5 1 2");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["global_conclusion"] == "EXCLUDED");
  CHECK(j["linking"] == "4/5");
  CHECK(j["per_factor"][0]["branch"] == "NEITHER");

  const Run w = run("obstruct 8 1 3");
  CHECK(contains(w.out, "2^3  fails       BOTH\n"));
  CHECK(run("obstruct 6 1 3").status == 1);
}

TEST_CASE("lemma4 single check") {
  const Run r = run("lemma4 --pattern \"1 2\" --r 2 --s 1 --q 0 --pos 0");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "congruence: holds\n"));
  CHECK(run("lemma4 --pattern 1 --r 3 --s 1 --q 1 --pos 0 --twist mirrored").status == 0);
  CHECK(run("lemma4 --pattern 1 --r 3 --s 1 --q 1 --pos 0 --twist sideways").status == 1);
  CHECK(run("lemma4 --pattern 1 --r 4 --s 1 --q 1 --pos 0").status == 1);
  CHECK(run("lemma4 --pattern 1 --r 3 --s 1 --pos 4").status == 1);
}

TEST_CASE("verify output is deterministic across thread counts") {
  const Run one = run("verify --pmax 14 --lemma4-count 12 --threads 1");
  const Run three = run("verify --pmax 14 --lemma4-count 12 --threads 3");
  CHECK(one.status == 0);
  CHECK(one.out == three.out);
  CHECK(contains(one.out, "\n0 violations\n"));
  CHECK(contains(one.out, "calibration corpus: "));

  const Run seeded = run("verify --pmax 2 --torus-max 0 --lemma4-count 12 --seed 5");
  CHECK(seeded.status == 0);
  CHECK(seeded.out != run("verify --pmax 2 --torus-max 0 --lemma4-count 12 --seed 6").out);

  CHECK(run("verify --calibration /nonexistent/calibration.txt --pmax 2").status == 1);
}

TEST_CASE("argument errors exit with status 1") {
  CHECK(run("").status == 1);
  CHECK(run("frobnicate").status == 1);
  CHECK(run("torus 3").status == 1);
  CHECK(run("--help").status == 0);
}
