#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "brick/cli.hpp"
#include "brick/search.hpp"

using namespace brick;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("brick-check") {
  const Run r = run({"brick-check", "44", "117", "240"});
  CHECK(r.code == cli::kExitClean);
  CHECK(has(r.out, "Euler brick: yes"));
  CHECK(has(r.out, "perfect: no"));
  CHECK(run({"brick-check", "44", "117"}).code == cli::kExitError);
  CHECK(run({"brick-check", "44", "117", "x"}).code == cli::kExitError);
}

TEST_CASE("curve-info and torsion") {
  Run r = run({"curve-info", "--s", "2"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "c: -7/25"));
  CHECK(has(r.out, "A: 1054/625"));
  CHECK(has(r.out, "torsion: Z/4 x Z/2"));
  CHECK(has(r.out, "generator: (146/25, 9408/625)"));
  r = run({"curve-info", "--s", "1"});
  CHECK(r.code == cli::kExitError);
  CHECK(has(r.err, "degenerate"));
  CHECK(run({"curve-info", "--s", "1/0"}).code == cli::kExitError);
  CHECK(run({"torsion", "--pair", "2,1"}).code == 0);
}

TEST_CASE("sweep and pairs") {
  Run r = run({"sweep", "--max", "39", "--coprime", "--stats"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "tuples: 223729, squares: 0"));
  r = run({"pairs", "--max", "40"});
  CHECK(has(r.out, "pairs: 331"));
  CHECK(run({"sweep", "--max", "x"}).code == cli::kExitError);
  CHECK(run({"sweep", "--bogus"}).code == cli::kExitError);
  CHECK(run({"no-such-command"}).code == cli::kExitError);
  CHECK(run({}).code == cli::kExitError);
}

TEST_CASE("JSON output and record stream") {
  const auto dir = std::filesystem::temp_directory_path() / "brick_test_cli";
  std::filesystem::create_directories(dir);
  const auto out = (dir / "b.jsonl").string();
  std::filesystem::remove(out);
  const Run r = run({"--json", "blockers", "--max", "12", "--coprime", "--out", out});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("tuples") == "2025");
  CHECK(j.at("blocker_classes").at("2") == "256");

  // counts rebuilt from the stream agree with the summary
  std::ifstream in(out);
  std::uint64_t lines = 0, two = 0, three = 0;
  for (std::string line; std::getline(in, line);) {
    const TupleRecord rec = parse_json_line(line);
    ++lines;
    REQUIRE(rec.blocker_class.has_value());
    two += *rec.blocker_class == BlockerClass::kTwo;
    three += *rec.blocker_class == BlockerClass::kThreeMod4;
  }
  CHECK(lines == 2025);
  CHECK(two == 256);
  CHECK(three == 0);

  const Run s = run({"sweep", "--json", "--max", "12"});
  CHECK(nlohmann::json::parse(s.out).at("tuples") == "961");
}

TEST_CASE("number-theoretic commands") {
  CHECK(run({"kummer-verify", "--s", "2", "--primes", "5", "--trials", "10"}).code == 0);
  CHECK(run({"delta-generic", "--random", "20", "--seed", "3"}).code == 0);
  Run r = run({"c-primes", "--s", "3/2"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "p=7"));
  CHECK(has(r.out, "p=17"));
  r = run({"sieve", "--s", "2", "--height", "100"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "survivors 0"));
  CHECK(run({"descent", "--s", "2", "--height", "500"}).code == 0);
  // delta3 = 1 at non-torsion points with f outside the class of 2
  r = run({"descent", "--s", "1/4", "--height", "3000"});
  CHECK(r.code == cli::kExitFinding);
  CHECK(has(r.out, "CASE (a) COUNTEREXAMPLE"));
}
