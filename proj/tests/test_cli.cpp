#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <map>

#include "bistellar/bistellar.hpp"
#include "cli_cases.hpp"

using Catch::Matchers::ContainsSubstring;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = bistellar::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bistellar_cli_" + name);
}

/// Transcripts by case name, computed once.
const std::map<std::string, std::string>& transcripts() {
  static const std::map<std::string, std::string> by_name = [] {
    std::map<std::string, std::string> m;
    const auto list = cli_cases::run_all(scratch("golden"));
    for (std::size_t i = 0; i < list.size(); ++i) m[cli_cases::all()[i].name] = list[i];
    return m;
  }();
  return by_name;
}

}  // namespace

TEST_CASE("CLI output matches the golden transcripts", "[cli][golden]") {
  const bool update = std::getenv("BISTELLAR_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : cli_cases::all()) {
    INFO(c.name);
    const std::string& actual = transcripts().at(c.name);
    if (update) {
      std::ofstream(cli_cases::golden_path(c), std::ios::binary) << actual;
      continue;
    }
    REQUIRE(std::filesystem::exists(cli_cases::golden_path(c)));
    CHECK(cli_cases::slurp(cli_cases::golden_path(c)) == actual);
  }
}

TEST_CASE("CLI output is byte-identical across runs", "[cli][golden]") {
  const auto second = cli_cases::run_all(scratch("rerun"));
  for (std::size_t i = 0; i < second.size(); ++i) {
    INFO(cli_cases::all()[i].name);
    CHECK(second[i] == transcripts().at(cli_cases::all()[i].name));
  }
}

TEST_CASE("exit codes", "[cli]") {
  const std::map<std::string, int> expected = {
      {"check_disk", 1},         {"check_genus2", 0},       {"walk_stuck", 0},
      {"verify_dim2", 0},        {"verify_dim3", 0},        {"rank_table", 0},
      {"error_unknown_verb", 2}, {"error_missing_file", 1}, {"error_malformed", 1},
      {"error_stale_site", 1},   {"error_missing_flag", 2}, {"error_dim_range", 2},
      {"error_generator", 1},    {"error_unknown_flag", 2}};
  for (const auto& [name, code] : expected) {
    INFO(name);
    CHECK_THAT(transcripts().at(name), ContainsSubstring("\nexit: " + std::to_string(code) + "\n"));
  }
}

TEST_CASE("solve, verify and info report the expected quantities", "[cli]") {
  const Result solve = run({"solve", "--dim", "3"});
  CHECK(solve.code == 0);
  CHECK_THAT(solve.out, ContainsSubstring("type 0: (1, 4, 6, 3)"));
  CHECK_THAT(solve.out, ContainsSubstring("type 1: (0, 1, 2, 1)"));
  CHECK_THAT(solve.out, ContainsSubstring("constraint rank: 2"));
  CHECK_THAT(solve.out, ContainsSubstring("(0, 0, 1, -2)"));

  const Result verify = run({"verify", "--dim", "2"});
  CHECK(verify.code == 0);
  CHECK_THAT(verify.out, ContainsSubstring("all basis functionals proportional to χ; constants: 1, 0"));

  const auto& info = transcripts().at("info_sphere2");
  CHECK_THAT(info, ContainsSubstring("euler characteristic: 2\n"));
  CHECK_THAT(info, ContainsSubstring(": (0, 0)\n"));
}

TEST_CASE("error messages locate the problem", "[cli]") {
  CHECK_THAT(transcripts().at("error_missing_file"), ContainsSubstring("nowhere.json"));
  CHECK_THAT(transcripts().at("error_malformed"), ContainsSubstring("malformed.json: at /facets/1"));
  CHECK_THAT(transcripts().at("error_stale_site"), ContainsSubstring("site index 99"));
  CHECK_THAT(transcripts().at("error_unknown_verb"), ContainsSubstring("Usage"));
}

TEST_CASE("apply then info reflects the move delta", "[cli][property]") {
  const auto dir = scratch("apply");
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const std::string before = (dir / "before.json").string();
  REQUIRE(run({"gen", "join:1,1", "-o", before}).code == 0);
  const auto sites = nlohmann::json::parse(run({"--json", "moves", before}).out)["sites"];
  for (const auto& site : sites) {
    const std::string after = (dir / "after.json").string();
    const std::string index = std::to_string(site["index"].get<int>());
    REQUIRE(run({"apply", before, "--site", index, "-o", after}).code == 0);
    const auto f0 = nlohmann::json::parse(run({"--json", "info", before}).out)["f"].get<std::vector<std::int64_t>>();
    const auto f1 = nlohmann::json::parse(run({"--json", "info", after}).out)["f"].get<std::vector<std::int64_t>>();
    const auto delta = bistellar::move_delta(3, site["type"].get<int>()).entries;
    for (std::size_t k = 0; k < f0.size(); ++k) CHECK(f1[k] - f0[k] == delta[k]);
  }
}

TEST_CASE("walk traces are reproducible and well formed", "[cli]") {
  const auto dir = scratch("walk");
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const std::string input = (dir / "t.json").string();
  REQUIRE(run({"gen", "torus7", "-o", input}).code == 0);
  const std::string a = (dir / "a.jsonl").string();
  const std::string b = (dir / "b.jsonl").string();
  REQUIRE(run({"walk", input, "--steps", "60", "--seed", "5", "--cap", "50", "-o", a}).code == 0);
  REQUIRE(run({"walk", input, "--steps", "60", "--seed", "5", "--cap", "50", "-o", b}).code == 0);
  CHECK(cli_cases::slurp(a) == cli_cases::slurp(b));

  std::istringstream lines(cli_cases::slurp(a));
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j["step"] == ++count);
    const auto f = j["f"].get<std::vector<std::int64_t>>();
    CHECK(f[0] - f[1] + f[2] == 0);
  }
  CHECK(count == 60);
}

TEST_CASE("zoo export", "[cli]") {
  const auto dir = scratch("zoo");
  std::filesystem::remove_all(dir);
  REQUIRE(run({"zoo", "--dim", "2", "-o", dir.string()}).code == 0);
  const auto manifest = nlohmann::json::parse(cli_cases::slurp(dir / "manifest.json"));
  CHECK(manifest.size() == bistellar::zoo(2).size());
  for (const auto& entry : manifest) {
    const auto c = bistellar::load_complex((dir / entry["file"].get<std::string>()).string());
    CHECK(bistellar::euler_characteristic(c) == entry["euler_characteristic"].get<std::int64_t>());
    CHECK(entry["verdict"] == "Verified");
  }
}

TEST_CASE("help", "[cli]") {
  const Result help = run({"--help"});
  CHECK(help.code == 0);
  CHECK_THAT(help.out, ContainsSubstring("rank-table"));
  CHECK(run({}).code == 2);
}
