#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "cicy/ground_truth.hpp"
#include "cicy/serialization.hpp"

using namespace cicy;
using nlohmann::json;

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string text;  // stdout and stderr, interleaved
};

CommandResult run_cli(const std::string& args) {
  const std::string command = std::string(CICY_CLI_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string text;
  char buffer[4096];
  for (std::size_t n; (n = fread(buffer, 1, sizeof buffer, pipe)) > 0;) text.append(buffer, n);
  const int status = pclose(pipe);
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), std::move(text)};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << content;
}

constexpr const char* kQuinticLike = R"('{"dims":[2,3],"matrix":[[2,1],[0,4]]}')";
constexpr const char* kCubicPair = R"('{"dims":[2,2],"matrix":[[3],[3]]}')";

}  // namespace

TEST_CASE("usage errors exit with code 2", "[cli]") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("enumerate --max-codim 0").exit_code == 2);
  CHECK(run_cli("enumerate --max-codim 6").exit_code == 2);
  CHECK(run_cli("enumerate --no-such-flag").exit_code == 2);
  CHECK(run_cli("enumerate --format yaml").exit_code == 2);
  CHECK(run_cli("zset").exit_code == 2);
  CHECK(run_cli("zset garbage").exit_code == 2);

  const auto help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.text.find("verify-paper") != std::string::npos);
}

TEST_CASE("enumerate renders the census in three formats", "[cli]") {
  const auto text = run_cli("enumerate");
  CHECK(text.exit_code == 0);
  CHECK(text.text.find("Codimension 1 (2 configurations)") != std::string::npos);
  CHECK(text.text.find("Codimension 5 (8 configurations)") != std::string::npos);
  CHECK(text.text.find("total: 57") != std::string::npos);

  const auto truncated = run_cli("enumerate --max-codim 2");
  CHECK(truncated.exit_code == 0);
  CHECK(truncated.text.find("total: 13") != std::string::npos);

  const auto as_json = run_cli("enumerate --format json");
  CHECK(as_json.exit_code == 0);
  const json parsed = json::parse(as_json.text);
  REQUIRE(parsed.is_array());
  CHECK(parsed.size() == 57);
  CHECK(parsed[0].contains("dims"));
  CHECK(parsed[0].contains("codim"));

  const auto as_csv = run_cli("enumerate --format csv");
  CHECK(as_csv.exit_code == 0);
  CHECK(std::count(as_csv.text.begin(), as_csv.text.end(), '\n') == 58);
  CHECK(as_csv.text.rfind("a1,a2,matrix,codim,", 0) == 0);
}

TEST_CASE("enumerate honors --output", "[cli]") {
  const std::string path = "cli_census_out.json";
  const auto result = run_cli("enumerate --format json --output " + path);
  CHECK(result.exit_code == 0);
  CHECK(result.text.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  const json parsed = json::parse(in);
  CHECK(parsed.size() == 57);
  std::remove(path.c_str());
}

TEST_CASE("zset prints the certified set with a certificate table", "[cli]") {
  const auto result = run_cli(std::string("zset ") + kCubicPair);
  CHECK(result.exit_code == 0);
  CHECK(result.text.find("nondegenerate curves require d1 >= 2, d2 >= 2") != std::string::npos);
  CHECK(result.text.find("[15 bidegrees]") != std::string::npos);
  CHECK(result.text.find("(5,5)") == std::string::npos);
  CHECK(result.text.find("FiniteAllCurves") != std::string::npos);
  CHECK(result.text.find("FiniteNondegenerate") != std::string::npos);

  const auto as_json = run_cli(std::string("zset ") + kQuinticLike + " --format json");
  CHECK(as_json.exit_code == 0);
  const json parsed = json::parse(as_json.text);
  CHECK(parsed["z_set"] == json::parse("[[2,3],[2,4]]"));
  CHECK(parsed["w_min"] == json::parse("[2,3]"));
  CHECK(parsed["certificates"].size() == 5);  // three low bidegrees + two certified
}

TEST_CASE("zset refuses an ambient with a P^1 factor and names the partner", "[cli]") {
  const auto result = run_cli(R"(zset '{"dims":[1,3],"matrix":[[2],[4]]}')");
  CHECK(result.exit_code == 3);
  CHECK(result.text.find("dimension >= 2") != std::string::npos);
  CHECK(result.text.find("[2,1 ; 0,4]") != std::string::npos);
}

TEST_CASE("zset flags the configuration with a known degenerate family", "[cli]") {
  const std::string path = "cli_ty_fixture.json";
  write_file(path, R"({"dims":[3,3],"matrix":[[3,1,0],[0,1,3]]})");
  const auto result = run_cli("zset @" + path);
  std::remove(path.c_str());
  CHECK(result.exit_code == 0);
  CHECK(result.text.find("[1 bidegree]") != std::string::npos);
  CHECK(result.text.find("note: a positive-dimensional family of degenerate") != std::string::npos);
}

TEST_CASE("dims reports the dimension bookkeeping", "[cli]") {
  const auto result = run_cli(std::string("dims ") + kCubicPair + " 2 2");
  CHECK(result.exit_code == 0);
  CHECK(result.text.find("curve moduli dimension:     13") != std::string::npos);
  CHECK(result.text.find("intersection family:        99") != std::string::npos);
  CHECK(result.text.find("fiber over a fixed curve:   86") != std::string::npos);
  CHECK(result.text.find("incidence variety:          99") != std::string::npos);

  const auto corrected = run_cli(std::string("dims ") + kCubicPair + " 2 2 --h1-sum 3");
  CHECK(corrected.exit_code == 0);
  CHECK(corrected.text.find("fiber over a fixed curve:   89") != std::string::npos);
  CHECK(corrected.text.find("incidence variety:          102") != std::string::npos);

  const auto as_json = run_cli(std::string("dims ") + kCubicPair + " 2 2 --format json");
  CHECK(as_json.exit_code == 0);
  const json parsed = json::parse(as_json.text);
  CHECK(parsed["dimensions"]["fiber_dim"] == 86);
  CHECK(parsed["dimensions"]["dim_incidence"] == 99);

  CHECK(run_cli(std::string("dims ") + kCubicPair + " 0 0").exit_code == 2);
}

TEST_CASE("certificate reports a single verdict", "[cli]") {
  const auto certified = run_cli(std::string("certificate ") + kQuinticLike + " 2 3");
  CHECK(certified.exit_code == 0);
  CHECK(certified.text.find("FiniteNondegenerate") != std::string::npos);
  CHECK(certified.text.find("splits") != std::string::npos);

  const auto empty = run_cli(std::string("certificate ") + kQuinticLike + " 1 5");
  CHECK(empty.exit_code == 0);
  CHECK(empty.text.find("EmptyNondegenerate") != std::string::npos);

  const auto as_json = run_cli(std::string("certificate ") + kQuinticLike + " 2 3 --format json");
  CHECK(as_json.exit_code == 0);
  const json parsed = json::parse(as_json.text);
  CHECK(parsed["certificate"]["verdict"] == "FiniteNondegenerate");
  CHECK(parsed["certificate"]["witness"].size() == 2);

  CHECK(run_cli(std::string("certificate ") + kQuinticLike + " 0 0").exit_code == 2);
}

TEST_CASE("verify-paper passes against the embedded tables", "[cli]") {
  const auto result = run_cli("verify-paper");
  CHECK(result.exit_code == 0);
  CHECK(result.text.find("verification: PASS") != std::string::npos);
  CHECK(result.text.find("MISMATCH") == std::string::npos);

  const auto as_json = run_cli("verify-paper --format json");
  CHECK(as_json.exit_code == 0);
  const json parsed = json::parse(as_json.text);
  CHECK(parsed["census_match"] == true);
  CHECK(parsed["fingerprint_ok"] == true);
}

TEST_CASE("verify-paper catches a perturbed table cell", "[cli]") {
  json tables = ground_truth_to_json(embedded_ground_truth());
  tables["finite_bidegree_table"][0]["z_set"][0][0] =
      tables["finite_bidegree_table"][0]["z_set"][0][0].get<int>() + 1;
  const std::string path = "cli_perturbed_tables.json";
  write_file(path, tables.dump(2));

  const auto result = run_cli("verify-paper --ground-truth " + path + " --format json");
  std::remove(path.c_str());
  CHECK(result.exit_code == 1);
  const json parsed = json::parse(result.text);
  CHECK(parsed["census_match"] == false);
  CHECK(parsed["zset_mismatches"].size() == 1);
  CHECK(parsed["per_codim_diffs"].empty());
  CHECK_FALSE(parsed.contains("fingerprint"));  // file-loaded tables are not fingerprinted
}

TEST_CASE("verify-paper catches a dropped census row", "[cli]") {
  json tables = ground_truth_to_json(embedded_ground_truth());
  tables["census_table"].erase(0);
  const std::string path = "cli_dropped_row_tables.json";
  write_file(path, tables.dump(2));

  const auto text = run_cli("verify-paper --ground-truth " + path);
  CHECK(text.exit_code == 1);
  CHECK(text.text.find("verification: FAIL") != std::string::npos);
  CHECK(text.text.find("computed but not listed") != std::string::npos);
  CHECK(text.text.find("count census rows listed: listed 57, computed 56  << MISMATCH") !=
        std::string::npos);

  const auto as_json = run_cli("verify-paper --ground-truth " + path + " --format json");
  std::remove(path.c_str());
  CHECK(as_json.exit_code == 1);
  CHECK(json::parse(as_json.text)["census_match"] == false);
}

TEST_CASE("verify-paper rejects unreadable or malformed table files", "[cli]") {
  CHECK(run_cli("verify-paper --ground-truth no_such_tables.json").exit_code == 2);

  const std::string path = "cli_malformed_tables.json";
  write_file(path, "{not json at all");
  const auto result = run_cli("verify-paper --ground-truth " + path);
  std::remove(path.c_str());
  CHECK(result.exit_code == 2);
  CHECK(result.text.find("malformed ground truth JSON") != std::string::npos);
}
