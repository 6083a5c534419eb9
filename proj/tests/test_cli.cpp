#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  std::string command = std::string(SEACHECK_CLI_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.output.append(buffer, got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("op evaluates the three operations") {
  CliResult sum = run_cli("op oplus a2 b5");
  CHECK(sum.exit_code == 0);
  CHECK(sum.output == "b3\n");

  CliResult undefined = run_cli("op oplus b1 b1");
  CHECK(undefined.exit_code == 0);
  CHECK(undefined.output == "undefined\n");

  CliResult product = run_cli("op circ 'c{1,2}:3' 'c{2,3}:1'");
  CHECK(product.exit_code == 0);
  CHECK(product.output == "c{2}:1\n");

  CliResult supplement = run_cli("op orthosupplement 'c{2,5}:3'");
  CHECK(supplement.exit_code == 0);
  CHECK(supplement.output == "d{2,5}:3\n");
}

TEST_CASE("verify reports a clean fragment and honors --expect-clean") {
  CliResult clean = run_cli("verify sea --instance e0 --n-max 3 --k-max 2");
  CHECK(clean.exit_code == 0);
  CHECK(contains(clean.output, "0 violations"));
  CHECK(contains(clean.output, "mode: exhaustive"));

  CliResult asserted = run_cli(
      "verify sea --instance e0 --n-max 3 --k-max 2 --expect-clean");
  CHECK(asserted.exit_code == 0);

  CliResult mutated = run_cli(
      "verify ea --instance e0 --n-max 2 --k-max 2 --mutate oplus.a_b_eq "
      "--expect-clean");
  CHECK(mutated.exit_code == 1);
  CHECK(contains(mutated.output, "EA3"));
}

TEST_CASE("verify text and json report the same facts") {
  std::string base = "verify sea --instance interval --denominator 6";
  CliResult text = run_cli(base);
  CliResult json_run = run_cli(base + " --format json");
  CHECK(text.exit_code == 0);
  CHECK(json_run.exit_code == 0);

  auto json = nlohmann::json::parse(json_run.output);
  CHECK(json["mode"] == "sampled");
  CHECK(json["violations"].size() == 0);
  CHECK(contains(text.output, "mode: sampled"));
  CHECK(contains(text.output, "0 violations"));
  CHECK(contains(text.output,
                 "instance: " + json["instance"].get<std::string>()));
  CHECK(contains(text.output,
                 "carrier_size: " +
                     std::to_string(json["carrier_size"].get<int>())));
}

TEST_CASE("dominate emits a verifiable refutation certificate") {
  CliResult json_run =
      run_cli("dominate a1 --n-max 2 --k-max 2 --format json");
  CHECK(json_run.exit_code == 0);
  auto json = nlohmann::json::parse(json_run.output);
  CHECK(json["target"] == "a1");
  CHECK(json["dominated"].is_null());
  CHECK(json["refutation_pairs"].size() ==
        json["sharp_upper_bounds_in_fragment"].size());

  CliResult text = run_cli("dominate a1 --n-max 2 --k-max 2");
  CHECK(text.exit_code == 0);
  for (const auto& pair : json["refutation_pairs"]) {
    CHECK(contains(text.output, pair["s"].get<std::string>()));
    CHECK(contains(text.output, pair["s_prime"].get<std::string>()));
  }
}

TEST_CASE("order queries") {
  CliResult yes = run_cli("order leq a1 'd{3}:1'");
  CHECK(yes.exit_code == 0);
  CHECK(yes.output == "true witness=d{3}:2\n");

  CliResult no = run_cli("order leq a1 'c{3}:1'");
  CHECK(no.exit_code == 0);
  CHECK(no.output == "false\n");

  CliResult meet =
      run_cli("order meet 'd{1}:1' 'd{2}:1' --n-max 3 --k-max 3 --format json");
  CHECK(meet.exit_code == 0);
  auto json = nlohmann::json::parse(meet.output);
  CHECK(json["outcome"]["kind"] == "meet");
  CHECK(json["outcome"]["value"] == "d{1,2}:1");

  CliResult sharp_uppers =
      run_cli("order upper-bounds a1 --sharp-only --n-max 2 --k-max 2");
  CHECK(sharp_uppers.exit_code == 0);
  CHECK(sharp_uppers.output == "1\nd{1}:1\nd{1,2}:1\nd{2}:1\n");
}

TEST_CASE("elements lists the carrier") {
  CliResult result = run_cli("elements --n-max 1 --k-max 1");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "0\n1\na1\nb1\nc{1}:1\nd{1}:1\n");
}

TEST_CASE("chain-meet and sharp-closure run end to end") {
  CliResult chain = run_cli(
      "chain-meet --chain '{1};{1,2}' --n-max 2 --k-max 2 --format json");
  CHECK(chain.exit_code == 0);
  auto json = nlohmann::json::parse(chain.output);
  CHECK(json["prefixes"].size() == 2);
  CHECK(json["prefixes"][1]["meet"]["outcome"]["value"] == "d{1,2}:1");
  CHECK(json["continuity"]["violations"].empty());

  CliResult closure = run_cli("sharp-closure --n-max 2 --k-max 2");
  CHECK(closure.exit_code == 0);
  CHECK(contains(closure.output, "0 counterexamples"));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("op oplus a0 b1").exit_code == 2);
  CHECK(contains(run_cli("op oplus a0 b1").output, "position"));
  CHECK(run_cli("op oplus a1").exit_code == 2);
  CHECK(run_cli("order leq a1").exit_code == 2);
  CHECK(run_cli("bogus").exit_code == 2);
  CHECK(run_cli("verify sea --instance nope").exit_code == 2);
  CHECK(run_cli("verify sea --instance boolean --mutate oplus.a_a").exit_code ==
        2);
  CHECK(run_cli("chain-meet --chain '{1};{2}'").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("json reports are byte-stable across runs and thread counts") {
  std::string base =
      "verify sea --instance e0 --n-max 2 --k-max 2 --format json";
  CliResult first = run_cli(base);
  CliResult second = run_cli(base);
  CliResult threaded = run_cli(base + " --threads 4");
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(first.output == threaded.output);
}
