#include <optional>
#include <string>
#include <vector>

#include "doctest.h"
#include "seacheck/e0_instance.hpp"
#include "seacheck/instances.hpp"
#include "seacheck/verify.hpp"
#include "support/oracle.hpp"

using namespace seacheck;
using namespace seacheck::testing;

namespace {

// Deliberately broken instance: 0 and 1 coincide.
struct DegenerateInstance {
  using element_type = int;
  std::vector<int> members{0};
  std::string label() const { return "degenerate"; }
  const std::vector<int>& carrier() const { return members; }
  int zero() const { return 0; }
  int one() const { return 0; }
  std::optional<int> oplus(int x, int y) const { return x + y; }
  int circ(int x, int y) const { return x * y; }
  std::string render(int x) const { return std::to_string(x); }
  bool exhaustive() const { return true; }
};

}  // namespace

TEST_CASE("e0 fragments satisfy all nine axiom families") {
  for (auto [n, k] : {std::pair{1, 1}, std::pair{2, 2}, std::pair{3, 2}}) {
    E0Instance inst(Fragment(n, k));
    CHECK(verify_ea(inst).empty());
    CHECK(verify_sea(inst).empty());
  }
}

TEST_CASE("reference instances satisfy all nine axiom families") {
  CHECK(verify_sea(BooleanInstance(1)).empty());
  CHECK(verify_sea(BooleanInstance(2)).empty());
  CHECK(verify_sea(BooleanInstance(3)).empty());
  CHECK(verify_ea(IntervalInstance(6)).empty());
  CHECK(verify_sea(IntervalInstance(6)).empty());
}

TEST_CASE("reports carry the mode label") {
  CHECK(run_sea(E0Instance(Fragment(2, 1))).mode == "exhaustive");
  CHECK(run_sea(BooleanInstance(2)).mode == "exhaustive");
  CHECK(run_sea(IntervalInstance(6)).mode == "sampled");
  CHECK(run_ea(E0Instance(Fragment(2, 1))).axiom_families_checked ==
        ea_family_names());
  CHECK(run_sea(E0Instance(Fragment(2, 1))).axiom_families_checked ==
        sea_family_names());
}

TEST_CASE("checker verdicts match the naive re-scan") {
  E0Instance clean(Fragment(2, 2));
  CHECK(naive_sea_holds(clean));
  CHECK(verify_sea(clean).empty());

  Fragment f(3, 2);
  for (const MutationSpec& spec : shipped_mutations()) {
    E0Instance mutant = apply_mutation(f, spec);
    bool naive_ok = naive_sea_holds(mutant);
    bool checker_ok = verify_sea(mutant).empty();
    CHECK(naive_ok == checker_ok);
    CHECK(!checker_ok);
  }
}

TEST_CASE("the SEA phase is skipped while the EA axioms are broken") {
  E0Instance mutant =
      apply_mutation(Fragment(2, 2), mutation_for_rule("oplus.a_b_eq"));
  VerifyReport report = run_sea(mutant);
  CHECK(report.axiom_families_checked == ea_family_names());
  for (const Violation& v : report.violations) {
    CHECK(v.axiom.starts_with("EA"));
  }
}

TEST_CASE("violation lists are deterministic and schedule-independent") {
  E0Instance mutant =
      apply_mutation(Fragment(3, 2), mutation_for_rule("oplus.a_a"));

  VerifyOptions serial;
  VerifyOptions parallel;
  parallel.threads = 4;

  std::string first = run_sea(mutant, serial).to_json().dump();
  std::string second = run_sea(mutant, serial).to_json().dump();
  std::string threaded = run_sea(mutant, parallel).to_json().dump();
  CHECK(first == second);
  CHECK(first == threaded);

  std::string clean_serial = run_sea(E0Instance(Fragment(2, 2))).to_json().dump();
  std::string clean_threaded =
      run_sea(E0Instance(Fragment(2, 2)), parallel).to_json().dump();
  CHECK(clean_serial == clean_threaded);
}

TEST_CASE("early stop still reports at least one violation") {
  VerifyOptions opts;
  opts.early_stop = true;
  E0Instance mutant =
      apply_mutation(Fragment(3, 2), mutation_for_rule("circ.c_c_meet"));
  auto all = verify_sea(mutant);
  auto stopped = verify_sea(mutant, opts);
  CHECK(!stopped.empty());
  CHECK(stopped.size() <= all.size());
}

TEST_CASE("degenerate configurations are rejected") {
  CHECK_THROWS_AS(verify_ea(DegenerateInstance{}), std::invalid_argument);
  CHECK_THROWS_AS(verify_sea(DegenerateInstance{}), std::invalid_argument);
}

TEST_CASE("violations replay against the instance that produced them") {
  Fragment f(3, 2);
  E0Instance clean(f);
  for (const char* rule : {"oplus.a_b_eq", "circ.b_b"}) {
    E0Instance mutant = apply_mutation(f, mutation_for_rule(rule));
    auto violations = verify_sea(mutant);
    REQUIRE(!violations.empty());
    std::size_t checked = 0;
    for (const Violation& v : violations) {
      CHECK(replay_violation(mutant, v));
      if (++checked == 25) break;
    }
    // the same record must fail to replay against the unmutated table
    CHECK(!replay_violation(clean, violations.front()));
  }
}
