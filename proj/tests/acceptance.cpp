// Acceptance suite: runs every gate criterion end to end, printing one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "seacheck/e0_instance.hpp"
#include "seacheck/instances.hpp"
#include "seacheck/mutation.hpp"
#include "seacheck/order.hpp"
#include "seacheck/parse.hpp"
#include "seacheck/verify.hpp"
#include "support/oracle.hpp"

using namespace seacheck;
using namespace seacheck::testing;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& message) {
    if (!condition && ok) {
      ok = false;
      detail = message;
    }
  }
};

// 1. The fragment with 66 elements passes both axiom families, single
//    threaded, within the time budget.
Check axiom_certification() {
  Check check;
  E0Instance inst(Fragment(4, 3));
  check.require(inst.carrier().size() == 66, "carrier size is not 66");

  auto start = std::chrono::steady_clock::now();
  auto ea = verify_ea(inst);
  auto sea = verify_sea(inst);
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();

  check.require(ea.empty(), std::to_string(ea.size()) + " EA violations");
  check.require(sea.empty(), std::to_string(sea.size()) + " SEA violations");
  check.require(elapsed < 60'000,
                "runtime " + std::to_string(elapsed) + "ms exceeds 60s");
  return check;
}

// 2. The sharp set is exactly {0,1} plus the subscript-1 c/d layer, and
//    the multiplicative and order-theoretic criteria agree everywhere.
Check sharp_set() {
  Check check;
  Fragment f(4, 3);
  std::vector<Element> expected = {Element::zero(), Element::one()};
  for (unsigned mask = 1; mask < 8; ++mask) {
    std::vector<int> members;
    for (int bit = 0; bit < 3; ++bit) {
      if (mask & (1u << bit)) members.push_back(bit + 1);
    }
    expected.push_back(Element::c(IndexSet(members), Index(1)));
    expected.push_back(Element::d(IndexSet(members), Index(1)));
  }
  std::sort(expected.begin(), expected.end());

  check.require(expected.size() == 16, "expected sharp set is not 16 strong");
  check.require(sharp_elements(f) == expected, "sharp set mismatch");
  for (const Element& x : f.carrier()) {
    check.require(is_sharp(x) == is_sharp_order(x, f),
                  "criteria disagree at " + to_string(x));
  }
  return check;
}

// 3. No least sharp upper bound of a1: every sharp upper bound admits a
//    verified strictly smaller one, and a1 is incomparable with the sharp
//    c layer.
Check dominator_refutation() {
  Check check;
  for (int k = 1; k <= 3; ++k) {
    Fragment f(2, k);
    DominatorCertificate cert = refute_least_sharp_dominator(A(1), f);
    check.require(!cert.dominated(),
                  "a1 reported dominated at k=" + std::to_string(k));
    std::set<Element> refuted;
    for (const RefutationPair& pair : cert.pairs) refuted.insert(pair.bound);
    for (const Element& s : cert.sharp_upper_bounds) {
      if (s == Element::one()) continue;
      check.require(refuted.count(s) == 1,
                    "no pair refutes " + to_string(s));
    }
    for (const RefutationPair& pair : cert.pairs) {
      check.require(is_sharp(pair.smaller),
                    to_string(pair.smaller) + " is not sharp");
      LeqResult above = leq(A(1), pair.smaller);
      check.require(above.holds && oplus(A(1), *above.witness) ==
                                       std::optional<Element>(pair.smaller),
                    "a1 is not below " + to_string(pair.smaller));
      LeqResult below = leq(pair.smaller, pair.bound);
      check.require(below.holds && pair.smaller != pair.bound,
                    to_string(pair.smaller) + " is not strictly below " +
                        to_string(pair.bound));
      if (below.holds && pair.smaller != pair.bound) {
        check.require(oplus(pair.smaller, *below.witness) ==
                          std::optional<Element>(pair.bound),
                      "witness fails for " + to_string(pair.bound));
      }
    }
  }
  for (unsigned mask = 1; mask < 8; ++mask) {
    std::vector<int> members;
    for (int bit = 0; bit < 3; ++bit) {
      if (mask & (1u << bit)) members.push_back(bit + 1);
    }
    Element c1 = Element::c(IndexSet(members), Index(1));
    check.require(!leq(A(1), c1).holds && !leq(c1, A(1)).holds,
                  "a1 comparable with " + to_string(c1));
  }
  return check;
}

// 4. Prefix meets of the chain over {1..i} are the sharp d elements with
//    strictly growing ground sets.
Check chain_evidence() {
  Check check;
  Fragment f(2, 4);
  std::vector<IndexSet> chain;
  for (int i = 1; i <= 4; ++i) {
    std::vector<int> members;
    for (int j = 1; j <= i; ++j) members.push_back(j);
    chain.emplace_back(std::move(members));
  }
  ChainMeetReport report = chain_meet_analysis(chain, f);
  check.require(report.prefixes.size() == 4, "expected 4 prefixes");
  for (std::size_t i = 0; i < report.prefixes.size(); ++i) {
    const ChainPrefix& prefix = report.prefixes[i];
    check.require(prefix.meet.outcome == BoundOutcome::extremum,
                  "prefix " + std::to_string(i + 1) + " has no meet");
    if (prefix.meet.outcome != BoundOutcome::extremum) continue;
    check.require(*prefix.meet.meet == Element::d(chain[i], Index(1)),
                  "prefix meet mismatch at " + std::to_string(i + 1));
    check.require(prefix.meet_ground_set_size == static_cast<int>(i + 1),
                  "ground set size not strictly increasing");
    check.require(prefix.meet_sharp, "prefix meet is not sharp");
  }
  return check;
}

// 5. Meets and joins of sharp pairs and triples stay sharp.
Check sharp_closure() {
  Check check;
  SharpClosureReport report = check_sharp_closure(Fragment(3, 2), 3);
  check.require(report.counterexamples.empty(),
                std::to_string(report.counterexamples.size()) +
                    " closure counterexamples");
  check.require(report.meets_found > 0 && report.joins_found > 0,
                "no meets or joins were exercised");
  return check;
}

// 6. Every shipped mutation fixture trips the checker and its violations
//    replay; the required rule families are covered.
Check mutation_sensitivity() {
  Check check;
  const auto& fixtures = shipped_mutations();
  check.require(fixtures.size() >= 5, "fewer than 5 fixtures");
  std::set<std::string> ids;
  for (const MutationSpec& spec : fixtures) ids.insert(spec.rule_id());
  for (const char* required : {"oplus.a_a", "oplus.c_d_proper", "circ.b_b",
                               "circ.c_c_meet", "circ.c_d_diff"}) {
    check.require(ids.count(required) == 1,
                  std::string("missing fixture for ") + required);
  }
  Fragment f(3, 2);
  for (const MutationSpec& spec : fixtures) {
    E0Instance mutant = apply_mutation(f, spec);
    auto violations = verify_sea(mutant);
    check.require(!violations.empty(), spec.rule_id() + " was not detected");
    std::size_t replayed = 0;
    for (const Violation& v : violations) {
      check.require(replay_violation(mutant, v),
                    spec.rule_id() + ": a violation failed to replay");
      if (++replayed == 25) break;
    }
  }
  return check;
}

// 7. The closed-form order matches brute-force search, and is a partial
//    order on the 66-element fragment.
Check order_oracle_agreement() {
  Check check;
  Fragment small(3, 2);
  const auto pool = witness_pool(small);
  for (const Element& x : small.carrier()) {
    for (const Element& y : small.carrier()) {
      LeqResult closed = leq(x, y);
      bool searched = leq_oracle(x, y, pool).has_value();
      check.require(closed.holds == searched,
                    "closed form disagrees with search at " + to_string(x) +
                        " vs " + to_string(y));
      if (closed.holds) {
        check.require(
            oplus(x, *closed.witness) == std::optional<Element>(y),
            "closed-form witness fails at " + to_string(x) + " vs " +
                to_string(y));
      }
    }
  }

  Fragment f(4, 3);
  const auto& c = f.carrier();
  const std::size_t n = c.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = leq(c[i], c[j]).holds;
  }
  for (std::size_t i = 0; i < n; ++i) {
    check.require(rel[i][i], "not reflexive at " + to_string(c[i]));
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && rel[i][j] && rel[j][i]) {
        check.require(false, "antisymmetry fails at " + to_string(c[i]) +
                                 ", " + to_string(c[j]));
      }
      if (!rel[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (rel[j][k] && !rel[i][k]) {
          check.require(false, "transitivity fails at " + to_string(c[i]) +
                                   ", " + to_string(c[j]) + ", " +
                                   to_string(c[k]));
        }
      }
    }
  }
  return check;
}

// 8. The reference instances are clean, their sharp sets are as expected,
//    and every element has a least sharp dominator.
Check reference_instances() {
  Check check;
  for (int k = 1; k <= 3; ++k) {
    BooleanInstance boolean(k);
    check.require(verify_sea(boolean).empty(),
                  "boolean k=" + std::to_string(k) + " fails");
    check.require(sharp_set(boolean) == boolean.carrier(),
                  "boolean sharp set is not the whole carrier");
    for (unsigned x : boolean.carrier()) {
      auto hat = least_sharp_dominator(boolean, x);
      check.require(hat.has_value() && *hat == x,
                    "boolean dominator mismatch");
    }
  }
  IntervalInstance interval(6);
  check.require(verify_sea(interval).empty(), "interval d=6 fails");
  check.require(sharp_set(interval) == std::vector<Rational>{Rational::zero(),
                                                             Rational::one()},
                "interval sharp set is not {0, 1}");
  for (const Rational& x : interval.carrier()) {
    auto hat = least_sharp_dominator(interval, x);
    check.require(hat.has_value(), "interval element lacks a dominator");
    if (hat) {
      check.require(*hat == (x == Rational::zero() ? Rational::zero()
                                                   : Rational::one()),
                    "interval dominator mismatch at " + x.str());
    }
  }
  return check;
}

// 9. Rendering round-trips over the whole fragment, and reports are
//    byte-identical across repeats and thread counts.
Check roundtrip_and_determinism() {
  Check check;
  Fragment f(4, 3);
  for (const Element& e : f.carrier()) {
    check.require(parse_element(to_string(e)) == e,
                  "round trip fails at " + to_string(e));
  }

  VerifyOptions parallel;
  parallel.threads = 4;
  auto stable = [&check](const std::string& name, auto&& run) {
    std::string first = run(VerifyOptions{});
    std::string second = run(VerifyOptions{});
    check.require(first == second, name + ": repeated runs differ");
  };
  auto stable_parallel = [&check, &parallel](const std::string& name,
                                             auto&& run) {
    std::string serial = run(VerifyOptions{});
    std::string threaded = run(parallel);
    check.require(serial == threaded, name + ": parallel run differs");
  };

  E0Instance e0_small(Fragment(3, 2));
  E0Instance e0_full(Fragment(4, 3));
  BooleanInstance boolean(2);
  IntervalInstance interval(6);
  E0Instance mutant =
      apply_mutation(Fragment(3, 2), mutation_for_rule("oplus.a_a"));

  auto run_all = [&](const auto& inst) {
    return [&inst](const VerifyOptions& opts) {
      return run_ea(inst, opts).to_json().dump() +
             run_sea(inst, opts).to_json().dump();
    };
  };

  stable("e0(3,2)", run_all(e0_small));
  stable_parallel("e0(3,2)", run_all(e0_small));
  stable_parallel("e0(4,3)", run_all(e0_full));
  stable("boolean(2)", run_all(boolean));
  stable_parallel("boolean(2)", run_all(boolean));
  stable("interval(6)", run_all(interval));
  stable_parallel("interval(6)", run_all(interval));
  stable("mutated e0(3,2)", run_all(mutant));
  stable_parallel("mutated e0(3,2)", run_all(mutant));
  return check;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Check (*)()>> criteria = {
      {"1. axiom certification on e0(4,3)", axiom_certification},
      {"2. sharp set and criteria agreement", sharp_set},
      {"3. dominator refutation for a1", dominator_refutation},
      {"4. chain meet evidence", chain_evidence},
      {"5. sharp closure under meets and joins", sharp_closure},
      {"6. mutation sensitivity", mutation_sensitivity},
      {"7. order-oracle agreement and partial order", order_oracle_agreement},
      {"8. reference instances", reference_instances},
      {"9. round-trip and determinism", roundtrip_and_determinism},
  };

  int failures = 0;
  for (const auto& [name, run] : criteria) {
    auto start = std::chrono::steady_clock::now();
    Check result = run();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (result.ok) {
      std::printf("PASS  %s (%lldms)\n", name, static_cast<long long>(ms));
    } else {
      ++failures;
      std::printf("FAIL  %s: %s (%lldms)\n", name, result.detail.c_str(),
                  static_cast<long long>(ms));
    }
  }
  if (failures) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
