#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "seacheck/e0.hpp"
#include "seacheck/verify.hpp"

namespace seacheck {

// Poset machinery over fragments. A fragment meet/join is evidence about
// the full algebra, not a claim: all outcomes below are "in-fragment",
// and the tests pin the instances where the two provably coincide.

enum class BoundOutcome { extremum, no_extremum, empty };

struct MeetReport {
  std::vector<Element> subject;
  std::vector<Element> lower_bounds;          // within the fragment
  std::vector<Element> maximal_lower_bounds;  // pairwise incomparable
  BoundOutcome outcome = BoundOutcome::empty;
  std::optional<Element> meet;  // set iff outcome == extremum

  nlohmann::json to_json() const;
  std::string to_text() const;
};

struct JoinReport {
  std::vector<Element> subject;
  std::vector<Element> upper_bounds;
  std::vector<Element> minimal_upper_bounds;
  BoundOutcome outcome = BoundOutcome::empty;
  std::optional<Element> join;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Multiplicative sharpness: x ∘ x = x.
bool is_sharp(const Element& x);

/// Order-theoretic sharpness at fragment scale: the in-fragment meet of
/// {x, x'} exists and is 0.
bool is_sharp_order(const Element& x, const Fragment& fragment);

/// All sharp fragment members, in canonical order.
std::vector<Element> sharp_elements(const Fragment& fragment);

std::vector<Element> upper_bounds(const Element& x, const Fragment& fragment,
                                  bool sharp_only = false);
std::vector<Element> lower_bounds(const Element& x, const Fragment& fragment);

/// Common lower bounds of the subject within the fragment, their maximal
/// elements, and the greatest one when it exists. Subject must be a
/// nonempty subset of the carrier.
MeetReport meet_in_fragment(const std::vector<Element>& subject,
                            const Fragment& fragment);
JoinReport join_in_fragment(const std::vector<Element>& subject,
                            const Fragment& fragment);

struct RefutationPair {
  Element bound;    // a sharp upper bound s of the target
  Element smaller;  // sharp s' with target ≤ s' < s
};

/// Evidence that the sharp upper bounds of `target` have no least member
/// (or the least member, when there is one). Every claim in `pairs`
/// re-verifies through oplus/circ/leq before the certificate is returned.
struct DominatorCertificate {
  Element target = Element::zero();
  std::vector<Element> sharp_upper_bounds;  // within the fragment
  std::optional<Element> least;             // the least sharp dominator, if any
  std::vector<RefutationPair> pairs;        // one per sharp upper bound otherwise

  bool dominated() const { return least.has_value(); }

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// For each sharp upper bound s of the target, constructs a sharp s' with
/// target ≤ s' < s — for s = d_{S,1} by adjoining the smallest fresh index
/// to S — and re-verifies every pair. Targets that do have a least sharp
/// dominator (0, 1, sharp elements, b- and d-type elements) come back with
/// `least` set instead. Throws std::logic_error if a constructed pair
/// fails re-verification.
DominatorCertificate refute_least_sharp_dominator(const Element& target,
                                                  const Fragment& fragment);

struct ChainPrefix {
  std::vector<Element> members;  // d_{S_1,1} > d_{S_2,1} > ... (the prefix)
  MeetReport meet;
  int meet_ground_set_size = 0;
  bool meet_sharp = false;
};

struct ChainContinuity {
  // Finite-prefix evidence for the descending-chain continuity laws:
  // x∘(meet of the prefix) against the meet of {x∘member}, and
  // independence from the prefix carrying over to its meet. Products that
  // leave the carrier are skipped and counted.
  int product_checked = 0;
  int product_skipped = 0;
  int independence_checked = 0;
  std::vector<std::string> violations;
};

struct ChainMeetReport {
  std::string fragment_label;
  std::vector<ChainPrefix> prefixes;
  ChainContinuity continuity;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// For a strictly increasing chain of ground sets S_1 ⊊ S_2 ⊊ ..., the
/// elements d_{S_i,1} form a strictly decreasing chain of sharp elements;
/// reports the in-fragment meet of every prefix and the growth of the
/// meet's ground set. Throws std::invalid_argument unless the chain is
/// strictly increasing and within {1..k_max}.
ChainMeetReport chain_meet_analysis(const std::vector<IndexSet>& ground_sets,
                                    const Fragment& fragment);

struct ClosureCounterexample {
  std::vector<Element> subject;
  bool join = false;  // false: meet failed sharpness, true: join did
  Element value = Element::zero();
};

struct SharpClosureReport {
  std::string fragment_label;
  int max_subset_size = 0;
  std::vector<Element> sharp;
  int subsets_checked = 0;
  int meets_found = 0;
  int joins_found = 0;
  std::vector<ClosureCounterexample> counterexamples;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// For every subset of sharp fragment elements up to the given size:
/// whenever the in-fragment meet (join) exists, it must be sharp.
SharpClosureReport check_sharp_closure(const Fragment& fragment,
                                       int max_subset_size = 3);

// ---------------------------------------------------------------------
// Generic order helpers, usable on any checkable instance.

template <Algebra A>
bool is_sharp_mult(const A& alg, const typename A::element_type& x) {
  return alg.circ(x, x) == x;
}

template <Algebra A>
std::vector<typename A::element_type> sharp_set(const A& alg) {
  std::vector<typename A::element_type> out;
  for (const auto& x : alg.carrier()) {
    if (is_sharp_mult(alg, x)) out.push_back(x);
  }
  return out;
}

/// Witness scan for x ≤ y over the instance's own carrier.
template <Algebra A>
std::optional<typename A::element_type> leq_witness_search(
    const A& alg, const typename A::element_type& x,
    const typename A::element_type& y) {
  for (const auto& w : alg.carrier()) {
    auto sum = alg.oplus(x, w);
    if (sum && *sum == y) return w;
  }
  return std::nullopt;
}

/// Smallest sharp element above x within the carrier, when one exists.
template <Algebra A>
std::optional<typename A::element_type> least_sharp_dominator(
    const A& alg, const typename A::element_type& x) {
  std::vector<typename A::element_type> above;
  for (const auto& s : alg.carrier()) {
    if (is_sharp_mult(alg, s) && leq_witness_search(alg, x, s)) {
      above.push_back(s);
    }
  }
  for (const auto& candidate : above) {
    bool least = true;
    for (const auto& s : above) {
      if (!leq_witness_search(alg, candidate, s)) {
        least = false;
        break;
      }
    }
    if (least) return candidate;
  }
  return std::nullopt;
}

}  // namespace seacheck
