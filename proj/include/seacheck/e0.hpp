#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "seacheck/element.hpp"

namespace seacheck {

// The algebra e0 lives on {0, 1, a_n, b_n, c_{S,n}, d_{S,n}} for positive
// integers n and finite nonempty sets S of positive integers. Its partial
// sum and total product are given by finite case tables; every case has a
// stable identifier so that mutation fixtures can target a single rule.

enum class OplusRule {
  zero_x,        // 0 + x = x
  a_a,           // a_n + a_m = a_{n+m}
  a_b_lt,        // a_n + b_m = b_{m-n}            (n < m)
  a_b_eq,        // a_n + b_n = 1
  a_c,           // a_n + c_{S,m} = c_{S,n+m}
  a_d,           // a_n + d_{S,m} = d_{S,m-n}      (n < m)
  c_c,           // c_{S,n} + c_{T,m} = c_{S∪T,n+m-1}   (S∩T = ∅)
  c_d_proper,    // c_{S,n} + d_{T,m} = d_{T∖S,m-n+1}   (S ⊊ T, n ≤ m)
  c_d_equal_lt,  // c_{S,n} + d_{S,m} = b_{m-n}         (n < m)
  c_d_equal_eq,  // c_{S,n} + d_{S,n} = 1
};

enum class CircRule {
  zero_x,         // 0 ∘ x = 0
  one_x,          // 1 ∘ x = x
  a_a,            // a_n ∘ a_m = 0
  a_b,            // a_n ∘ b_m = a_n
  b_b,            // b_n ∘ b_m = b_{n+m}
  a_c,            // a_n ∘ c_{S,m} = 0
  c_b,            // c_{S,n} ∘ b_m = c_{S,n}
  a_d,            // a_n ∘ d_{S,m} = a_n
  b_d,            // b_n ∘ d_{S,m} = d_{S,m+n}
  d_d,            // d_{S,n} ∘ d_{T,m} = d_{S∪T,n+m-1}
  c_c_meet,       // c_{S,n} ∘ c_{T,m} = c_{S∩T,1}      (S∩T ≠ ∅)
  c_c_disjoint,   // c_{S,n} ∘ c_{T,m} = 0              (S∩T = ∅)
  c_d_diff,       // c_{S,n} ∘ d_{T,m} = c_{S∖T,n}      (S∖T ≠ ∅)
  c_d_sub_gt1,    // c_{S,n} ∘ d_{T,m} = a_{n-1}        (S ⊆ T, n > 1)
  c_d_sub_eq1,    // c_{S,n} ∘ d_{T,m} = 0              (S ⊆ T, n = 1)
};

std::string_view to_string(OplusRule rule);
std::string_view to_string(CircRule rule);

struct OplusOutcome {
  std::optional<Element> result;  // nullopt: the sum is undefined
  std::optional<OplusRule> rule;
};

struct CircOutcome {
  Element result;
  CircRule rule;
};

/// Partial sum. Symmetric; total decision procedure over the whole
/// universe, not just a fragment. Undefinedness is a value, not an error.
std::optional<Element> oplus(const Element& x, const Element& y);
OplusOutcome oplus_case(const Element& x, const Element& y);

/// Total product. Symmetric.
Element circ(const Element& x, const Element& y);
CircOutcome circ_case(const Element& x, const Element& y);

/// The unique y with x + y = 1: 0↔1, a_n↔b_n, c_{S,n}↔d_{S,n}. Involutive.
Element orthosupplement(const Element& x);

struct LeqResult {
  bool holds = false;
  std::optional<Element> witness;  // some w with x + w = y, when holds

  explicit operator bool() const { return holds; }
};

/// Induced order: x ≤ y iff some w has x + w = y. Closed-form case solver;
/// the test suite validates it against brute-force witness search.
LeqResult leq(const Element& x, const Element& y);

/// x ⊥ y iff x + y is defined.
bool orthogonal(const Element& x, const Element& y);
/// Equivalent route through the order: x ≤ y'.
bool orthogonal_via_order(const Element& x, const Element& y);

/// x ∘ y = y ∘ x. Always true here; exists for the generic interface.
bool commutes(const Element& x, const Element& y);

/// Finite sub-universe with subscripts ≤ n_max and ground sets ⊆
/// {1..k_max}. Bounds quantifier ranges for the exhaustive checks only;
/// operations on members may land outside the carrier.
class Fragment {
 public:
  Fragment(int n_max, int k_max);

  int n_max() const { return n_max_; }
  int k_max() const { return k_max_; }

  /// All members in canonical order: |carrier| = 2 + 2N + 2N(2^K - 1).
  const std::vector<Element>& carrier() const { return carrier_; }
  bool contains(const Element& e) const;

 private:
  int n_max_;
  int k_max_;
  std::vector<Element> carrier_;
};

}  // namespace seacheck
