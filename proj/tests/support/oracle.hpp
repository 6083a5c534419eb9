#pragma once

// Test-only oracles. These deliberately re-state the laws as plain
// quantifier loops and find order witnesses by brute force, independent of
// the closed-form order solver and of the checker's scan structure.

#include <initializer_list>
#include <optional>
#include <vector>

#include "seacheck/e0.hpp"

namespace seacheck::testing {

inline Element A(int n) { return Element::a(Index(n)); }
inline Element B(int n) { return Element::b(Index(n)); }
inline Element C(std::initializer_list<int> s, int n) {
  return Element::c(IndexSet(s), Index(n));
}
inline Element D(std::initializer_list<int> s, int n) {
  return Element::d(IndexSet(s), Index(n));
}

/// Brute-force witness search over an explicit candidate pool.
inline std::optional<Element> leq_oracle(const Element& x, const Element& y,
                                         const std::vector<Element>& pool) {
  for (const Element& w : pool) {
    auto sum = oplus(x, w);
    if (sum && *sum == y) return w;
  }
  return std::nullopt;
}

/// Candidate pool for witnesses of pairs drawn from `fragment`: subscripts
/// up to twice the fragment bound, same ground bound. The bound itself is
/// validated empirically (against even larger pools) in the test suite.
inline std::vector<Element> witness_pool(const Fragment& fragment) {
  return Fragment(2 * fragment.n_max(), fragment.k_max()).carrier();
}

// Naive law re-scans, used to cross-check the checker's verdicts.

template <typename A>
bool naive_ea_holds(const A& alg) {
  const auto& c = alg.carrier();
  for (const auto& x : c) {
    for (const auto& y : c) {
      auto xy = alg.oplus(x, y);
      auto yx = alg.oplus(y, x);
      if (xy.has_value() != yx.has_value()) return false;
      if (xy && !(*xy == *yx)) return false;
      for (const auto& z : c) {
        auto yz = alg.oplus(y, z);
        if (!yz) continue;
        auto nested = alg.oplus(x, *yz);
        if (!nested) continue;
        auto xy2 = alg.oplus(x, y);
        if (!xy2) return false;
        auto grouped = alg.oplus(*xy2, z);
        if (!grouped || !(*grouped == *nested)) return false;
      }
    }
    int complements = 0;
    for (const auto& y : c) {
      auto sum = alg.oplus(x, y);
      if (sum && *sum == alg.one()) ++complements;
    }
    if (complements != 1) return false;
    auto with_one = alg.oplus(x, alg.one());
    if (with_one && !(x == alg.zero())) return false;
  }
  return true;
}

template <typename A>
bool naive_sea_holds(const A& alg) {
  if (!naive_ea_holds(alg)) return false;
  const auto& c = alg.carrier();
  for (const auto& a : c) {
    if (!(alg.circ(alg.one(), a) == a)) return false;
    for (const auto& b : c) {
      if (alg.circ(a, b) == alg.zero() && !(alg.circ(b, a) == alg.zero())) {
        return false;
      }
      for (const auto& x : c) {
        auto bx = alg.oplus(b, x);
        if (bx) {
          auto sum = alg.oplus(alg.circ(a, b), alg.circ(a, x));
          if (!sum || !(*sum == alg.circ(a, *bx))) return false;
        }
        if (alg.circ(a, b) == alg.circ(b, a)) {
          if (!(alg.circ(a, alg.circ(b, x)) == alg.circ(alg.circ(a, b), x))) {
            return false;
          }
        }
        if (alg.circ(x, a) == alg.circ(a, x) &&
            alg.circ(x, b) == alg.circ(b, x)) {
          auto ab = alg.circ(a, b);
          if (!(alg.circ(x, ab) == alg.circ(ab, x))) return false;
          auto sum = alg.oplus(a, b);
          if (sum && !(alg.circ(x, *sum) == alg.circ(*sum, x))) return false;
        }
      }
      if (alg.circ(a, b) == alg.circ(b, a)) {
        // the complement half of the commutation law
        for (const auto& y : c) {
          auto sum = alg.oplus(b, y);
          if (sum && *sum == alg.one()) {
            if (!(alg.circ(a, y) == alg.circ(y, a))) return false;
            break;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace seacheck::testing
