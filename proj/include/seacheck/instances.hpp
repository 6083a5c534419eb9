#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seacheck/rational.hpp"

namespace seacheck {

/// Powerset of {1..k} with disjoint union as the sum and intersection as
/// the product. Every element is sharp; the standard sharply dominating
/// foil to e0. Elements are bitmasks over the ground set.
class BooleanInstance {
 public:
  using element_type = unsigned;

  explicit BooleanInstance(int ground_size);

  int ground_size() const { return ground_size_; }
  std::string label() const;
  const std::vector<unsigned>& carrier() const { return carrier_; }
  unsigned zero() const { return 0; }
  unsigned one() const { return full_; }
  std::optional<unsigned> oplus(unsigned x, unsigned y) const;
  unsigned circ(unsigned x, unsigned y) const { return x & y; }
  std::string render(unsigned x) const;
  bool exhaustive() const { return true; }

 private:
  int ground_size_;
  unsigned full_;
  std::vector<unsigned> carrier_;
};

/// Exact rationals k/D in [0,1]; sum defined iff it stays ≤ 1, product is
/// plain multiplication (which leaves the grid, so checking runs in
/// sampled mode). Sharp elements are exactly 0 and 1.
class IntervalInstance {
 public:
  using element_type = Rational;

  explicit IntervalInstance(int denominator);

  int denominator() const { return denominator_; }
  std::string label() const;
  const std::vector<Rational>& carrier() const { return carrier_; }
  Rational zero() const { return Rational::zero(); }
  Rational one() const { return Rational::one(); }
  std::optional<Rational> oplus(const Rational& x, const Rational& y) const;
  Rational circ(const Rational& x, const Rational& y) const { return x * y; }
  std::string render(const Rational& x) const { return x.str(); }
  bool exhaustive() const { return false; }

 private:
  int denominator_;
  std::vector<Rational> carrier_;
};

}  // namespace seacheck
