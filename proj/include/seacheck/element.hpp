#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace seacheck {

/// Positive integer subscript (the n in a_n, b_n, c_{S,n}, d_{S,n}).
/// Range-checked at construction; rule code does its arithmetic in
/// long long and re-wraps the result, so overflow and non-positive
/// subscripts surface as exceptions instead of wrapping silently.
class Index {
 public:
  static constexpr long long max_value = 1'000'000'000;

  explicit Index(long long value);

  int value() const { return value_; }

  friend bool operator==(Index, Index) = default;
  friend std::strong_ordering operator<=>(Index, Index) = default;

 private:
  int value_;
};

/// Finite nonempty set of positive integers (the ground set of a c/d
/// element). Canonical form: sorted ascending, no duplicates, so
/// structural equality is set equality.
class IndexSet {
 public:
  explicit IndexSet(std::vector<int> members);
  IndexSet(std::initializer_list<int> members);

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  int max_member() const { return members_.back(); }
  bool contains(int value) const;
  bool subset_of(const IndexSet& other) const;
  bool disjoint_with(const IndexSet& other) const;
  bool intersects(const IndexSet& other) const { return !disjoint_with(other); }

  /// Smallest positive integer that is not a member.
  int min_absent() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend std::strong_ordering operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> members_;
};

// Set builders. Nonemptiness of the result is the caller's obligation
// (rule guards run first); an empty result throws std::logic_error.
IndexSet set_union(const IndexSet& lhs, const IndexSet& rhs);
IndexSet set_intersection(const IndexSet& lhs, const IndexSet& rhs);
IndexSet set_difference(const IndexSet& lhs, const IndexSet& rhs);

enum class Kind : std::uint8_t { zero, one, a, b, c, d };

/// One element of the algebra universe: 0, 1, a_n, b_n, c_{S,n} or
/// d_{S,n}. Immutable value type. Canonical text form ("0", "1", "a3",
/// "c{1,2}:4", ...) via to_string; the ordering is the canonical
/// enumeration order used for carriers and reports.
class Element {
 public:
  static Element zero();
  static Element one();
  static Element a(Index n);
  static Element b(Index n);
  static Element c(IndexSet set, Index n);
  static Element d(IndexSet set, Index n);

  Kind kind() const { return kind_; }
  bool indexed() const { return index_.has_value(); }
  bool has_ground_set() const { return set_.has_value(); }

  /// Subscript; element must be one of a/b/c/d.
  Index index() const;
  /// Ground set; element must be c or d.
  const IndexSet& ground_set() const;

  friend bool operator==(const Element&, const Element&) = default;
  friend std::strong_ordering operator<=>(const Element& lhs, const Element& rhs);

 private:
  Element(Kind kind, std::optional<Index> index, std::optional<IndexSet> set);

  Kind kind_;
  std::optional<Index> index_;
  std::optional<IndexSet> set_;
};

std::string to_string(const Element& e);
std::string to_string(const IndexSet& s);
std::ostream& operator<<(std::ostream& os, const Element& e);

}  // namespace seacheck
