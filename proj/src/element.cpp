#include "seacheck/element.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace seacheck {

Index::Index(long long value) {
  if (value < 1 || value > max_value) {
    throw std::out_of_range("Index: subscript must lie in [1, " +
                            std::to_string(max_value) + "], got " +
                            std::to_string(value));
  }
  value_ = static_cast<int>(value);
}

IndexSet::IndexSet(std::vector<int> members) : members_(std::move(members)) {
  if (members_.empty()) {
    throw std::invalid_argument("IndexSet: set must be nonempty");
  }
  for (int m : members_) {
    if (m < 1) {
      throw std::invalid_argument("IndexSet: members must be positive, got " +
                                  std::to_string(m));
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

IndexSet::IndexSet(std::initializer_list<int> members)
    : IndexSet(std::vector<int>(members)) {}

bool IndexSet::contains(int value) const {
  return std::binary_search(members_.begin(), members_.end(), value);
}

bool IndexSet::subset_of(const IndexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

bool IndexSet::disjoint_with(const IndexSet& other) const {
  auto it = members_.begin();
  auto jt = other.members_.begin();
  while (it != members_.end() && jt != other.members_.end()) {
    if (*it == *jt) return false;
    if (*it < *jt) {
      ++it;
    } else {
      ++jt;
    }
  }
  return true;
}

int IndexSet::min_absent() const {
  int candidate = 1;
  for (int m : members_) {
    if (m == candidate) {
      ++candidate;
    } else if (m > candidate) {
      break;
    }
  }
  return candidate;
}

namespace {

IndexSet checked(std::vector<int> members, const char* what) {
  if (members.empty()) {
    throw std::logic_error(std::string(what) +
                           ": result is empty; a rule guard was skipped");
  }
  return IndexSet(std::move(members));
}

}  // namespace

IndexSet set_union(const IndexSet& lhs, const IndexSet& rhs) {
  std::vector<int> out;
  std::set_union(lhs.members().begin(), lhs.members().end(),
                 rhs.members().begin(), rhs.members().end(),
                 std::back_inserter(out));
  return checked(std::move(out), "set_union");
}

IndexSet set_intersection(const IndexSet& lhs, const IndexSet& rhs) {
  std::vector<int> out;
  std::set_intersection(lhs.members().begin(), lhs.members().end(),
                        rhs.members().begin(), rhs.members().end(),
                        std::back_inserter(out));
  return checked(std::move(out), "set_intersection");
}

IndexSet set_difference(const IndexSet& lhs, const IndexSet& rhs) {
  std::vector<int> out;
  std::set_difference(lhs.members().begin(), lhs.members().end(),
                      rhs.members().begin(), rhs.members().end(),
                      std::back_inserter(out));
  return checked(std::move(out), "set_difference");
}

Element::Element(Kind kind, std::optional<Index> index,
                 std::optional<IndexSet> set)
    : kind_(kind), index_(index), set_(std::move(set)) {}

Element Element::zero() { return Element(Kind::zero, std::nullopt, std::nullopt); }
Element Element::one() { return Element(Kind::one, std::nullopt, std::nullopt); }
Element Element::a(Index n) { return Element(Kind::a, n, std::nullopt); }
Element Element::b(Index n) { return Element(Kind::b, n, std::nullopt); }
Element Element::c(IndexSet set, Index n) {
  return Element(Kind::c, n, std::move(set));
}
Element Element::d(IndexSet set, Index n) {
  return Element(Kind::d, n, std::move(set));
}

Index Element::index() const {
  if (!index_) throw std::logic_error("Element::index: element has no subscript");
  return *index_;
}

const IndexSet& Element::ground_set() const {
  if (!set_) throw std::logic_error("Element::ground_set: element has no ground set");
  return *set_;
}

std::strong_ordering operator<=>(const Element& lhs, const Element& rhs) {
  if (auto cmp = static_cast<int>(lhs.kind_) <=> static_cast<int>(rhs.kind_);
      cmp != 0) {
    return cmp;
  }
  switch (lhs.kind_) {
    case Kind::zero:
    case Kind::one:
      return std::strong_ordering::equal;
    case Kind::a:
    case Kind::b:
      return *lhs.index_ <=> *rhs.index_;
    case Kind::c:
    case Kind::d:
      if (auto cmp = *lhs.set_ <=> *rhs.set_; cmp != 0) return cmp;
      return *lhs.index_ <=> *rhs.index_;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const IndexSet& s) {
  std::string out = "{";
  bool first = true;
  for (int m : s.members()) {
    if (!first) out += ',';
    out += std::to_string(m);
    first = false;
  }
  out += '}';
  return out;
}

std::string to_string(const Element& e) {
  switch (e.kind()) {
    case Kind::zero:
      return "0";
    case Kind::one:
      return "1";
    case Kind::a:
      return "a" + std::to_string(e.index().value());
    case Kind::b:
      return "b" + std::to_string(e.index().value());
    case Kind::c:
      return "c" + to_string(e.ground_set()) + ":" +
             std::to_string(e.index().value());
    case Kind::d:
      return "d" + to_string(e.ground_set()) + ":" +
             std::to_string(e.index().value());
  }
  return {};
}

std::ostream& operator<<(std::ostream& os, const Element& e) {
  return os << to_string(e);
}

}  // namespace seacheck
