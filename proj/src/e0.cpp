#include "seacheck/e0.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace seacheck {

namespace {

Element make_a(long long n) { return Element::a(Index(n)); }
Element make_b(long long n) { return Element::b(Index(n)); }
Element make_c(IndexSet s, long long n) { return Element::c(std::move(s), Index(n)); }
Element make_d(IndexSet s, long long n) { return Element::d(std::move(s), Index(n)); }

}  // namespace

std::string_view to_string(OplusRule rule) {
  switch (rule) {
    case OplusRule::zero_x: return "oplus.zero_x";
    case OplusRule::a_a: return "oplus.a_a";
    case OplusRule::a_b_lt: return "oplus.a_b_lt";
    case OplusRule::a_b_eq: return "oplus.a_b_eq";
    case OplusRule::a_c: return "oplus.a_c";
    case OplusRule::a_d: return "oplus.a_d";
    case OplusRule::c_c: return "oplus.c_c";
    case OplusRule::c_d_proper: return "oplus.c_d_proper";
    case OplusRule::c_d_equal_lt: return "oplus.c_d_equal_lt";
    case OplusRule::c_d_equal_eq: return "oplus.c_d_equal_eq";
  }
  return "oplus.?";
}

std::string_view to_string(CircRule rule) {
  switch (rule) {
    case CircRule::zero_x: return "circ.zero_x";
    case CircRule::one_x: return "circ.one_x";
    case CircRule::a_a: return "circ.a_a";
    case CircRule::a_b: return "circ.a_b";
    case CircRule::b_b: return "circ.b_b";
    case CircRule::a_c: return "circ.a_c";
    case CircRule::c_b: return "circ.c_b";
    case CircRule::a_d: return "circ.a_d";
    case CircRule::b_d: return "circ.b_d";
    case CircRule::d_d: return "circ.d_d";
    case CircRule::c_c_meet: return "circ.c_c_meet";
    case CircRule::c_c_disjoint: return "circ.c_c_disjoint";
    case CircRule::c_d_diff: return "circ.c_d_diff";
    case CircRule::c_d_sub_gt1: return "circ.c_d_sub_gt1";
    case CircRule::c_d_sub_eq1: return "circ.c_d_sub_eq1";
  }
  return "circ.?";
}

OplusOutcome oplus_case(const Element& x, const Element& y) {
  if (x.kind() == Kind::zero) return {y, OplusRule::zero_x};
  if (y.kind() == Kind::zero) return {x, OplusRule::zero_x};
  // 1 + z is undefined for z ≠ 0.
  if (x.kind() == Kind::one || y.kind() == Kind::one) return {};

  // The table is symmetric; normalize to kind(p) ≤ kind(q).
  const Element& p = x.kind() <= y.kind() ? x : y;
  const Element& q = x.kind() <= y.kind() ? y : x;
  const long long n = p.index().value();
  const long long m = q.index().value();

  switch (p.kind()) {
    case Kind::a:
      switch (q.kind()) {
        case Kind::a:
          return {make_a(n + m), OplusRule::a_a};
        case Kind::b:
          if (n < m) return {make_b(m - n), OplusRule::a_b_lt};
          if (n == m) return {Element::one(), OplusRule::a_b_eq};
          return {};
        case Kind::c:
          return {make_c(q.ground_set(), n + m), OplusRule::a_c};
        case Kind::d:
          if (n < m) return {make_d(q.ground_set(), m - n), OplusRule::a_d};
          return {};
        default:
          return {};
      }
    case Kind::b:
      return {};  // b+b, b+c, b+d: undefined
    case Kind::c: {
      const IndexSet& s = p.ground_set();
      if (q.kind() == Kind::c) {
        const IndexSet& t = q.ground_set();
        if (s.disjoint_with(t)) {
          return {make_c(set_union(s, t), n + m - 1), OplusRule::c_c};
        }
        return {};
      }
      if (q.kind() == Kind::d) {
        const IndexSet& t = q.ground_set();
        if (!s.subset_of(t) || n > m) return {};
        if (s != t) {
          return {make_d(set_difference(t, s), m - n + 1), OplusRule::c_d_proper};
        }
        if (n < m) return {make_b(m - n), OplusRule::c_d_equal_lt};
        return {Element::one(), OplusRule::c_d_equal_eq};
      }
      return {};
    }
    case Kind::d:
      return {};  // d+d: undefined
    default:
      return {};
  }
}

std::optional<Element> oplus(const Element& x, const Element& y) {
  return oplus_case(x, y).result;
}

CircOutcome circ_case(const Element& x, const Element& y) {
  if (x.kind() == Kind::zero || y.kind() == Kind::zero) {
    return {Element::zero(), CircRule::zero_x};
  }
  if (x.kind() == Kind::one) return {y, CircRule::one_x};
  if (y.kind() == Kind::one) return {x, CircRule::one_x};

  const Element& p = x.kind() <= y.kind() ? x : y;
  const Element& q = x.kind() <= y.kind() ? y : x;
  const long long n = p.index().value();
  const long long m = q.index().value();

  switch (p.kind()) {
    case Kind::a:
      switch (q.kind()) {
        case Kind::a: return {Element::zero(), CircRule::a_a};
        case Kind::b: return {p, CircRule::a_b};
        case Kind::c: return {Element::zero(), CircRule::a_c};
        case Kind::d: return {p, CircRule::a_d};
        default: break;
      }
      break;
    case Kind::b:
      switch (q.kind()) {
        case Kind::b: return {make_b(n + m), CircRule::b_b};
        case Kind::c: return {q, CircRule::c_b};
        case Kind::d: return {make_d(q.ground_set(), n + m), CircRule::b_d};
        default: break;
      }
      break;
    case Kind::c: {
      const IndexSet& s = p.ground_set();
      const IndexSet& t = q.ground_set();
      if (q.kind() == Kind::c) {
        if (s.intersects(t)) {
          return {make_c(set_intersection(s, t), 1), CircRule::c_c_meet};
        }
        return {Element::zero(), CircRule::c_c_disjoint};
      }
      // q is d: cases split on S∖T.
      if (!s.subset_of(t)) {
        return {make_c(set_difference(s, t), n), CircRule::c_d_diff};
      }
      if (n > 1) return {make_a(n - 1), CircRule::c_d_sub_gt1};
      return {Element::zero(), CircRule::c_d_sub_eq1};
    }
    case Kind::d:
      return {make_d(set_union(p.ground_set(), q.ground_set()), n + m - 1),
              CircRule::d_d};
    default:
      break;
  }
  throw std::logic_error("circ_case: unreachable kind combination");
}

Element circ(const Element& x, const Element& y) { return circ_case(x, y).result; }

Element orthosupplement(const Element& x) {
  switch (x.kind()) {
    case Kind::zero: return Element::one();
    case Kind::one: return Element::zero();
    case Kind::a: return Element::b(x.index());
    case Kind::b: return Element::a(x.index());
    case Kind::c: return Element::d(x.ground_set(), x.index());
    case Kind::d: return Element::c(x.ground_set(), x.index());
  }
  throw std::logic_error("orthosupplement: unreachable");
}

// Each sum rule is invertible in its parameters, so x ≤ y reduces to a
// case split on the two variants. Guards run before any subtraction.
LeqResult leq(const Element& x, const Element& y) {
  if (x == y) return {true, Element::zero()};
  if (x.kind() == Kind::zero) return {true, y};
  if (y.kind() == Kind::one) return {true, orthosupplement(x)};
  if (x.kind() == Kind::one || y.kind() == Kind::zero) return {};

  const long long n = x.index().value();
  const long long m = y.index().value();

  switch (x.kind()) {
    case Kind::a:
      switch (y.kind()) {
        case Kind::a:  // a_n < a_m iff n < m
          return n < m ? LeqResult{true, make_a(m - n)} : LeqResult{};
        case Kind::b:  // a_n + b_{m+n} = b_m
          return {true, make_b(n + m)};
        case Kind::c:  // a_n + c_{S,m-n} = c_{S,m}
          return n < m ? LeqResult{true, make_c(y.ground_set(), m - n)}
                       : LeqResult{};
        case Kind::d:  // a_n + d_{S,n+m} = d_{S,m}
          return {true, make_d(y.ground_set(), n + m)};
        default:
          return {};
      }
    case Kind::b:
      // Only b_n ≤ b_m with m ≤ n (and the top, handled above).
      if (y.kind() == Kind::b && m < n) return {true, make_a(n - m)};
      return {};
    case Kind::c: {
      const IndexSet& s = x.ground_set();
      switch (y.kind()) {
        case Kind::b:  // c_{S,n} + d_{S,n+m} = b_m
          return {true, make_d(s, n + m)};
        case Kind::c: {
          const IndexSet& t = y.ground_set();
          if (!s.subset_of(t) || n > m) return {};
          if (s == t) return {true, make_a(m - n)};  // n < m here
          return {true, make_c(set_difference(t, s), m - n + 1)};
        }
        case Kind::d: {
          const IndexSet& t = y.ground_set();
          if (!s.disjoint_with(t)) return {};
          return {true, make_d(set_union(s, t), n + m - 1)};
        }
        default:
          return {};
      }
    }
    case Kind::d: {
      const IndexSet& s = x.ground_set();
      switch (y.kind()) {
        case Kind::b:  // c_{S,n-m} + d_{S,n} = b_m
          return m < n ? LeqResult{true, make_c(s, n - m)} : LeqResult{};
        case Kind::d: {
          const IndexSet& t = y.ground_set();
          if (!t.subset_of(s) || m > n) return {};
          if (s == t) return {true, make_a(n - m)};  // m < n here
          return {true, make_c(set_difference(s, t), n - m + 1)};
        }
        default:
          return {};
      }
    }
    default:
      return {};
  }
}

bool orthogonal(const Element& x, const Element& y) {
  return oplus(x, y).has_value();
}

bool orthogonal_via_order(const Element& x, const Element& y) {
  return leq(x, orthosupplement(y)).holds;
}

bool commutes(const Element& x, const Element& y) {
  return circ(x, y) == circ(y, x);
}

Fragment::Fragment(int n_max, int k_max) : n_max_(n_max), k_max_(k_max) {
  if (n_max < 1 || n_max > 64) {
    throw std::out_of_range("Fragment: n_max must lie in [1, 64]");
  }
  if (k_max < 1 || k_max > 12) {
    throw std::out_of_range("Fragment: k_max must lie in [1, 12]");
  }
  carrier_.push_back(Element::zero());
  carrier_.push_back(Element::one());
  for (int n = 1; n <= n_max; ++n) {
    carrier_.push_back(make_a(n));
    carrier_.push_back(make_b(n));
  }
  for (unsigned mask = 1; mask < (1u << k_max); ++mask) {
    std::vector<int> members;
    for (int bit = 0; bit < k_max; ++bit) {
      if (mask & (1u << bit)) members.push_back(bit + 1);
    }
    IndexSet set(std::move(members));
    for (int n = 1; n <= n_max; ++n) {
      carrier_.push_back(Element::c(set, Index(n)));
      carrier_.push_back(Element::d(set, Index(n)));
    }
  }
  std::sort(carrier_.begin(), carrier_.end());
}

bool Fragment::contains(const Element& e) const {
  switch (e.kind()) {
    case Kind::zero:
    case Kind::one:
      return true;
    case Kind::a:
    case Kind::b:
      return e.index().value() <= n_max_;
    case Kind::c:
    case Kind::d:
      return e.index().value() <= n_max_ &&
             e.ground_set().max_member() <= k_max_;
  }
  return false;
}

}  // namespace seacheck
