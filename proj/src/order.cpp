#include "seacheck/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace seacheck {

namespace {

std::string fragment_label(const Fragment& fragment) {
  return "e0[n=" + std::to_string(fragment.n_max()) +
         ",k=" + std::to_string(fragment.k_max()) + "]";
}

nlohmann::json render_all(const std::vector<Element>& elements) {
  nlohmann::json out = nlohmann::json::array();
  for (const Element& e : elements) out.push_back(to_string(e));
  return out;
}

std::string join_renderings(const std::vector<Element>& elements) {
  std::string out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ' ';
    out += to_string(elements[i]);
  }
  return out;
}

std::vector<Element> canonical_subject(std::vector<Element> subject,
                                       const Fragment& fragment) {
  if (subject.empty()) {
    throw std::invalid_argument("bound analysis: subject must be nonempty");
  }
  for (const Element& e : subject) {
    if (!fragment.contains(e)) {
      throw std::invalid_argument("bound analysis: " + to_string(e) +
                                  " lies outside " + fragment_label(fragment));
    }
  }
  std::sort(subject.begin(), subject.end());
  subject.erase(std::unique(subject.begin(), subject.end()), subject.end());
  return subject;
}

struct Bounds {
  std::vector<Element> all;
  std::vector<Element> extremal;
  std::optional<Element> extremum;
  BoundOutcome outcome = BoundOutcome::empty;
};

// Shared shape of meets and joins: flip the order for the join direction.
Bounds compute_bounds(const std::vector<Element>& subject,
                      const Fragment& fragment, bool join) {
  auto below = [join](const Element& u, const Element& v) {
    return join ? leq(v, u).holds : leq(u, v).holds;
  };

  Bounds out;
  for (const Element& y : fragment.carrier()) {
    bool bound = true;
    for (const Element& s : subject) {
      if (!below(y, s)) {
        bound = false;
        break;
      }
    }
    if (bound) out.all.push_back(y);
  }
  if (out.all.empty()) {
    out.outcome = BoundOutcome::empty;
    return out;
  }
  for (const Element& y : out.all) {
    bool extremal = true;
    for (const Element& z : out.all) {
      if (!(z == y) && below(y, z)) {
        extremal = false;
        break;
      }
    }
    if (extremal) out.extremal.push_back(y);
  }
  for (const Element& y : out.all) {
    bool dominates_all = true;
    for (const Element& z : out.all) {
      if (!below(z, y)) {
        dominates_all = false;
        break;
      }
    }
    if (dominates_all) {
      out.extremum = y;
      break;
    }
  }
  out.outcome =
      out.extremum ? BoundOutcome::extremum : BoundOutcome::no_extremum;
  return out;
}

}  // namespace

bool is_sharp(const Element& x) { return circ(x, x) == x; }

bool is_sharp_order(const Element& x, const Fragment& fragment) {
  MeetReport report = meet_in_fragment({x, orthosupplement(x)}, fragment);
  return report.outcome == BoundOutcome::extremum &&
         *report.meet == Element::zero();
}

std::vector<Element> sharp_elements(const Fragment& fragment) {
  std::vector<Element> out;
  for (const Element& e : fragment.carrier()) {
    if (is_sharp(e)) out.push_back(e);
  }
  return out;
}

std::vector<Element> upper_bounds(const Element& x, const Fragment& fragment,
                                  bool sharp_only) {
  std::vector<Element> out;
  for (const Element& y : fragment.carrier()) {
    if (sharp_only && !is_sharp(y)) continue;
    if (leq(x, y).holds) out.push_back(y);
  }
  return out;
}

std::vector<Element> lower_bounds(const Element& x, const Fragment& fragment) {
  std::vector<Element> out;
  for (const Element& y : fragment.carrier()) {
    if (leq(y, x).holds) out.push_back(y);
  }
  return out;
}

MeetReport meet_in_fragment(const std::vector<Element>& subject,
                            const Fragment& fragment) {
  std::vector<Element> canon = canonical_subject(subject, fragment);
  Bounds bounds = compute_bounds(canon, fragment, /*join=*/false);
  return {std::move(canon), std::move(bounds.all), std::move(bounds.extremal),
          bounds.outcome, bounds.extremum};
}

JoinReport join_in_fragment(const std::vector<Element>& subject,
                            const Fragment& fragment) {
  std::vector<Element> canon = canonical_subject(subject, fragment);
  Bounds bounds = compute_bounds(canon, fragment, /*join=*/true);
  return {std::move(canon), std::move(bounds.all), std::move(bounds.extremal),
          bounds.outcome, bounds.extremum};
}

namespace {

IndexSet with_member(const IndexSet& base, int member) {
  std::vector<int> members = base.members();
  members.push_back(member);
  return IndexSet(std::move(members));
}

// Sharp s' with target ≤ s' < s, when the order admits one. For
// s = d_{S,1} the fresh index is the smallest positive integer outside S
// (and outside the target's own ground set, for c-type targets). The
// result may leave the fragment; the certificate's claims are re-verified
// through the operations either way.
std::optional<Element> smaller_sharp_dominator(
    const Element& target, const Element& s,
    const std::vector<Element>& sharp_uppers) {
  if (s == Element::one()) {
    for (const Element& other : sharp_uppers) {
      if (!(other == s)) return other;
    }
    // No other sharp upper bound inside the fragment: construct one
    // beyond it.
    if (target.kind() == Kind::a) {
      return Element::d(IndexSet{1}, Index(1));
    }
    if (target.kind() == Kind::c) {
      return Element::d(IndexSet{target.ground_set().min_absent()}, Index(1));
    }
    return std::nullopt;  // b- and d-type targets: 1 can be least
  }
  if (s.kind() == Kind::d && s.index().value() == 1) {
    const IndexSet& base = s.ground_set();
    switch (target.kind()) {
      case Kind::a:
        return Element::d(with_member(base, base.min_absent()), Index(1));
      case Kind::c: {
        int fresh = set_union(base, target.ground_set()).min_absent();
        return Element::d(with_member(base, fresh), Index(1));
      }
      case Kind::d: {
        const IndexSet& t = target.ground_set();
        if (base == t) return std::nullopt;  // d_{S,1} is the least
        int fresh = set_difference(t, base).members().front();
        return Element::d(with_member(base, fresh), Index(1));
      }
      default:
        return std::nullopt;
    }
  }
  // Sharp c-type upper bounds only occur above sharp targets, which are
  // handled before this point.
  return std::nullopt;
}

}  // namespace

DominatorCertificate refute_least_sharp_dominator(const Element& target,
                                                  const Fragment& fragment) {
  if (!fragment.contains(target)) {
    throw std::invalid_argument("dominator analysis: " + to_string(target) +
                                " lies outside " + fragment_label(fragment));
  }
  DominatorCertificate cert;
  cert.target = target;
  cert.sharp_upper_bounds = upper_bounds(target, fragment, /*sharp_only=*/true);

  if (is_sharp(target)) {
    cert.least = target;
    return cert;
  }

  std::vector<RefutationPair> pairs;
  std::optional<Element> least;
  for (const Element& s : cert.sharp_upper_bounds) {
    auto smaller = smaller_sharp_dominator(target, s, cert.sharp_upper_bounds);
    if (!smaller) {
      least = s;
      break;
    }
    pairs.push_back({s, *smaller});
  }

  if (least) {
    for (const Element& s : cert.sharp_upper_bounds) {
      if (!leq(*least, s).holds) {
        throw std::logic_error(
            "dominator analysis: claimed least sharp bound " +
            to_string(*least) + " is not below " + to_string(s));
      }
    }
    cert.least = least;
    return cert;
  }

  for (const RefutationPair& pair : pairs) {
    bool ok = is_sharp(pair.smaller) && leq(target, pair.smaller).holds &&
              leq(pair.smaller, pair.bound).holds &&
              !(pair.smaller == pair.bound);
    if (!ok) {
      throw std::logic_error("dominator analysis: refutation pair (" +
                             to_string(pair.bound) + ", " +
                             to_string(pair.smaller) +
                             ") failed re-verification");
    }
  }
  cert.pairs = std::move(pairs);
  return cert;
}

ChainMeetReport chain_meet_analysis(const std::vector<IndexSet>& ground_sets,
                                    const Fragment& fragment) {
  if (ground_sets.empty()) {
    throw std::invalid_argument("chain analysis: chain must be nonempty");
  }
  for (std::size_t i = 0; i < ground_sets.size(); ++i) {
    if (ground_sets[i].max_member() > fragment.k_max()) {
      throw std::invalid_argument("chain analysis: " +
                                  to_string(ground_sets[i]) +
                                  " exceeds the fragment's ground bound");
    }
    if (i > 0 && !(ground_sets[i - 1].subset_of(ground_sets[i]) &&
                   ground_sets[i - 1] != ground_sets[i])) {
      throw std::invalid_argument(
          "chain analysis: ground sets must be strictly increasing");
    }
  }

  std::vector<Element> chain;
  chain.reserve(ground_sets.size());
  for (const IndexSet& s : ground_sets) chain.push_back(Element::d(s, Index(1)));
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (!leq(chain[i], chain[i - 1]).holds || chain[i] == chain[i - 1]) {
      throw std::logic_error("chain analysis: chain is not strictly decreasing");
    }
  }

  ChainMeetReport report;
  report.fragment_label = fragment_label(fragment);
  for (std::size_t len = 1; len <= chain.size(); ++len) {
    std::vector<Element> prefix(chain.begin(), chain.begin() + len);
    ChainPrefix entry;
    entry.meet = meet_in_fragment(prefix, fragment);
    entry.members = std::move(prefix);
    if (entry.meet.outcome == BoundOutcome::extremum) {
      const Element& m = *entry.meet.meet;
      entry.meet_ground_set_size = m.has_ground_set() ? m.ground_set().size() : 0;
      entry.meet_sharp = is_sharp(m);
    }
    report.prefixes.push_back(std::move(entry));
  }

  // Finite-prefix continuity evidence. Products that leave the carrier
  // are skipped (and counted) rather than guessed at.
  for (const ChainPrefix& entry : report.prefixes) {
    if (entry.meet.outcome != BoundOutcome::extremum) continue;
    const Element& m = *entry.meet.meet;
    for (const Element& x : fragment.carrier()) {
      bool all_commute = true;
      for (const Element& member : entry.members) {
        if (!commutes(x, member)) {
          all_commute = false;
          break;
        }
      }
      if (all_commute) {
        ++report.continuity.independence_checked;
        if (!commutes(x, m)) {
          report.continuity.violations.push_back(
              "independence: " + to_string(x) + " vs meet " + to_string(m));
        }
      }

      std::vector<Element> products;
      bool inside = true;
      for (const Element& member : entry.members) {
        Element p = circ(x, member);
        if (!fragment.contains(p)) {
          inside = false;
          break;
        }
        products.push_back(p);
      }
      if (!inside) {
        ++report.continuity.product_skipped;
        continue;
      }
      MeetReport products_meet = meet_in_fragment(products, fragment);
      if (products_meet.outcome != BoundOutcome::extremum) {
        ++report.continuity.product_skipped;
        continue;
      }
      ++report.continuity.product_checked;
      if (!(circ(x, m) == *products_meet.meet)) {
        report.continuity.violations.push_back(
            "product: " + to_string(x) + "∘meet = " + to_string(circ(x, m)) +
            " but meet of products = " + to_string(*products_meet.meet));
      }
    }
  }
  return report;
}

SharpClosureReport check_sharp_closure(const Fragment& fragment,
                                       int max_subset_size) {
  if (max_subset_size < 2) {
    throw std::invalid_argument("sharp closure: max subset size must be >= 2");
  }
  SharpClosureReport report;
  report.fragment_label = fragment_label(fragment);
  report.max_subset_size = max_subset_size;
  report.sharp = sharp_elements(fragment);

  const int n = static_cast<int>(report.sharp.size());
  for (int size = 2; size <= max_subset_size && size <= n; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<Element> subject;
      subject.reserve(size);
      for (int i : pick) subject.push_back(report.sharp[i]);
      ++report.subsets_checked;

      MeetReport meet = meet_in_fragment(subject, fragment);
      if (meet.outcome == BoundOutcome::extremum) {
        ++report.meets_found;
        if (!is_sharp(*meet.meet)) {
          report.counterexamples.push_back({subject, false, *meet.meet});
        }
      }
      JoinReport join = join_in_fragment(subject, fragment);
      if (join.outcome == BoundOutcome::extremum) {
        ++report.joins_found;
        if (!is_sharp(*join.join)) {
          report.counterexamples.push_back({subject, true, *join.join});
        }
      }

      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return report;
}

nlohmann::json MeetReport::to_json() const {
  return {{"subject", render_all(subject)},
          {"outcome",
           {{"kind", outcome == BoundOutcome::extremum     ? "meet"
                     : outcome == BoundOutcome::no_extremum ? "no_greatest"
                                                            : "empty"},
            {"value", meet ? nlohmann::json(to_string(*meet))
                           : nlohmann::json(nullptr)}}},
          {"maximal_lower_bounds", render_all(maximal_lower_bounds)},
          {"lower_bounds", render_all(lower_bounds)}};
}

std::string MeetReport::to_text() const {
  std::string out = "subject: " + join_renderings(subject) + "\n";
  out += "lower_bounds: " + join_renderings(lower_bounds) + "\n";
  out += "maximal_lower_bounds: " + join_renderings(maximal_lower_bounds) + "\n";
  switch (outcome) {
    case BoundOutcome::extremum:
      out += "outcome: meet " + to_string(*meet) + "\n";
      break;
    case BoundOutcome::no_extremum:
      out += "outcome: no_greatest\n";
      break;
    case BoundOutcome::empty:
      out += "outcome: empty\n";
      break;
  }
  return out;
}

nlohmann::json JoinReport::to_json() const {
  return {{"subject", render_all(subject)},
          {"outcome",
           {{"kind", outcome == BoundOutcome::extremum     ? "join"
                     : outcome == BoundOutcome::no_extremum ? "no_least"
                                                            : "empty"},
            {"value", join ? nlohmann::json(to_string(*join))
                           : nlohmann::json(nullptr)}}},
          {"minimal_upper_bounds", render_all(minimal_upper_bounds)},
          {"upper_bounds", render_all(upper_bounds)}};
}

std::string JoinReport::to_text() const {
  std::string out = "subject: " + join_renderings(subject) + "\n";
  out += "upper_bounds: " + join_renderings(upper_bounds) + "\n";
  out += "minimal_upper_bounds: " + join_renderings(minimal_upper_bounds) + "\n";
  switch (outcome) {
    case BoundOutcome::extremum:
      out += "outcome: join " + to_string(*join) + "\n";
      break;
    case BoundOutcome::no_extremum:
      out += "outcome: no_least\n";
      break;
    case BoundOutcome::empty:
      out += "outcome: empty\n";
      break;
  }
  return out;
}

nlohmann::json DominatorCertificate::to_json() const {
  nlohmann::json pairs_json = nlohmann::json::array();
  for (const RefutationPair& pair : pairs) {
    pairs_json.push_back(
        {{"s", to_string(pair.bound)}, {"s_prime", to_string(pair.smaller)}});
  }
  return {{"target", to_string(target)},
          {"sharp_upper_bounds_in_fragment", render_all(sharp_upper_bounds)},
          {"dominated", least ? nlohmann::json(to_string(*least))
                              : nlohmann::json(nullptr)},
          {"refutation_pairs", pairs_json}};
}

std::string DominatorCertificate::to_text() const {
  std::string out = "target: " + to_string(target) + "\n";
  out += "sharp_upper_bounds_in_fragment: " +
         join_renderings(sharp_upper_bounds) + "\n";
  if (least) {
    out += "dominated: least sharp upper bound is " + to_string(*least) + "\n";
  } else {
    out += "dominated: no (every sharp upper bound admits a strictly "
           "smaller one)\n";
    for (const RefutationPair& pair : pairs) {
      out += "  " + to_string(pair.bound) + " > " + to_string(pair.smaller) +
             " >= " + to_string(target) + "\n";
    }
  }
  return out;
}

nlohmann::json ChainMeetReport::to_json() const {
  nlohmann::json prefixes_json = nlohmann::json::array();
  for (const ChainPrefix& p : prefixes) {
    prefixes_json.push_back({{"members", render_all(p.members)},
                             {"meet", p.meet.to_json()},
                             {"ground_set_size", p.meet_ground_set_size},
                             {"meet_sharp", p.meet_sharp}});
  }
  return {{"fragment", fragment_label},
          {"prefixes", prefixes_json},
          {"continuity",
           {{"product_checked", continuity.product_checked},
            {"product_skipped", continuity.product_skipped},
            {"independence_checked", continuity.independence_checked},
            {"violations", continuity.violations}}}};
}

std::string ChainMeetReport::to_text() const {
  std::string out = "fragment: " + fragment_label + "\n";
  for (const ChainPrefix& p : prefixes) {
    out += "prefix [" + join_renderings(p.members) + "]: ";
    if (p.meet.outcome == BoundOutcome::extremum) {
      out += "meet " + to_string(*p.meet.meet) +
             " ground_set_size=" + std::to_string(p.meet_ground_set_size) +
             (p.meet_sharp ? " sharp" : " not_sharp");
    } else {
      out += "no meet";
    }
    out += "\n";
  }
  out += "continuity: product_checked=" +
         std::to_string(continuity.product_checked) +
         " product_skipped=" + std::to_string(continuity.product_skipped) +
         " independence_checked=" +
         std::to_string(continuity.independence_checked) +
         " violations=" + std::to_string(continuity.violations.size()) + "\n";
  for (const std::string& v : continuity.violations) out += "  " + v + "\n";
  return out;
}

nlohmann::json SharpClosureReport::to_json() const {
  nlohmann::json counter_json = nlohmann::json::array();
  for (const ClosureCounterexample& ce : counterexamples) {
    counter_json.push_back({{"subject", render_all(ce.subject)},
                            {"kind", ce.join ? "join" : "meet"},
                            {"value", to_string(ce.value)}});
  }
  return {{"fragment", fragment_label},
          {"max_subset_size", max_subset_size},
          {"sharp_count", static_cast<int>(sharp.size())},
          {"subsets_checked", subsets_checked},
          {"meets_found", meets_found},
          {"joins_found", joins_found},
          {"counterexamples", counter_json}};
}

std::string SharpClosureReport::to_text() const {
  std::string out = "fragment: " + fragment_label + "\n";
  out += "max_subset_size: " + std::to_string(max_subset_size) + "\n";
  out += "sharp_count: " + std::to_string(sharp.size()) + "\n";
  out += "subsets_checked: " + std::to_string(subsets_checked) + "\n";
  out += "meets_found: " + std::to_string(meets_found) + "\n";
  out += "joins_found: " + std::to_string(joins_found) + "\n";
  out += std::to_string(counterexamples.size()) + " counterexamples\n";
  for (const ClosureCounterexample& ce : counterexamples) {
    out += std::string("  ") + (ce.join ? "join" : "meet") + " of [" +
           join_renderings(ce.subject) + "] = " + to_string(ce.value) +
           " is not sharp\n";
  }
  return out;
}

}  // namespace seacheck
