#pragma once

#include <algorithm>
#include <atomic>
#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <vector>

#include "json.hpp"

namespace seacheck {

inline constexpr std::string_view undefined_text = "undefined";

/// A failed axiom with the quantified tuple that witnessed it and the two
/// mismatched sides, rendered in the instance's element grammar so that
/// reports are stable across runs. Witnesses always come from the carrier;
/// replaying them through the instance reproduces the mismatch.
struct Violation {
  std::string axiom;  // EA1..EA4, SEA1..SEA5
  std::vector<std::string> witnesses;
  std::string lhs;
  std::string rhs;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Report order: axiom, then witnesses, then the two sides.
bool violation_order(const Violation& lhs, const Violation& rhs);

struct VerifyOptions {
  /// Worker count for partitioning the tuple space. Reports are sorted
  /// after the scan, so serial and parallel runs emit identical bytes.
  unsigned threads = 1;
  /// Stop scanning once one violation is known (count then depends on the
  /// partition; default is to collect everything).
  bool early_stop = false;
};

struct VerifyReport {
  std::string instance;
  std::string mode;  // "exhaustive" | "sampled"
  std::size_t carrier_size = 0;
  std::vector<std::string> axiom_families_checked;
  std::vector<Violation> violations;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Anything the checkers can quantify over: a finite carrier with a
/// partial sum, a total product, distinguished 0 and 1, and a canonical
/// text rendering. Operations must accept any value they ever produce
/// (closure beyond the carrier is fine) and be pure.
template <typename A>
concept Algebra = requires(const A& alg, const typename A::element_type& x,
                           const typename A::element_type& y) {
  requires std::equality_comparable<typename A::element_type>;
  requires std::copyable<typename A::element_type>;
  { alg.label() } -> std::convertible_to<std::string>;
  { alg.carrier() } -> std::convertible_to<const std::vector<typename A::element_type>&>;
  { alg.zero() } -> std::convertible_to<typename A::element_type>;
  { alg.one() } -> std::convertible_to<typename A::element_type>;
  { alg.oplus(x, y) } -> std::convertible_to<std::optional<typename A::element_type>>;
  { alg.circ(x, y) } -> std::convertible_to<typename A::element_type>;
  { alg.render(x) } -> std::convertible_to<std::string>;
  { alg.exhaustive() } -> std::convertible_to<bool>;
};

namespace detail {

template <Algebra A>
std::string render_opt(const A& alg,
                       const std::optional<typename A::element_type>& v) {
  return v ? alg.render(*v) : std::string(undefined_text);
}

template <Algebra A>
void check_configuration(const A& alg) {
  const auto& carrier = alg.carrier();
  if (carrier.empty()) {
    throw std::invalid_argument(alg.label() + ": carrier is empty");
  }
  if (alg.zero() == alg.one()) {
    throw std::invalid_argument(alg.label() + ": 0 and 1 coincide");
  }
  bool has_zero = false;
  bool has_one = false;
  for (const auto& e : carrier) {
    if (e == alg.zero()) has_zero = true;
    if (e == alg.one()) has_one = true;
  }
  if (!has_zero || !has_one) {
    throw std::invalid_argument(alg.label() +
                                ": carrier must contain 0 and 1");
  }
}

/// Runs scan(outer_index, sink) for every outer index, striped across
/// workers. Each worker fills its own sink; the merged result is sorted
/// by the caller, so the partition never shows in the report.
inline void parallel_outer(
    std::size_t n, const VerifyOptions& opts,
    const std::function<void(std::size_t, std::vector<Violation>&)>& scan,
    std::vector<Violation>& out) {
  std::atomic<bool> stop{false};
  auto worker = [&](std::size_t first, std::size_t step,
                    std::vector<Violation>& sink) {
    for (std::size_t i = first; i < n; i += step) {
      if (opts.early_stop && stop.load(std::memory_order_relaxed)) return;
      scan(i, sink);
      if (opts.early_stop && !sink.empty()) {
        stop.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1) {
    worker(0, 1, out);
    return;
  }
  std::vector<std::vector<Violation>> sinks(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back(worker, w, threads, std::ref(sinks[w]));
  }
  for (auto& t : pool) t.join();
  for (auto& sink : sinks) {
    out.insert(out.end(), sink.begin(), sink.end());
  }
}

// Positions of each element's unique complement in the carrier.
// Callers run this only after EA3 has been verified.
template <Algebra A>
std::vector<std::size_t> complement_positions(const A& alg) {
  const auto& c = alg.carrier();
  std::vector<std::size_t> comp(c.size(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      auto sum = alg.oplus(c[i], c[j]);
      if (sum && *sum == alg.one()) {
        comp[i] = j;
        break;
      }
    }
    if (comp[i] == c.size()) {
      throw std::logic_error(alg.label() +
                             ": complement vanished after the EA3 pass");
    }
  }
  return comp;
}

/// SEA1..SEA5 over the carrier. Precondition: the EA axioms hold.
template <Algebra A>
std::vector<Violation> sea_axiom_scan(const A& alg, const VerifyOptions& opts) {
  const auto& c = alg.carrier();
  const std::size_t n = c.size();
  const auto comp = complement_positions(alg);
  std::vector<Violation> out;
  auto stop_early = [&] { return opts.early_stop && !out.empty(); };

  // SEA1: for each a and each summable pair (b,c), the products a∘b and
  // a∘c are summable and add up to a∘(b⊕c).
  parallel_outer(
      n, opts,
      [&](std::size_t i, std::vector<Violation>& sink) {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = j; k < n; ++k) {
            auto bc = alg.oplus(c[j], c[k]);
            if (!bc) continue;
            auto lhs = alg.circ(c[i], *bc);
            auto sum = alg.oplus(alg.circ(c[i], c[j]), alg.circ(c[i], c[k]));
            if (!sum || !(*sum == lhs)) {
              sink.push_back({"SEA1",
                              {alg.render(c[i]), alg.render(c[j]),
                               alg.render(c[k])},
                              alg.render(lhs), render_opt(alg, sum)});
            }
          }
        }
      },
      out);
  if (stop_early()) {
    std::sort(out.begin(), out.end(), violation_order);
    return out;
  }

  // SEA2: 1∘a = a.
  for (std::size_t i = 0; i < n; ++i) {
    auto got = alg.circ(alg.one(), c[i]);
    if (!(got == c[i])) {
      out.push_back({"SEA2", {alg.render(c[i])}, alg.render(got),
                     alg.render(c[i])});
    }
  }

  if (stop_early()) {
    std::sort(out.begin(), out.end(), violation_order);
    return out;
  }

  // SEA3: a∘b = 0 forces b∘a = a∘b.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto ab = alg.circ(c[i], c[j]);
      if (!(ab == alg.zero())) continue;
      auto ba = alg.circ(c[j], c[i]);
      if (!(ba == ab)) {
        out.push_back({"SEA3", {alg.render(c[i]), alg.render(c[j])},
                       alg.render(ab), alg.render(ba)});
      }
    }
  }

  if (stop_early()) {
    std::sort(out.begin(), out.end(), violation_order);
    return out;
  }

  // SEA4: a∘b = b∘a gives a∘b' = b'∘a and a∘(b∘x) = (a∘b)∘x for every x.
  parallel_outer(
      n, opts,
      [&](std::size_t i, std::vector<Violation>& sink) {
        for (std::size_t j = 0; j < n; ++j) {
          auto ab = alg.circ(c[i], c[j]);
          if (!(ab == alg.circ(c[j], c[i]))) continue;
          const auto& bp = c[comp[j]];
          auto l = alg.circ(c[i], bp);
          auto r = alg.circ(bp, c[i]);
          if (!(l == r)) {
            sink.push_back({"SEA4", {alg.render(c[i]), alg.render(c[j])},
                            alg.render(l), alg.render(r)});
          }
          for (std::size_t k = 0; k < n; ++k) {
            auto nested = alg.circ(c[i], alg.circ(c[j], c[k]));
            auto grouped = alg.circ(ab, c[k]);
            if (!(nested == grouped)) {
              sink.push_back({"SEA4",
                              {alg.render(c[i]), alg.render(c[j]),
                               alg.render(c[k])},
                              alg.render(nested), alg.render(grouped)});
            }
          }
        }
      },
      out);

  if (stop_early()) {
    std::sort(out.begin(), out.end(), violation_order);
    return out;
  }

  // SEA5: an x commuting with both a and b commutes with a∘b, and with
  // a⊕b whenever that sum exists. Witness order: (a, b, commuter).
  parallel_outer(
      n, opts,
      [&](std::size_t i, std::vector<Violation>& sink) {
        for (std::size_t j = 0; j < n; ++j) {
          auto ab = alg.circ(c[i], c[j]);
          auto sum = alg.oplus(c[i], c[j]);
          for (std::size_t k = 0; k < n; ++k) {
            if (!(alg.circ(c[k], c[i]) == alg.circ(c[i], c[k]))) continue;
            if (!(alg.circ(c[k], c[j]) == alg.circ(c[j], c[k]))) continue;
            auto l = alg.circ(c[k], ab);
            auto r = alg.circ(ab, c[k]);
            if (!(l == r)) {
              sink.push_back({"SEA5",
                              {alg.render(c[i]), alg.render(c[j]),
                               alg.render(c[k])},
                              alg.render(l), alg.render(r)});
            }
            if (sum) {
              auto ls = alg.circ(c[k], *sum);
              auto rs = alg.circ(*sum, c[k]);
              if (!(ls == rs)) {
                sink.push_back({"SEA5",
                                {alg.render(c[i]), alg.render(c[j]),
                                 alg.render(c[k])},
                                alg.render(ls), alg.render(rs)});
              }
            }
          }
        }
      },
      out);

  std::sort(out.begin(), out.end(), violation_order);
  return out;
}

}  // namespace detail

/// EA1 (symmetry), EA2 (both association directions), EA3 (unique
/// complement within the carrier), EA4 (only 0 is summable with 1),
/// quantified exhaustively over the carrier. Empty result means no
/// violation; the order of reported violations is deterministic.
template <Algebra A>
std::vector<Violation> verify_ea(const A& alg, const VerifyOptions& opts = {}) {
  detail::check_configuration(alg);
  const auto& c = alg.carrier();
  const std::size_t n = c.size();
  std::vector<Violation> out;

  // EA1: definedness and value symmetry.
  detail::parallel_outer(
      n, opts,
      [&](std::size_t i, std::vector<Violation>& sink) {
        for (std::size_t j = i; j < n; ++j) {
          auto xy = alg.oplus(c[i], c[j]);
          auto yx = alg.oplus(c[j], c[i]);
          if (xy.has_value() != yx.has_value() || (xy && !(*xy == *yx))) {
            sink.push_back({"EA1", {alg.render(c[i]), alg.render(c[j])},
                            detail::render_opt(alg, xy),
                            detail::render_opt(alg, yx)});
          }
        }
      },
      out);
  if (opts.early_stop && !out.empty()) {
    std::sort(out.begin(), out.end(), violation_order);
    return out;
  }

  // EA2: a⊕(b⊕c) defined forces (a⊕b)⊕c defined and equal, and the
  // mirrored direction, over all ordered triples.
  detail::parallel_outer(
      n, opts,
      [&](std::size_t i, std::vector<Violation>& sink) {
        for (std::size_t j = 0; j < n; ++j) {
          auto ab = alg.oplus(c[i], c[j]);
          for (std::size_t k = 0; k < n; ++k) {
            auto bc = alg.oplus(c[j], c[k]);
            std::optional<typename A::element_type> l;
            if (bc) l = alg.oplus(c[i], *bc);
            std::optional<typename A::element_type> r;
            if (ab) r = alg.oplus(*ab, c[k]);
            if (l.has_value() != r.has_value() || (l && !(*l == *r))) {
              sink.push_back({"EA2",
                              {alg.render(c[i]), alg.render(c[j]),
                               alg.render(c[k])},
                              detail::render_opt(alg, l),
                              detail::render_opt(alg, r)});
            }
          }
        }
      },
      out);
  if (opts.early_stop && !out.empty()) {
    std::sort(out.begin(), out.end(), violation_order);
    return out;
  }

  // EA3: exactly one complement within the carrier.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> complements;
    for (std::size_t j = 0; j < n; ++j) {
      auto sum = alg.oplus(c[i], c[j]);
      if (sum && *sum == alg.one()) complements.push_back(j);
    }
    if (complements.empty()) {
      out.push_back({"EA3", {alg.render(c[i])}, std::string(undefined_text),
                     alg.render(alg.one())});
    } else if (complements.size() > 1) {
      out.push_back({"EA3",
                     {alg.render(c[i]), alg.render(c[complements[0]]),
                      alg.render(c[complements[1]])},
                     alg.render(c[complements[0]]),
                     alg.render(c[complements[1]])});
    }
  }

  // EA4: a⊕1 defined only for a = 0.
  for (std::size_t i = 0; i < n; ++i) {
    auto sum = alg.oplus(c[i], alg.one());
    if (sum && !(c[i] == alg.zero())) {
      out.push_back({"EA4", {alg.render(c[i])}, alg.render(*sum),
                     std::string(undefined_text)});
    }
  }

  std::sort(out.begin(), out.end(), violation_order);
  return out;
}

/// SEA1..SEA5 over the carrier. The EA axioms are re-verified first and,
/// if broken, returned as-is: the SEA statements presuppose an effect
/// algebra.
template <Algebra A>
std::vector<Violation> verify_sea(const A& alg, const VerifyOptions& opts = {}) {
  auto ea = verify_ea(alg, opts);
  if (!ea.empty()) return ea;
  return detail::sea_axiom_scan(alg, opts);
}

inline const std::vector<std::string>& ea_family_names() {
  static const std::vector<std::string> names = {"EA1", "EA2", "EA3", "EA4"};
  return names;
}

inline const std::vector<std::string>& sea_family_names() {
  static const std::vector<std::string> names = {"EA1",  "EA2",  "EA3",
                                                 "EA4",  "SEA1", "SEA2",
                                                 "SEA3", "SEA4", "SEA5"};
  return names;
}

template <Algebra A>
VerifyReport run_ea(const A& alg, const VerifyOptions& opts = {}) {
  return {alg.label(), alg.exhaustive() ? "exhaustive" : "sampled",
          alg.carrier().size(), ea_family_names(), verify_ea(alg, opts)};
}

template <Algebra A>
VerifyReport run_sea(const A& alg, const VerifyOptions& opts = {}) {
  auto ea = verify_ea(alg, opts);
  if (!ea.empty()) {
    // SEA phase skipped: report only the families that actually ran.
    return {alg.label(), alg.exhaustive() ? "exhaustive" : "sampled",
            alg.carrier().size(), ea_family_names(), std::move(ea)};
  }
  return {alg.label(), alg.exhaustive() ? "exhaustive" : "sampled",
          alg.carrier().size(), sea_family_names(),
          detail::sea_axiom_scan(alg, opts)};
}

/// Re-evaluates a violation's witnesses through the instance and checks
/// that the recomputed sides reproduce the recorded mismatch exactly.
template <Algebra A>
bool replay_violation(const A& alg, const Violation& v) {
  const auto& c = alg.carrier();
  std::unordered_map<std::string, std::size_t> by_text;
  for (std::size_t i = 0; i < c.size(); ++i) by_text[alg.render(c[i])] = i;

  std::vector<typename A::element_type> w;
  for (const auto& text : v.witnesses) {
    auto it = by_text.find(text);
    if (it == by_text.end()) return false;
    w.push_back(c[it->second]);
  }

  auto matches = [&](const std::optional<typename A::element_type>& l,
                     const std::optional<typename A::element_type>& r) {
    bool mismatch = l.has_value() != r.has_value() || (l && !(*l == *r));
    return mismatch && detail::render_opt(alg, l) == v.lhs &&
           detail::render_opt(alg, r) == v.rhs;
  };

  using Opt = std::optional<typename A::element_type>;
  if (v.axiom == "EA1" && w.size() == 2) {
    return matches(alg.oplus(w[0], w[1]), alg.oplus(w[1], w[0]));
  }
  if (v.axiom == "EA2" && w.size() == 3) {
    auto bc = alg.oplus(w[1], w[2]);
    Opt l = bc ? alg.oplus(w[0], *bc) : Opt{};
    auto ab = alg.oplus(w[0], w[1]);
    Opt r = ab ? alg.oplus(*ab, w[2]) : Opt{};
    return matches(l, r);
  }
  if (v.axiom == "EA3" && w.size() == 1) {
    for (const auto& y : c) {
      auto sum = alg.oplus(w[0], y);
      if (sum && *sum == alg.one()) return false;  // a complement exists
    }
    return v.lhs == undefined_text;
  }
  if (v.axiom == "EA3" && w.size() == 3) {
    auto s1 = alg.oplus(w[0], w[1]);
    auto s2 = alg.oplus(w[0], w[2]);
    return s1 && *s1 == alg.one() && s2 && *s2 == alg.one() &&
           !(w[1] == w[2]);
  }
  if (v.axiom == "EA4" && w.size() == 1) {
    auto sum = alg.oplus(w[0], alg.one());
    return sum && !(w[0] == alg.zero()) && alg.render(*sum) == v.lhs &&
           v.rhs == undefined_text;
  }
  if (v.axiom == "SEA1" && w.size() == 3) {
    auto bc = alg.oplus(w[1], w[2]);
    if (!bc) return false;
    Opt l = alg.circ(w[0], *bc);
    Opt sum = alg.oplus(alg.circ(w[0], w[1]), alg.circ(w[0], w[2]));
    return matches(l, sum);
  }
  if (v.axiom == "SEA2" && w.size() == 1) {
    return matches(Opt{alg.circ(alg.one(), w[0])}, Opt{w[0]});
  }
  if (v.axiom == "SEA3" && w.size() == 2) {
    auto ab = alg.circ(w[0], w[1]);
    if (!(ab == alg.zero())) return false;
    return matches(Opt{ab}, Opt{alg.circ(w[1], w[0])});
  }
  if (v.axiom == "SEA4" && w.size() == 2) {
    if (!(alg.circ(w[0], w[1]) == alg.circ(w[1], w[0]))) return false;
    // locate b' in the carrier
    for (const auto& y : c) {
      auto sum = alg.oplus(w[1], y);
      if (sum && *sum == alg.one()) {
        return matches(Opt{alg.circ(w[0], y)}, Opt{alg.circ(y, w[0])});
      }
    }
    return false;
  }
  if (v.axiom == "SEA4" && w.size() == 3) {
    if (!(alg.circ(w[0], w[1]) == alg.circ(w[1], w[0]))) return false;
    return matches(Opt{alg.circ(w[0], alg.circ(w[1], w[2]))},
                   Opt{alg.circ(alg.circ(w[0], w[1]), w[2])});
  }
  if (v.axiom == "SEA5" && w.size() == 3) {
    if (!(alg.circ(w[2], w[0]) == alg.circ(w[0], w[2]))) return false;
    if (!(alg.circ(w[2], w[1]) == alg.circ(w[1], w[2]))) return false;
    auto ab = alg.circ(w[0], w[1]);
    if (matches(Opt{alg.circ(w[2], ab)}, Opt{alg.circ(ab, w[2])})) return true;
    auto sum = alg.oplus(w[0], w[1]);
    if (!sum) return false;
    return matches(Opt{alg.circ(w[2], *sum)}, Opt{alg.circ(*sum, w[2])});
  }
  return false;
}

}  // namespace seacheck
