#include "seacheck/mutation.hpp"

#include <array>
#include <stdexcept>

namespace seacheck {

namespace {

constexpr std::array<OplusRule, 10> all_oplus_rules = {
    OplusRule::zero_x,       OplusRule::a_a,          OplusRule::a_b_lt,
    OplusRule::a_b_eq,       OplusRule::a_c,          OplusRule::a_d,
    OplusRule::c_c,          OplusRule::c_d_proper,   OplusRule::c_d_equal_lt,
    OplusRule::c_d_equal_eq,
};

constexpr std::array<CircRule, 15> all_circ_rules = {
    CircRule::zero_x,      CircRule::one_x,        CircRule::a_a,
    CircRule::a_b,         CircRule::b_b,          CircRule::a_c,
    CircRule::c_b,         CircRule::a_d,          CircRule::b_d,
    CircRule::d_d,         CircRule::c_c_meet,     CircRule::c_c_disjoint,
    CircRule::c_d_diff,    CircRule::c_d_sub_gt1,  CircRule::c_d_sub_eq1,
};

std::optional<std::variant<OplusRule, CircRule>> rule_from_id(
    std::string_view id) {
  for (OplusRule r : all_oplus_rules) {
    if (to_string(r) == id) return r;
  }
  for (CircRule r : all_circ_rules) {
    if (to_string(r) == id) return r;
  }
  return std::nullopt;
}

// Rules whose output always carries a subscript (so shift_index is
// meaningful). Excluded: rules producing 0 or 1, and one_x/zero_x/
// left-style copies that can yield 0 or 1.
bool result_always_indexed(std::variant<OplusRule, CircRule> rule) {
  if (auto* op = std::get_if<OplusRule>(&rule)) {
    switch (*op) {
      case OplusRule::a_a:
      case OplusRule::a_b_lt:
      case OplusRule::a_c:
      case OplusRule::a_d:
      case OplusRule::c_c:
      case OplusRule::c_d_proper:
      case OplusRule::c_d_equal_lt:
        return true;
      default:
        return false;
    }
  }
  switch (std::get<CircRule>(rule)) {
    case CircRule::a_b:
    case CircRule::b_b:
    case CircRule::c_b:
    case CircRule::a_d:
    case CircRule::b_d:
    case CircRule::d_d:
    case CircRule::c_c_meet:
    case CircRule::c_d_diff:
    case CircRule::c_d_sub_gt1:
      return true;
    default:
      return false;
  }
}

Element shifted(const Element& base, int shift) {
  if (!base.indexed()) {
    throw std::logic_error(
        "mutation: shift_index override hit a result without a subscript");
  }
  long long n = static_cast<long long>(base.index().value()) + shift;
  switch (base.kind()) {
    case Kind::a: return Element::a(Index(n));
    case Kind::b: return Element::b(Index(n));
    case Kind::c: return Element::c(base.ground_set(), Index(n));
    case Kind::d: return Element::d(base.ground_set(), Index(n));
    default: break;
  }
  throw std::logic_error("mutation: unreachable");
}

std::optional<Element> apply_override(const MutationSpec& spec,
                                      const Element& raw_left,
                                      const std::optional<Element>& base) {
  switch (spec.kind) {
    case OverrideKind::identity:
      return base;
    case OverrideKind::make_undefined:
      return std::nullopt;
    case OverrideKind::shift_index:
      return shifted(*base, spec.index_shift);
    case OverrideKind::replace_with:
      return spec.replacement;
    case OverrideKind::left_operand:
      return raw_left;
  }
  throw std::logic_error("mutation: unreachable override kind");
}

}  // namespace

std::string MutationSpec::rule_id() const {
  if (auto* op = std::get_if<OplusRule>(&rule)) return std::string(to_string(*op));
  return std::string(to_string(std::get<CircRule>(rule)));
}

std::string MutationSpec::describe() const {
  std::string out = rule_id();
  switch (kind) {
    case OverrideKind::identity:
      out += "->identity";
      break;
    case OverrideKind::make_undefined:
      out += "->undefined";
      break;
    case OverrideKind::shift_index:
      out += "->shift";
      out += index_shift >= 0 ? "+" : "";
      out += std::to_string(index_shift);
      break;
    case OverrideKind::replace_with:
      out += "->const:" + to_string(*replacement);
      break;
    case OverrideKind::left_operand:
      out += "->left";
      break;
  }
  return out;
}

MutationSpec make_mutation(std::string_view rule_id, OverrideKind kind,
                           int index_shift,
                           std::optional<Element> replacement) {
  auto rule = rule_from_id(rule_id);
  if (!rule) {
    throw std::invalid_argument("make_mutation: unknown rule id '" +
                                std::string(rule_id) + "'");
  }
  if (kind == OverrideKind::make_undefined &&
      std::holds_alternative<CircRule>(*rule)) {
    throw std::invalid_argument(
        "make_mutation: the product is total; a product rule cannot be made "
        "undefined");
  }
  if (kind == OverrideKind::shift_index && !result_always_indexed(*rule)) {
    throw std::invalid_argument(
        "make_mutation: rule '" + std::string(rule_id) +
        "' can produce 0 or 1; shift_index does not apply");
  }
  if (kind == OverrideKind::replace_with && !replacement) {
    throw std::invalid_argument(
        "make_mutation: replace_with needs a replacement element");
  }
  return MutationSpec{*rule, kind, index_shift, std::move(replacement)};
}

const std::vector<MutationSpec>& shipped_mutations() {
  static const std::vector<MutationSpec> fixtures = {
      make_mutation("oplus.a_a", OverrideKind::shift_index, 1),
      make_mutation("oplus.a_b_eq", OverrideKind::replace_with, 0,
                    Element::b(Index(1))),
      make_mutation("oplus.a_c", OverrideKind::make_undefined),
      make_mutation("oplus.c_d_proper", OverrideKind::shift_index, 1),
      make_mutation("circ.b_b", OverrideKind::left_operand),
      make_mutation("circ.c_c_meet", OverrideKind::shift_index, 1),
      make_mutation("circ.c_d_diff", OverrideKind::shift_index, 1),
  };
  return fixtures;
}

MutationSpec mutation_for_rule(std::string_view rule_id) {
  if (!rule_from_id(rule_id)) {
    throw std::invalid_argument("unknown rule id '" + std::string(rule_id) +
                                "'");
  }
  for (const MutationSpec& spec : shipped_mutations()) {
    if (spec.rule_id() == rule_id) return spec;
  }
  throw std::out_of_range("no shipped mutation targets rule '" +
                          std::string(rule_id) + "'");
}

std::optional<Element> mutated_oplus(const Element& x, const Element& y,
                                     const MutationSpec& spec) {
  OplusOutcome base = oplus_case(x, y);
  auto* target = std::get_if<OplusRule>(&spec.rule);
  if (!target || !base.rule || *base.rule != *target) return base.result;
  return apply_override(spec, x, base.result);
}

Element mutated_circ(const Element& x, const Element& y,
                     const MutationSpec& spec) {
  CircOutcome base = circ_case(x, y);
  auto* target = std::get_if<CircRule>(&spec.rule);
  if (!target || base.rule != *target) return base.result;
  auto out = apply_override(spec, x, base.result);
  return *out;  // product overrides never yield undefined
}

}  // namespace seacheck
