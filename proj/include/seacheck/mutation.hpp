#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "seacheck/e0.hpp"

namespace seacheck {

// Negative-control fixtures: an override that rewrites the output of
// exactly one case rule of the e0 tables, leaving every other case alone.
// Overrides apply to the raw argument order, so an asymmetric override
// (left_operand) deliberately breaks the symmetric rendering of the table.

enum class OverrideKind {
  identity,        // keep the table's result (the unmutated instance)
  make_undefined,  // sum rules only: turn the defined case into undefined
  shift_index,     // add index_shift to the result's subscript
  replace_with,    // constant replacement result
  left_operand,    // result := the raw left operand
};

struct MutationSpec {
  std::variant<OplusRule, CircRule> rule;
  OverrideKind kind = OverrideKind::identity;
  int index_shift = 0;
  std::optional<Element> replacement;

  std::string rule_id() const;
  /// Short stable label, e.g. "oplus.a_a->shift+1".
  std::string describe() const;
};

/// Builds a spec, validating the rule id and the override/rule pairing.
/// Throws std::invalid_argument for unknown rule ids, make_undefined on a
/// product rule, or shift_index on a rule whose output has no subscript.
MutationSpec make_mutation(std::string_view rule_id, OverrideKind kind,
                           int index_shift = 0,
                           std::optional<Element> replacement = std::nullopt);

/// The shipped negative-control fixtures, one per targeted rule.
const std::vector<MutationSpec>& shipped_mutations();

/// Shipped fixture whose rule_id matches; throws std::invalid_argument if
/// the id names no rule, std::out_of_range if no fixture targets it.
MutationSpec mutation_for_rule(std::string_view rule_id);

std::optional<Element> mutated_oplus(const Element& x, const Element& y,
                                     const MutationSpec& spec);
Element mutated_circ(const Element& x, const Element& y,
                     const MutationSpec& spec);

}  // namespace seacheck
