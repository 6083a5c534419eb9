#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seacheck/e0.hpp"
#include "seacheck/mutation.hpp"

namespace seacheck {

/// Checkable view of an e0 fragment, optionally with one table rule
/// overridden. Quantifiers range over the fragment carrier; the
/// operations themselves stay total decision procedures over the whole
/// universe, so results may leave the carrier.
class E0Instance {
 public:
  using element_type = Element;

  explicit E0Instance(Fragment fragment,
                      std::optional<MutationSpec> mutation = std::nullopt)
      : fragment_(std::move(fragment)), mutation_(std::move(mutation)) {}

  const Fragment& fragment() const { return fragment_; }
  const std::optional<MutationSpec>& mutation() const { return mutation_; }

  std::string label() const;
  const std::vector<Element>& carrier() const { return fragment_.carrier(); }
  Element zero() const { return Element::zero(); }
  Element one() const { return Element::one(); }

  std::optional<Element> oplus(const Element& x, const Element& y) const {
    return mutation_ ? mutated_oplus(x, y, *mutation_) : seacheck::oplus(x, y);
  }

  Element circ(const Element& x, const Element& y) const {
    return mutation_ ? mutated_circ(x, y, *mutation_) : seacheck::circ(x, y);
  }

  std::string render(const Element& x) const { return to_string(x); }
  bool exhaustive() const { return true; }

 private:
  Fragment fragment_;
  std::optional<MutationSpec> mutation_;
};

/// Fragment instance whose tables differ from the standard ones in exactly
/// the rule named by the spec (the identity override round-trips).
inline E0Instance apply_mutation(const Fragment& fragment,
                                 const MutationSpec& spec) {
  return E0Instance(fragment, spec);
}

}  // namespace seacheck
