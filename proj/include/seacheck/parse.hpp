#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seacheck/element.hpp"

namespace seacheck {

/// Parse failure with the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " +
                           std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Canonical element grammar:
///   element := "0" | "1" | "a" nat | "b" nat | "c" set ":" nat | "d" set ":" nat
///   set     := "{" nat ("," nat)* "}"      (members may come unordered)
///   nat     := nonzero decimal integer, no leading zeros
/// Round-trips: to_string(parse_element(s)) is canonical.
Element parse_element(std::string_view text);

/// Set literal alone, e.g. "{2,1}" -> {1,2}.
IndexSet parse_index_set(std::string_view text);

/// Semicolon-separated set literals, e.g. "{1};{1,2};{1,2,3}".
std::vector<IndexSet> parse_chain(std::string_view text);

}  // namespace seacheck
