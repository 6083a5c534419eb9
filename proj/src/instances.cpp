#include "seacheck/instances.hpp"

#include <stdexcept>

namespace seacheck {

BooleanInstance::BooleanInstance(int ground_size) : ground_size_(ground_size) {
  if (ground_size < 1 || ground_size > 5) {
    throw std::out_of_range("BooleanInstance: ground size must lie in [1, 5]");
  }
  full_ = (1u << ground_size) - 1;
  carrier_.reserve(full_ + 1);
  for (unsigned mask = 0; mask <= full_; ++mask) carrier_.push_back(mask);
}

std::string BooleanInstance::label() const {
  return "boolean[k=" + std::to_string(ground_size_) + "]";
}

std::optional<unsigned> BooleanInstance::oplus(unsigned x, unsigned y) const {
  if (x & y) return std::nullopt;
  return x | y;
}

std::string BooleanInstance::render(unsigned x) const {
  std::string out = "{";
  bool first = true;
  for (int bit = 0; bit < ground_size_; ++bit) {
    if (x & (1u << bit)) {
      if (!first) out += ',';
      out += std::to_string(bit + 1);
      first = false;
    }
  }
  out += '}';
  return out;
}

IntervalInstance::IntervalInstance(int denominator)
    : denominator_(denominator) {
  if (denominator < 2 || denominator > 24) {
    throw std::out_of_range(
        "IntervalInstance: denominator must lie in [2, 24]");
  }
  carrier_.reserve(denominator + 1);
  for (int k = 0; k <= denominator; ++k) {
    carrier_.emplace_back(k, denominator);
  }
}

std::string IntervalInstance::label() const {
  return "interval[d=" + std::to_string(denominator_) + "]";
}

std::optional<Rational> IntervalInstance::oplus(const Rational& x,
                                                const Rational& y) const {
  Rational sum = x + y;
  if (Rational::one() < sum) return std::nullopt;
  return sum;
}

}  // namespace seacheck
