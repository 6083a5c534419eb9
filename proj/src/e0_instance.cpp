#include "seacheck/e0_instance.hpp"

namespace seacheck {

std::string E0Instance::label() const {
  std::string out = "e0[n=" + std::to_string(fragment_.n_max()) +
                    ",k=" + std::to_string(fragment_.k_max()) + "]";
  if (mutation_) out += " mutate=" + mutation_->describe();
  return out;
}

}  // namespace seacheck
