#pragma once

#include <stdexcept>

namespace ots {

// Shared numeric tolerances. The MIP gap default matches the 0.1% stopping
// rule used throughout the experiments.
struct TolerancePolicy {
  double primal_feasibility = 1e-7;
  double integrality = 1e-6;
  double cut_violation = 1e-6;
  double relative_mip_gap = 1e-3;

  void validate() const {
    if (primal_feasibility <= 0 || integrality <= 0 || cut_violation <= 0 ||
        relative_mip_gap <= 0)
      throw std::invalid_argument("tolerances must be strictly positive");
  }
};

}  // namespace ots
