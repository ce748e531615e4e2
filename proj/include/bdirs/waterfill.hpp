#pragma once

#include <Eigen/Dense>

namespace bdirs {

struct PowerAllocation {
  Eigen::VectorXd p;
  double water_level = 0.0;  // 1/lambda, the common level over active carriers
  bool all_gains_zero = false;
};

// Water-filling over sub-carrier power gains: p_n = (w - Gamma sigma^2 /
// gain_n)^+ with the level w found by bisection so that sum p_n = P within
// 1e-10 * P (from below). Zero-gain carriers receive nothing; if every gain
// is zero with P > 0 the allocation is all-zero and flagged.
PowerAllocation waterfill(const Eigen::VectorXd& gains, double total_power_w,
                          double gamma_sigma2_w);

}  // namespace bdirs
