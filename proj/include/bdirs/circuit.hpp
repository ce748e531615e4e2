#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

namespace bdirs {

// Lumped-element values shared by every tunable branch of the surface:
// each element-to-element and element-to-ground connection is a series
// R-L2-C branch in parallel with a fixed inductor L1. a0 is the
// characteristic admittance of the ports.
struct CircuitParams {
  double resistance_ohm = 1.0;
  double inductance_l1_h = 2.5e-9;
  double inductance_l2_h = 0.7e-9;
  double characteristic_admittance_s = 0.02;  // 1 / 50 Ohm

  void validate() const;
};

// Sub-carrier center frequencies f_n = f_c + (B/N) * (n - (N+1)/2), n=1..N.
std::vector<double> subcarrier_frequencies(double f_c_hz, double bandwidth_hz,
                                           int num_subcarriers);

// Admittance of one tunable branch at frequency f:
//   y = 1/(R + jwL2 + 1/(jwC)) + 1/(jwL1),  w = 2 pi f.
// c == 0 is the open-circuit limit: the series branch contributes nothing
// and only the fixed inductor path 1/(jwL1) remains.
std::complex<double> branch_admittance(double capacitance_f,
                                       const CircuitParams& params,
                                       double frequency_hz);

// Multiport admittance matrix of the fully-connected surface. Row-m diagonal
// entries sum the branch admittances of every capacitance in row m of C
// (the grounding entry C(m,m) included); off-diagonals are the negated
// branch admittance of the connecting capacitance.
Eigen::MatrixXcd admittance_from_capacitance(const Eigen::MatrixXd& C,
                                             const CircuitParams& params,
                                             double frequency_hz);

// Reflection matrix Phi = (a0 I + A)^{-1} (a0 I - A). Throws
// IllConditionedError when cond(a0 I + A) exceeds cond_cap.
Eigen::MatrixXcd reflection_from_admittance(const Eigen::MatrixXcd& A,
                                            double a0,
                                            double cond_cap = 1e12);

// Inverse map A = a0 (I - Phi)(I + Phi)^{-1}. Throws
// DegenerateReflectionError when (I + Phi) is ill-conditioned (an
// eigenvalue of Phi sits at -1 within tolerance).
Eigen::MatrixXcd admittance_from_reflection(const Eigen::MatrixXcd& Phi,
                                            double a0,
                                            double cond_cap = 1e12);

// Per-entry inversion of the admittance map back to capacitances. The
// result is generally complex; only admittances produced by a real
// nonnegative C recover exactly. Entries whose aggregate admittance is
// indistinguishable from the bare-L1 path have no finite capacitance; they
// are set to 0 F (the open-circuit limit) and recorded.
struct CapacitanceRecovery {
  Eigen::MatrixXcd targets;
  std::vector<std::pair<int, int>> open_circuit_entries;
};

CapacitanceRecovery capacitance_from_admittance(const Eigen::MatrixXcd& A,
                                                const CircuitParams& params,
                                                double frequency_hz);

// Convenience composition of the two forward maps.
Eigen::MatrixXcd reflection_from_capacitance(const Eigen::MatrixXd& C,
                                             const CircuitParams& params,
                                             double frequency_hz,
                                             double cond_cap = 1e12);

}  // namespace bdirs
