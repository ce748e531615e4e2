#include "bdirs/circuit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bdirs/errors.hpp"

namespace bdirs {

namespace {

using Complex = std::complex<double>;
constexpr Complex kJ{0.0, 1.0};

double condition_number(const Eigen::MatrixXcd& X) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(X);
  const double smin = svd.singularValues().minCoeff();
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return svd.singularValues().maxCoeff() / smin;
}

}  // namespace

void CircuitParams::validate() const {
  if (!(resistance_ohm > 0.0)) {
    throw std::invalid_argument("CircuitParams: resistance must be > 0");
  }
  if (!(inductance_l1_h > 0.0) || !(inductance_l2_h > 0.0)) {
    throw std::invalid_argument("CircuitParams: inductances must be > 0");
  }
  if (!(characteristic_admittance_s > 0.0)) {
    throw std::invalid_argument(
        "CircuitParams: characteristic admittance must be > 0");
  }
}

std::vector<double> subcarrier_frequencies(double f_c_hz, double bandwidth_hz,
                                           int num_subcarriers) {
  if (num_subcarriers < 1) {
    throw std::invalid_argument("subcarrier_frequencies: N must be >= 1");
  }
  if (bandwidth_hz < 0.0) {
    throw std::invalid_argument("subcarrier_frequencies: B must be >= 0");
  }
  const double n = static_cast<double>(num_subcarriers);
  std::vector<double> freqs(static_cast<std::size_t>(num_subcarriers));
  for (int i = 0; i < num_subcarriers; ++i) {
    const double idx = static_cast<double>(i + 1) - (n + 1.0) / 2.0;
    freqs[static_cast<std::size_t>(i)] = f_c_hz + bandwidth_hz / n * idx;
  }
  if (freqs.front() <= 0.0) {
    throw std::invalid_argument(
        "subcarrier_frequencies: lowest sub-carrier is non-positive");
  }
  return freqs;
}

std::complex<double> branch_admittance(double capacitance_f,
                                       const CircuitParams& params,
                                       double frequency_hz) {
  if (!(frequency_hz > 0.0)) {
    throw std::invalid_argument("branch_admittance: frequency must be > 0");
  }
  if (capacitance_f < 0.0) {
    throw std::invalid_argument("branch_admittance: capacitance must be >= 0");
  }
  const double w = 2.0 * std::numbers::pi * frequency_hz;
  const Complex fixed_path = 1.0 / (kJ * w * params.inductance_l1_h);
  if (capacitance_f == 0.0) {
    return fixed_path;  // open-circuit limit of the series branch
  }
  const Complex series = params.resistance_ohm +
                         kJ * w * params.inductance_l2_h +
                         1.0 / (kJ * w * capacitance_f);
  return 1.0 / series + fixed_path;
}

Eigen::MatrixXcd admittance_from_capacitance(const Eigen::MatrixXd& C,
                                             const CircuitParams& params,
                                             double frequency_hz) {
  if (C.rows() != C.cols() || C.rows() < 1) {
    throw std::invalid_argument(
        "admittance_from_capacitance: C must be square, M >= 1");
  }
  const Eigen::Index m_count = C.rows();
  Eigen::MatrixXcd Y(m_count, m_count);
  for (Eigen::Index m = 0; m < m_count; ++m) {
    for (Eigen::Index k = 0; k < m_count; ++k) {
      Y(m, k) = branch_admittance(C(m, k), params, frequency_hz);
    }
  }
  Eigen::MatrixXcd A(m_count, m_count);
  for (Eigen::Index m = 0; m < m_count; ++m) {
    for (Eigen::Index k = 0; k < m_count; ++k) {
      A(m, k) = (m == k) ? Y.row(m).sum() : -Y(m, k);
    }
  }
  if (!A.allFinite()) {
    throw std::runtime_error(
        "admittance_from_capacitance: non-finite admittance entry");
  }
  return A;
}

Eigen::MatrixXcd reflection_from_admittance(const Eigen::MatrixXcd& A,
                                            double a0, double cond_cap) {
  if (!(a0 > 0.0)) {
    throw std::invalid_argument("reflection_from_admittance: a0 must be > 0");
  }
  const Eigen::Index m = A.rows();
  const Eigen::MatrixXcd X =
      a0 * Eigen::MatrixXcd::Identity(m, m) + A;
  const double cond = condition_number(X);
  if (!(cond < cond_cap)) {
    throw IllConditionedError(
        "reflection_from_admittance: cond(a0 I + A) = " +
        std::to_string(cond) + " exceeds cap");
  }
  const Eigen::MatrixXcd Y =
      a0 * Eigen::MatrixXcd::Identity(m, m) - A;
  return X.partialPivLu().solve(Y);
}

Eigen::MatrixXcd admittance_from_reflection(const Eigen::MatrixXcd& Phi,
                                            double a0, double cond_cap) {
  if (!(a0 > 0.0)) {
    throw std::invalid_argument("admittance_from_reflection: a0 must be > 0");
  }
  const Eigen::Index m = Phi.rows();
  const Eigen::MatrixXcd ip = Eigen::MatrixXcd::Identity(m, m) + Phi;
  const double cond = condition_number(ip);
  if (!(cond < cond_cap)) {
    throw DegenerateReflectionError(
        "admittance_from_reflection: reflection has an eigenvalue near -1 "
        "(cond(I + Phi) = " +
        std::to_string(cond) + ")");
  }
  // A = a0 (I - Phi)(I + Phi)^{-1}, via a transposed solve to keep the
  // inverse on the right.
  const Eigen::MatrixXcd im = Eigen::MatrixXcd::Identity(m, m) - Phi;
  return a0 *
         ip.transpose().partialPivLu().solve(im.transpose()).transpose();
}

CapacitanceRecovery capacitance_from_admittance(const Eigen::MatrixXcd& A,
                                                const CircuitParams& params,
                                                double frequency_hz) {
  if (!(frequency_hz > 0.0)) {
    throw std::invalid_argument(
        "capacitance_from_admittance: frequency must be > 0");
  }
  if (A.rows() != A.cols() || A.rows() < 1) {
    throw std::invalid_argument(
        "capacitance_from_admittance: A must be square, M >= 1");
  }
  const double w = 2.0 * std::numbers::pi * frequency_hz;
  const Complex fixed_path = 1.0 / (kJ * w * params.inductance_l1_h);
  const Eigen::Index m_count = A.rows();

  CapacitanceRecovery out;
  out.targets.resize(m_count, m_count);
  for (Eigen::Index m = 0; m < m_count; ++m) {
    for (Eigen::Index k = 0; k < m_count; ++k) {
      // Aggregate branch admittance: row sum on the diagonal (the grounding
      // branch), negated entry off it.
      const Complex y = (m == k) ? Complex(A.row(m).sum()) : Complex(-A(m, k));
      const Complex series_y = y - fixed_path;
      const double scale = std::max(std::abs(y), std::abs(fixed_path));
      if (std::abs(series_y) <= 1e-14 * scale) {
        // Branch indistinguishable from the bare-L1 path: capacitance
        // undefined, substitute the open-circuit limit.
        out.targets(m, k) = Complex(0.0, 0.0);
        out.open_circuit_entries.emplace_back(static_cast<int>(m),
                                              static_cast<int>(k));
        continue;
      }
      const Complex z = 1.0 / series_y - params.resistance_ohm -
                        kJ * w * params.inductance_l2_h;
      const Complex c = 1.0 / (kJ * w * z);
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        throw std::runtime_error(
            "capacitance_from_admittance: non-finite capacitance at entry (" +
            std::to_string(m) + "," + std::to_string(k) + ")");
      }
      out.targets(m, k) = c;
    }
  }
  return out;
}

Eigen::MatrixXcd reflection_from_capacitance(const Eigen::MatrixXd& C,
                                             const CircuitParams& params,
                                             double frequency_hz,
                                             double cond_cap) {
  const Eigen::MatrixXcd A =
      admittance_from_capacitance(C, params, frequency_hz);
  return reflection_from_admittance(A, params.characteristic_admittance_s,
                                    cond_cap);
}

}  // namespace bdirs
