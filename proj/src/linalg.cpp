#include "bdirs/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace bdirs {

TakagiFactors takagi(const Eigen::MatrixXcd& symmetric, double rel_threshold) {
  const Eigen::Index m = symmetric.rows();
  if (symmetric.cols() != m) {
    throw std::invalid_argument("takagi: matrix must be square");
  }
  // Real embedding: with S = Sr + j Si, the 2M x 2M real symmetric matrix
  //   T = [ Sr  Si ]
  //       [ Si -Sr ]
  // has eigenpairs (sigma, [x; y]) <-> Takagi vectors u = x + j y with
  // S conj(u) = sigma u; eigenvalues come in +/- sigma pairs.
  const Eigen::MatrixXd sr = symmetric.real();
  const Eigen::MatrixXd si = symmetric.imag();
  Eigen::MatrixXd t(2 * m, 2 * m);
  t.topLeftCorner(m, m) = sr;
  t.topRightCorner(m, m) = si;
  t.bottomLeftCorner(m, m) = si;
  t.bottomRightCorner(m, m) = -sr;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("takagi: eigendecomposition failed");
  }
  const Eigen::VectorXd& evals = es.eigenvalues();  // ascending
  const double max_abs =
      std::max(std::abs(evals(0)), std::abs(evals(2 * m - 1)));
  const double cutoff = rel_threshold * std::max(max_abs, 1e-300);

  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 2 * m - 1; i >= 0; --i) {
    if (evals(i) > cutoff) keep.push_back(i);
  }
  TakagiFactors out;
  out.sigma.resize(static_cast<Eigen::Index>(keep.size()));
  out.u.resize(m, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) {
    const Eigen::VectorXd v = es.eigenvectors().col(keep[k]);
    out.sigma(static_cast<Eigen::Index>(k)) = evals(keep[k]);
    out.u.col(static_cast<Eigen::Index>(k)) =
        v.head(m) + std::complex<double>(0.0, 1.0) * v.tail(m);
  }
  return out;
}

double spectral_norm(const Eigen::MatrixXcd& x) {
  if (x.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(x);
  return svd.singularValues().maxCoeff();
}

Eigen::MatrixXcd clip_spectral_norm(const Eigen::MatrixXcd& x, double bound) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.singularValues().maxCoeff() <= bound) return x;
  Eigen::VectorXd s = svd.singularValues();
  for (Eigen::Index i = 0; i < s.size(); ++i) s(i) = std::min(s(i), bound);
  return svd.matrixU() * s.asDiagonal() * svd.matrixV().adjoint();
}

Eigen::MatrixXcd clip_spectral_norm_symmetric(const Eigen::MatrixXcd& x,
                                              double bound) {
  const TakagiFactors f = takagi(x);
  if (f.sigma.size() == 0 || f.sigma(0) <= bound) return x;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(x.rows(), x.cols());
  for (Eigen::Index k = 0; k < f.sigma.size(); ++k) {
    out += std::min(f.sigma(k), bound) * f.u.col(k) *
           f.u.col(k).transpose();
  }
  return out;
}

}  // namespace bdirs
