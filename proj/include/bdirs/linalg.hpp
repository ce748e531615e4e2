#pragma once

#include <Eigen/Dense>

namespace bdirs {

// Takagi (symmetric SVD) factorization of a complex symmetric matrix:
// S = U diag(sigma) U^T with orthonormal columns in U and sigma >= 0.
// Only the modes with sigma above a relative threshold are returned, which
// is all that reconstruction needs (zero modes contribute nothing).
struct TakagiFactors {
  Eigen::VectorXd sigma;  // descending
  Eigen::MatrixXcd u;     // M x r, orthonormal columns
};

TakagiFactors takagi(const Eigen::MatrixXcd& symmetric,
                     double rel_threshold = 1e-14);

double spectral_norm(const Eigen::MatrixXcd& x);

// Frobenius-nearest matrix with singular values clipped at `bound`.
Eigen::MatrixXcd clip_spectral_norm(const Eigen::MatrixXcd& x, double bound);

// Frobenius-nearest complex symmetric matrix with spectral norm <= bound
// (input must already be symmetric; clipping goes through Takagi so the
// output stays exactly symmetric).
Eigen::MatrixXcd clip_spectral_norm_symmetric(const Eigen::MatrixXcd& x,
                                              double bound);

}  // namespace bdirs
