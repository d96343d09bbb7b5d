#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "gsw/sampling.hpp"
#include "gsw/wavelet.hpp"

namespace gsw {

/// The M x N cross-Gram matrix U(i, j) = <varphi_j, s_{l(i)}>, rows in
/// increasing l, columns in basis order. Column-major complex.
struct GsProblem
{
  WaveletFamily family;
  SamplingScheme scheme;
  long N = 0;
  long M = 0;
  Eigen::MatrixXcd U;

  SampleIndexSet rows() const { return {M}; }
};

GsProblem assemble(const WaveletFamily& family, const SamplingScheme& scheme, long N, long M);

/// Singular values of a dense matrix, descending. Tall inputs are reduced
/// by a Householder QR first.
Eigen::VectorXd singular_values(const Eigen::MatrixXcd& U);

/// C_{N,M}: the smallest singular value of U, zero when M < N.
double c_nm(const GsProblem& problem);

enum class LsqMethod { pivoted_qr, svd };

const char* to_string(LsqMethod m);

struct GsSolution
{
  Eigen::VectorXcd alpha;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  double kappa = 0.0; // +inf when sigma_min == 0
  double residual = 0.0;
  LsqMethod method = LsqMethod::pivoted_qr;
  /// sigma_min / sigma_max <= kRankTolerance; only with IllPosedPolicy::basic_solution.
  bool rank_deficient = false;
};

/// What solve does when U is singular to working precision.
enum class IllPosedPolicy {
  reject,        ///< throw IllPosedError
  basic_solution ///< return the pivoted-QR basic solution anyway
};

/// Raised when sigma_min / sigma_max falls below working precision.
class IllPosedError : public std::runtime_error
{
public:
  IllPosedError(double sigma_min, double sigma_max);
  double sigma_min() const { return sigma_min_; }
  double sigma_max() const { return sigma_max_; }

private:
  double sigma_min_;
  double sigma_max_;
};

/// Relative singular-value floor below which solve refuses.
inline constexpr double kRankTolerance = 1e-13;
/// Below this sigma_min the least-squares solve switches to the SVD.
inline constexpr double kSvdSwitch = 1e-8;

/// Least-squares minimizer of ||U alpha - samples||. Pivoted QR by default,
/// thin SVD when sigma_min < kSvdSwitch. Never forms U* U.
GsSolution solve(const GsProblem& problem, const SampleVector& samples,
                 IllPosedPolicy policy = IllPosedPolicy::reject);
GsSolution solve(const GsProblem& problem, const Eigen::VectorXcd& samples,
                 IllPosedPolicy policy = IllPosedPolicy::reject);

/// ||f - f_tilde|| for f = sum beta_j varphi_j and f_tilde = sum_{j<=N} alpha_j
/// varphi_j, exact by orthonormality (N = alpha.size()).
double reconstruction_error(const Eigen::VectorXd& beta, const Eigen::VectorXcd& alpha);

/// ||f - Q_N f|| = sqrt(sum_{j>N} beta_j^2).
double best_approx_error(const Eigen::VectorXd& beta, long N);

} // namespace gsw
