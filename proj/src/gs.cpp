#include "gsw/gs.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "gsw/parallel.hpp"

namespace gsw {

GsProblem assemble(const WaveletFamily& family, const SamplingScheme& scheme, long N, long M)
{
  if (N < 1 || M < 1)
    throw std::invalid_argument("assemble: N and M must be positive");
  validate(scheme, family);

  GsProblem p{family, scheme, N, M, Eigen::MatrixXcd(M, N)};
  const SampleIndexSet rows{M};
  const double root_eps = std::sqrt(scheme.epsilon);
  parallel_for(static_cast<std::size_t>(M), [&](std::size_t i) {
    const auto r = static_cast<Eigen::Index>(i);
    const double omega = -2.0 * std::numbers::pi * scheme.epsilon * static_cast<double>(rows.at(r));
    p.U.row(r) = root_eps * basis_fourier_row(family, N, omega).transpose();
  });
  return p;
}

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& U)
{
  if (U.rows() > U.cols()) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(U);
    const Eigen::MatrixXcd R = qr.matrixQR().topRows(U.cols()).triangularView<Eigen::Upper>();
    return Eigen::BDCSVD<Eigen::MatrixXcd>(R).singularValues();
  }
  return Eigen::BDCSVD<Eigen::MatrixXcd>(U).singularValues();
}

double c_nm(const GsProblem& problem)
{
  if (problem.M < problem.N)
    return 0.0;
  const Eigen::VectorXd s = singular_values(problem.U);
  return s[s.size() - 1];
}

const char* to_string(LsqMethod m)
{
  return m == LsqMethod::svd ? "svd" : "pivoted_qr";
}

IllPosedError::IllPosedError(double sigma_min, double sigma_max)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "ill-posed below working precision: sigma_min = " << sigma_min << " (sigma_max = " << sigma_max
           << ")";
        return os.str();
      }()),
      sigma_min_(sigma_min), sigma_max_(sigma_max)
{
}

GsSolution solve(const GsProblem& problem, const Eigen::VectorXcd& samples, IllPosedPolicy policy)
{
  if (samples.size() != problem.M)
    throw std::invalid_argument("solve: expected " + std::to_string(problem.M) + " samples, got " +
                                std::to_string(samples.size()));
  if (problem.M < problem.N && policy == IllPosedPolicy::reject)
    throw IllPosedError(0.0, 1.0);

  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(problem.U);

  // A rank-deficient pivoted QR truncates R, so its singular values would
  // understate sigma_min; fall back to the SVD of U itself.
  Eigen::VectorXd s;
  if (problem.M >= problem.N && qr.rank() == problem.N) {
    const Eigen::MatrixXcd R =
        qr.matrixQR().topLeftCorner(problem.N, problem.N).triangularView<Eigen::Upper>();
    s = Eigen::BDCSVD<Eigen::MatrixXcd>(R).singularValues();
  } else {
    s = singular_values(problem.U);
  }

  GsSolution sol;
  sol.sigma_max = s[0];
  sol.sigma_min = problem.M < problem.N ? 0.0 : s[s.size() - 1];
  sol.kappa = sol.sigma_min > 0.0 ? 1.0 / sol.sigma_min : std::numeric_limits<double>::infinity();
  sol.rank_deficient = !(sol.sigma_min > kRankTolerance * sol.sigma_max);

  if (sol.rank_deficient) {
    if (policy == IllPosedPolicy::reject)
      throw IllPosedError(sol.sigma_min, sol.sigma_max);
    sol.method = LsqMethod::pivoted_qr;
    sol.alpha = qr.solve(samples);
  } else if (sol.sigma_min < kSvdSwitch) {
    sol.method = LsqMethod::svd;
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(problem.U, Eigen::ComputeThinU | Eigen::ComputeThinV);
    sol.alpha = svd.solve(samples);
  } else {
    sol.method = LsqMethod::pivoted_qr;
    sol.alpha = qr.solve(samples);
  }
  sol.residual = (problem.U * sol.alpha - samples).norm();
  return sol;
}

GsSolution solve(const GsProblem& problem, const SampleVector& samples, IllPosedPolicy policy)
{
  if (samples.index.M != problem.M)
    throw std::invalid_argument("solve: sample vector has M = " + std::to_string(samples.index.M) +
                                ", problem has M = " + std::to_string(problem.M));
  return solve(problem, samples.values, policy);
}

double reconstruction_error(const Eigen::VectorXd& beta, const Eigen::VectorXcd& alpha)
{
  const Eigen::Index n = alpha.size();
  const Eigen::Index j = beta.size();
  double s = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    s += std::norm((i < j ? Complex(beta[i]) : Complex(0.0)) - alpha[i]);
  if (j > n)
    s += beta.tail(j - n).squaredNorm();
  return std::sqrt(s);
}

double best_approx_error(const Eigen::VectorXd& beta, long N)
{
  if (N < 0)
    throw std::invalid_argument("best_approx_error: N must be non-negative");
  if (N >= beta.size())
    return 0.0;
  return beta.tail(beta.size() - N).norm();
}

} // namespace gsw
