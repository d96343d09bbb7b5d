#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "gsw/sampling.hpp"
#include "gsw/wavelet.hpp"

namespace gsw {

/// 1/C < theta is tested as 1/C < theta (1 + kThresholdSlack) so that an
/// analytic equality at the threshold is not lost to rounding.
inline constexpr double kThresholdSlack = 1e-9;

struct SsrQuery
{
  WaveletFamily family;
  SamplingScheme scheme;
  double theta = 2.0;
  long N = 1;
  /// Largest M examined; 0 selects 16 N.
  long search_cap = 0;
};

struct SsrResult
{
  long M_star = 0;
  double sigma_min = 0.0;  // C_{N, M_star}
  int evaluations = 0;
};

/// No M up to the cap reached the threshold.
class SsrCapError : public std::runtime_error
{
public:
  SsrCapError(long cap, double best_c);
  long cap() const { return cap_; }
  double best_c() const { return best_c_; }

private:
  long cap_;
  double best_c_;
};

/// Observed C_{N,M} decreasing in M beyond rounding.
class MonotonicityError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Theta(N; theta) = min { M : 1/C_{N,M} < theta }, by doubling from M = N
/// followed by bisection.
SsrResult stable_sampling_rate(const SsrQuery& query);

struct SsrPoint
{
  long N = 0;
  long M_star = 0;
  double sigma_min = 0.0;
  double ratio = 0.0; // M_star / N
};

struct SsrCurve
{
  double theta = 0.0;
  double epsilon = 0.0;
  std::vector<SsrPoint> points;

  /// Limit of Theta(N_R)/N_R, 1/(eps ceil(a)).
  double predicted_ratio = 0.0;
};

SsrCurve ssr_curve(const WaveletFamily& family, const SamplingScheme& scheme, double theta,
                   const std::vector<long>& N_list, long search_cap = 0);

/// N_R for R in [r_min, r_max].
std::vector<long> level_sizes(const WaveletFamily& family, int r_min, int r_max);

struct BlowupRow
{
  int R = 0;
  long N = 0;
  long M = 0;
  double sigma_min = 0.0;
  double log10_kappa = 0.0; // +inf when sigma_min == 0
};

/// C_{N_R, M} with M = floor(c 2^R) for each R. Requires 0 < c < 1/eps.
std::vector<BlowupRow> blowup_experiment(const WaveletFamily& family, const SamplingScheme& scheme, double c,
                                         const std::vector<int>& R_list);

struct BlowupFit
{
  double slope = 0.0;     // d ln(kappa) / d 2^R
  double intercept = 0.0;
  double r_squared = 0.0;
  /// kappa(R_max) / kappa(R_max - 1).
  double top_growth = 0.0;
  bool finite = false;

  bool exponential() const { return finite && slope > 0.0 && r_squared > 0.9; }
};

/// Least-squares line of ln kappa against 2^R over the last `tail` rows.
BlowupFit fit_blowup(const std::vector<BlowupRow>& rows, std::size_t tail = 4);

/// Q_{n,w}(z) = T_{2n}(sin(z/2) / sin(w/2)) evaluated directly.
double chebyshev_q(int n, double omega, double z);

/// q = Q_{n,w} / Q_{n,w}(pi) as a trigonometric polynomial
/// q(z) = sum_{|j|<=n} coeffs[j + n] e^{i j z}.
struct ChebyshevWitness
{
  int n = 0;
  double omega = 0.0;
  Eigen::VectorXd coeffs;
  /// Q_{n,w}(pi) = sup over [-pi, pi].
  double peak = 0.0;

  double evaluate(double z) const;
};

/// Requires n >= 1 and w in [pi/2, pi).
ChebyshevWitness chebyshev_qomega(int n, double omega);

} // namespace gsw
