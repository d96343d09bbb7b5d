#include "gsw/ssr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "gsw/gs.hpp"
#include "gsw/parallel.hpp"

namespace gsw {

namespace {

// Nested sampling spaces make C_{N,M} nondecreasing in M; anything below
// this is rounding.
constexpr double kMonotoneSlack = 1e-10;

std::string cap_message(long cap, double best_c)
{
  std::ostringstream os;
  os << "SSR exceeds cap: no M <= " << cap << " reached the threshold (best C = " << best_c << ")";
  return os.str();
}

} // namespace

SsrCapError::SsrCapError(long cap, double best_c)
    : std::runtime_error(cap_message(cap, best_c)), cap_(cap), best_c_(best_c)
{
}

SsrResult stable_sampling_rate(const SsrQuery& query)
{
  if (!(query.theta > 1.0))
    throw std::invalid_argument("stable_sampling_rate: theta must exceed 1");
  if (query.N < 1)
    throw std::invalid_argument("stable_sampling_rate: N must be positive");
  const long cap = query.search_cap > 0 ? query.search_cap : 16 * query.N;
  if (cap < query.N)
    throw std::invalid_argument("stable_sampling_rate: search cap must be at least N");
  validate(query.scheme, query.family);

  const double threshold = 1.0 / (query.theta * (1.0 + kThresholdSlack));
  std::map<long, double> seen;
  SsrResult result;

  auto evaluate = [&](long M) {
    const double c = c_nm(assemble(query.family, query.scheme, query.N, M));
    ++result.evaluations;
    auto next = seen.lower_bound(M);
    if (next != seen.end() && next->second < c - kMonotoneSlack)
      throw MonotonicityError("C_{N,M} decreased between M = " + std::to_string(M) +
                              " and M = " + std::to_string(next->first));
    if (next != seen.begin() && std::prev(next)->second > c + kMonotoneSlack)
      throw MonotonicityError("C_{N,M} decreased between M = " + std::to_string(std::prev(next)->first) +
                              " and M = " + std::to_string(M));
    seen[M] = c;
    return c;
  };

  // C_{N,M} = 0 for M < N, so N - 1 is a known failure.
  long lo = query.N - 1;
  long hi = 0;
  for (long M = query.N;; M = std::min(2 * M, cap)) {
    const double c = evaluate(M);
    if (c > threshold) {
      hi = M;
      break;
    }
    lo = M;
    if (M == cap) {
      double best = 0.0;
      for (const auto& [m, v] : seen)
        best = std::max(best, v);
      throw SsrCapError(cap, best);
    }
  }
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    if (evaluate(mid) > threshold)
      hi = mid;
    else
      lo = mid;
  }
  result.M_star = hi;
  result.sigma_min = seen.at(hi);
  return result;
}

SsrCurve ssr_curve(const WaveletFamily& family, const SamplingScheme& scheme, double theta,
                   const std::vector<long>& N_list, long search_cap)
{
  SsrCurve curve;
  curve.theta = theta;
  curve.epsilon = scheme.epsilon;
  curve.predicted_ratio = 1.0 / (scheme.epsilon * family.ceil_a());
  curve.points.resize(N_list.size());
  parallel_for(N_list.size(), [&](std::size_t i) {
    const SsrQuery q{family, scheme, theta, N_list[i], search_cap};
    const SsrResult r = stable_sampling_rate(q);
    curve.points[i] = {N_list[i], r.M_star, r.sigma_min,
                       static_cast<double>(r.M_star) / static_cast<double>(N_list[i])};
  });
  return curve;
}

std::vector<long> level_sizes(const WaveletFamily& family, int r_min, int r_max)
{
  std::vector<long> out;
  for (int R = r_min; R <= r_max; ++R)
    out.push_back(n_r(family, R));
  return out;
}

std::vector<BlowupRow> blowup_experiment(const WaveletFamily& family, const SamplingScheme& scheme, double c,
                                         const std::vector<int>& R_list)
{
  if (!(c > 0.0) || !(c < 1.0 / scheme.epsilon))
    throw std::invalid_argument("blowup_experiment: requires 0 < c < 1/epsilon");
  validate(scheme, family);

  std::vector<BlowupRow> rows(R_list.size());
  parallel_for(R_list.size(), [&](std::size_t i) {
    BlowupRow& row = rows[i];
    row.R = R_list[i];
    row.N = n_r(family, row.R);
    row.M = std::max(1L, static_cast<long>(std::floor(c * std::ldexp(1.0, row.R))));
    row.sigma_min = row.M < row.N ? 0.0 : c_nm(assemble(family, scheme, row.N, row.M));
    row.log10_kappa =
        row.sigma_min > 0.0 ? -std::log10(row.sigma_min) : std::numeric_limits<double>::infinity();
  });
  return rows;
}

BlowupFit fit_blowup(const std::vector<BlowupRow>& rows, std::size_t tail)
{
  BlowupFit fit;
  if (rows.size() < 2 || tail < 2)
    return fit;
  const std::size_t n = std::min(tail, rows.size());
  const auto first = rows.end() - static_cast<std::ptrdiff_t>(n);

  Eigen::VectorXd x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const BlowupRow& r = *(first + static_cast<std::ptrdiff_t>(i));
    x[i] = std::ldexp(1.0, r.R);
    y[i] = r.log10_kappa * std::numbers::ln10;
  }
  const auto& last = rows.back();
  const auto& prev = rows[rows.size() - 2];
  fit.top_growth = std::pow(10.0, last.log10_kappa - prev.log10_kappa);
  fit.finite = y.allFinite();
  if (!fit.finite)
    return fit;

  const double xm = x.mean();
  const double ym = y.mean();
  const Eigen::VectorXd dx = x.array() - xm;
  const Eigen::VectorXd dy = y.array() - ym;
  const double sxx = dx.squaredNorm();
  fit.slope = dx.dot(dy) / sxx;
  fit.intercept = ym - fit.slope * xm;
  const double ss_tot = dy.squaredNorm();
  const double ss_res = (y - (fit.intercept + fit.slope * x.array()).matrix()).squaredNorm();
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 0.0;
  return fit;
}

double chebyshev_q(int n, double omega, double z)
{
  const double x = std::sin(0.5 * z) / std::sin(0.5 * omega);
  const double deg = 2.0 * n;
  if (std::abs(x) <= 1.0)
    return std::cos(deg * std::acos(x));
  // Even degree, so T_{2n}(-x) = T_{2n}(x).
  return std::cosh(deg * std::acosh(std::abs(x)));
}

double ChebyshevWitness::evaluate(double z) const
{
  double s = 0.0;
  for (int j = -n; j <= n; ++j)
    s += coeffs[j + n] * std::cos(j * z);
  return s;
}

ChebyshevWitness chebyshev_qomega(int n, double omega)
{
  if (n < 1)
    throw std::invalid_argument("chebyshev_qomega: n must be positive");
  if (!(omega >= 0.5 * std::numbers::pi) || !(omega < std::numbers::pi))
    throw std::invalid_argument("chebyshev_qomega: omega must lie in [pi/2, pi)");

  ChebyshevWitness w;
  w.n = n;
  w.omega = omega;
  w.peak = chebyshev_q(n, omega, std::numbers::pi);

  // Degree n, so 4n + 4 equispaced samples determine the coefficients exactly.
  const int P = 4 * n + 4;
  Eigen::VectorXd samples(P);
  Eigen::VectorXd nodes(P);
  for (int p = 0; p < P; ++p) {
    nodes[p] = -std::numbers::pi + 2.0 * std::numbers::pi * p / P;
    samples[p] = chebyshev_q(n, omega, nodes[p]) / w.peak;
  }
  w.coeffs.resize(2 * n + 1);
  for (int j = -n; j <= n; ++j) {
    double s = 0.0;
    for (int p = 0; p < P; ++p)
      s += samples[p] * std::cos(j * nodes[p]);
    w.coeffs[j + n] = s / P;
  }
  return w;
}

} // namespace gsw
