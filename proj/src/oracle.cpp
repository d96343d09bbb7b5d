#include "gsw/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace gsw::oracle {

TrigPolyC random_trig_poly(long first, long count, std::uint64_t seed)
{
  if (count < 1)
    throw std::invalid_argument("random_trig_poly: count must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  TrigPolyC::Coefficients c(count);
  for (auto& v : c) {
    const double re = normal(rng);
    const double im = normal(rng);
    v = {re, im};
  }
  return {first, std::move(c)};
}

DftIdentity dft_exactness_check(const TrigPolyC& p, long L)
{
  if (L < 1 || 2 * L < p.span() + 1)
    throw std::invalid_argument("dft_exactness_check: need 2L >= A2 - A1 + 1 (got 2L = " +
                                std::to_string(2 * L) + ", span + 1 = " + std::to_string(p.span() + 1) + ")");
  DftIdentity r;
  const long n = 2 * L;
  for (long j = 0; j < n; ++j)
    r.lhs += std::norm(p(static_cast<double>(j) / static_cast<double>(n)));
  r.lhs /= static_cast<double>(n);
  r.rhs = p.coeffs.squaredNorm();
  return r;
}

FrameBounds grochenig_check(const TrigPolyC& p, const std::vector<double>& nodes, double A, long D)
{
  const std::size_t r = nodes.size();
  if (r < 2)
    throw std::invalid_argument("grochenig_check: need at least two nodes");
  if (D < 1 || p.span() > 2 * D)
    throw std::invalid_argument("grochenig_check: polynomial span exceeds 2D");
  for (std::size_t j = 0; j < r; ++j) {
    if (nodes[j] < A || nodes[j] >= A + 1.0)
      throw std::invalid_argument("grochenig_check: nodes must lie in [A, A+1)");
    if (j > 0 && nodes[j] <= nodes[j - 1])
      throw std::invalid_argument("grochenig_check: nodes must be strictly increasing");
  }

  double delta = nodes.front() + 1.0 - nodes.back();
  for (std::size_t j = 1; j < r; ++j)
    delta = std::max(delta, nodes[j] - nodes[j - 1]);
  if (delta >= 1.0 / (2.0 * static_cast<double>(D)))
    throw std::invalid_argument("grochenig_check: maximal gap must be below 1/(2D)");

  double weighted = 0.0;
  for (std::size_t j = 0; j < r; ++j) {
    const double next = j + 1 < r ? nodes[j + 1] : nodes.front() + 1.0;
    const double prev = j > 0 ? nodes[j - 1] : nodes.back() - 1.0;
    weighted += 0.5 * (next - prev) * std::norm(p(nodes[j]));
  }

  const double norm = p.l2_norm();
  const double factor = 2.0 * delta * static_cast<double>(D);
  return {(1.0 - factor) * norm, std::sqrt(weighted), (1.0 + factor) * norm, delta};
}

QuadratureResult<std::complex<double>> quadrature_inner_product(const GridFunction& g, const GridFunction& h)
{
  if (!(g.grid == h.grid) || g.values.size() != g.grid.size || h.values.size() != h.grid.size)
    throw std::invalid_argument("quadrature_inner_product: functions are sampled on different grids");
  const Eigen::VectorXcd prod = g.values.conjugate().cwiseProduct(h.values);
  return trapezoid(prod, g.grid.step);
}

} // namespace gsw::oracle
