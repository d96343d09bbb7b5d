#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

// Brute-force references used to cross-check the Fourier-domain code paths.
// Nothing here calls into the sampling-matrix assembly.

namespace gsw::oracle {

/// Phi(z) = sum_{j=first}^{last} alpha_j e^{2 pi i j z}.
template <typename Scalar>
struct TrigPoly
{
  using Coefficients = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  long first = 0;
  Coefficients coeffs;

  TrigPoly() = default;
  TrigPoly(long first_, Coefficients c) : first(first_), coeffs(std::move(c))
  {
    if (coeffs.size() == 0)
      throw std::invalid_argument("TrigPoly: needs at least one coefficient");
  }

  long last() const { return first + static_cast<long>(coeffs.size()) - 1; }
  long span() const { return last() - first; }

  /// Horner evaluation in w = e^{2 pi i z}.
  std::complex<double> operator()(double z) const
  {
    const std::complex<double> w = std::polar(1.0, 2.0 * std::numbers::pi * z);
    std::complex<double> acc = 0.0;
    for (Eigen::Index m = coeffs.size() - 1; m >= 0; --m)
      acc = acc * w + std::complex<double>(coeffs[m]);
    return acc * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(first) * z);
  }

  /// Term-by-term summation, the reference for operator().
  std::complex<double> direct(double z) const
  {
    std::complex<double> acc = 0.0;
    for (Eigen::Index m = 0; m < coeffs.size(); ++m)
      acc += std::complex<double>(coeffs[m]) *
             std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(first + m) * z);
    return acc;
  }

  /// L^2 norm over one period, exact from the coefficients.
  double l2_norm() const { return coeffs.norm(); }
};

using TrigPolyC = TrigPoly<std::complex<double>>;

/// Seeded polynomial with complex standard normal coefficients.
TrigPolyC random_trig_poly(long first, long count, std::uint64_t seed);

struct DftIdentity
{
  double lhs = 0.0; // (1/2L) sum_{j<2L} |Phi(j/2L)|^2
  double rhs = 0.0; // sum |alpha_j|^2
};

/// Throws std::invalid_argument unless 2L >= span + 1.
DftIdentity dft_exactness_check(const TrigPolyC& p, long L);

struct FrameBounds
{
  double lower = 0.0;
  double middle = 0.0;
  double upper = 0.0;
  double delta = 0.0;

  bool holds(double slack = 1e-12) const
  {
    return lower <= middle * (1.0 + slack) && middle <= upper * (1.0 + slack);
  }
};

/// Weighted sampling inequality for nodes in [A, A+1) with maximal gap
/// delta < 1/(2D) (gaps wrap around the period) and span <= 2D.
/// Weights are (x_{j+1} - x_{j-1}) / 2.
FrameBounds grochenig_check(const TrigPolyC& p, const std::vector<double>& nodes, double A, long D);

/// Uniform grid x_i = start + i * step, i < size.
struct UniformGrid
{
  double start = 0.0;
  double step = 1.0;
  Eigen::Index size = 0;

  double at(Eigen::Index i) const { return start + static_cast<double>(i) * step; }
  double stop() const { return at(size - 1); }

  friend bool operator==(const UniformGrid&, const UniformGrid&) = default;
};

template <typename Scalar>
struct QuadratureResult
{
  Scalar value{};
  double error_estimate = 0.0;
};

/// Composite trapezoid rule. When the grid has an odd number of points the
/// half-resolution rule gives a Richardson estimate |I_h - I_2h| / 3.
template <typename Derived>
auto trapezoid(const Eigen::MatrixBase<Derived>& values, double step)
    -> QuadratureResult<typename Derived::Scalar>
{
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = values.size();
  QuadratureResult<Scalar> r;
  if (n < 2)
    return r;
  const Scalar ends = (values(0) + values(n - 1)) * 0.5;
  const Scalar fine = (values.sum() - ends) * step;
  r.value = fine;
  if (n >= 3 && (n - 1) % 2 == 0) {
    Scalar coarse_sum = Scalar(0);
    for (Eigen::Index i = 0; i < n; i += 2)
      coarse_sum += values(i);
    const Scalar coarse = (coarse_sum - ends) * (2.0 * step);
    r.error_estimate = std::abs(fine - coarse) / 3.0;
  }
  return r;
}

/// Samples of a function on a uniform grid.
struct GridFunction
{
  UniformGrid grid;
  Eigen::VectorXcd values;
};

/// <g, h> = int conj(g) h by the trapezoid rule. Throws on grid mismatch.
QuadratureResult<std::complex<double>> quadrature_inner_product(const GridFunction& g, const GridFunction& h);

} // namespace gsw::oracle
