#include "gsw/wavelet.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gsw {

namespace {

// phi at the integers 0..a: the eigenvector of (sqrt2 h_{2n-m}) for
// eigenvalue 1, normalized to unit sum.
Eigen::VectorXd integer_values(const WaveletFamily& family)
{
  const int a = family.support_a;
  Eigen::VectorXd v = Eigen::VectorXd::Zero(a + 1);
  if (a == 1) {
    // Haar: the eigenvalue is double. Taking the midpoint value at the jumps
    // keeps trapezoid sums over the dyadic grid second-order accurate.
    v[0] = 0.5;
    v[1] = 0.5;
    return v;
  }
  const auto& h = family.taps;
  Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(a + 2, a + 1);
  for (int n = 0; n <= a; ++n) {
    for (int m = 0; m <= a; ++m) {
      const int k = 2 * n - m;
      if (k >= 0 && k < h.size())
        sys(n, m) = std::numbers::sqrt2 * h[k];
    }
    sys(n, n) -= 1.0;
  }
  sys.row(a + 1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(a + 2);
  rhs[a + 1] = 1.0;
  return sys.colPivHouseholderQr().solve(rhs);
}

} // namespace

CascadeTable cascade_evaluate(const WaveletFamily& family, int levels)
{
  if (levels < 1 || levels > 24)
    throw std::invalid_argument("cascade_evaluate: levels must be in [1, 24]");

  const int a = family.support_a;
  const long unit = 1L << levels;
  const long last = a * unit;
  const auto& h = family.taps;

  CascadeTable table;
  table.levels = levels;
  table.support_a = a;
  table.phi = Eigen::VectorXd::Zero(last + 1);
  table.psi = Eigen::VectorXd::Zero(last + 1);

  const Eigen::VectorXd ints = integer_values(family);
  for (int n = 0; n <= a; ++n)
    table.phi[n * unit] = ints[n];

  // phi(x) = sqrt2 sum_k h_k phi(2x - k); level l fills the odd multiples of
  // 2^{-l}, whose right-hand sides live on level l - 1.
  for (int l = 1; l <= levels; ++l) {
    const long stride = 1L << (levels - l);
    for (long i = stride; i < last; i += 2 * stride) {
      double s = 0.0;
      for (Eigen::Index k = 0; k < h.size(); ++k) {
        const long src = 2 * i - k * unit;
        if (src >= 0 && src <= last)
          s += h[k] * table.phi[src];
      }
      table.phi[i] = std::numbers::sqrt2 * s;
    }
  }

  // psi(x) = sqrt2 sum_k g_k phi(2x - k), g_k = (-1)^k h_{a-k}.
  for (long i = 0; i <= last; ++i) {
    double s = 0.0;
    for (int k = 0; k <= a; ++k) {
      const long src = 2 * i - k * unit;
      if (src >= 0 && src <= last) {
        const double g = (k % 2 == 0 ? 1.0 : -1.0) * h[a - k];
        s += g * table.phi[src];
      }
    }
    table.psi[i] = std::numbers::sqrt2 * s;
  }
  return table;
}

double CascadeTable::dilate(bool wavelet, int level, long shift, long m) const
{
  // 2^{j/2} g(2^j x - k) at x = m 2^{-levels}; argument index m 2^j - k 2^levels.
  const long idx = m * (1L << level) - shift * samples_per_unit();
  const long last = static_cast<long>(support_a) * samples_per_unit();
  if (idx < 0 || idx > last)
    return 0.0;
  const double v = wavelet ? psi[idx] : phi[idx];
  return v * std::sqrt(std::ldexp(1.0, level));
}

double CascadeTable::basis_value(const BasisIndex& idx, long m) const
{
  return dilate(idx.kind == BasisIndex::Kind::wavelet, idx.level, idx.shift, m);
}

} // namespace gsw
