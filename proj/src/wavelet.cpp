#include "gsw/wavelet.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gsw {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr int kMaxLevel = 40;

// Published orthonormal Daubechies low-pass filters (sum = sqrt 2).
const double kHaarTaps[] = {0.70710678118654752440, 0.70710678118654752440};

const double kDb4Taps[] = {
    0.48296291314453414337, 0.83651630373780790557,
    0.22414386804201338102, -0.12940952255126038117};

const double kDb6Taps[] = {
    0.33267055295008261599851158914, 0.80689150931109257649449360409,
    0.45987750211849157009515194215, -0.13501102001025458869638990670,
    -0.08544127388202666169281916918, 0.03522629188570953660274066472};

const double kDb8Taps[] = {
    0.23037781330889650086329118304, 0.71484657055291564708992195527,
    0.63088076792985890788171633830, -0.02798376941685985421141374718,
    -0.18703481171909308407957067279, 0.03084138183556076362721936253,
    0.03288301166688519973540751355, -0.01059740178506903210488320852};

template <std::size_t K>
Eigen::VectorXd to_vector(const double (&taps)[K])
{
  return Eigen::Map<const Eigen::VectorXd>(taps, static_cast<Eigen::Index>(K));
}

// First moment of phi, int x phi(x) dx = 2^{-1/2} sum k h_k.
double first_moment(const WaveletFamily& family)
{
  double s = 0.0;
  for (Eigen::Index k = 0; k < family.taps.size(); ++k)
    s += static_cast<double>(k) * family.taps[k];
  return s / kSqrt2;
}

Complex phase(double angle) { return std::polar(1.0, angle); }

} // namespace

std::vector<std::string> family_names()
{
  return {"haar", "db2", "db4", "db6", "db8", "db1t", "db2t", "db3t", "db4t"};
}

WaveletFamily make_family_from_taps(std::string name, Eigen::VectorXd taps)
{
  WaveletFamily family;
  family.name = std::move(name);
  family.support_a = static_cast<int>(taps.size()) - 1;
  family.taps = std::move(taps);
  return family;
}

WaveletFamily make_family(std::string_view name)
{
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });

  if (key == "haar" || key == "db2" || key == "db1t")
    return make_family_from_taps(key, to_vector(kHaarTaps));
  if (key == "db4" || key == "db2t")
    return make_family_from_taps(key, to_vector(kDb4Taps));
  if (key == "db6" || key == "db3t")
    return make_family_from_taps(key, to_vector(kDb6Taps));
  if (key == "db8" || key == "db4t")
    return make_family_from_taps(key, to_vector(kDb8Taps));

  std::string known;
  for (const auto& n : family_names())
    known += (known.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown wavelet family '" + std::string(name) + "' (known: " + known + ")");
}

FamilyDiagnostics diagnose(const WaveletFamily& family)
{
  FamilyDiagnostics d;
  const auto& h = family.taps;
  const Eigen::Index n = h.size();
  d.support_consistent = n >= 2 && family.support_a == n - 1;
  d.tap_sum_error = std::abs(h.sum() - kSqrt2);
  for (Eigen::Index m = 0; 2 * m < n; ++m) {
    double s = 0.0;
    for (Eigen::Index i = 0; i + 2 * m < n; ++i)
      s += h[i] * h[i + 2 * m];
    d.orthonormality_error = std::max(d.orthonormality_error, std::abs(s - (m == 0 ? 1.0 : 0.0)));
  }
  d.m0_at_zero_error = std::abs(m0(family, 0.0) - Complex(1.0));
  return d;
}

void validate(const WaveletFamily& family)
{
  const auto d = diagnose(family);
  if (!d.support_consistent)
    throw std::invalid_argument(family.name + ": support_a must equal the number of taps minus one");
  if (d.tap_sum_error > 1e-12)
    throw std::invalid_argument(family.name + ": taps do not sum to sqrt(2)");
  if (d.orthonormality_error > 1e-10)
    throw std::invalid_argument(family.name + ": taps violate orthonormality of integer shifts");
  if (d.m0_at_zero_error > 1e-12)
    throw std::invalid_argument(family.name + ": m0(0) != 1");
}

Complex m0(const WaveletFamily& family, double xi)
{
  // Horner in z = e^{-i xi}; |z| = 1 keeps it as accurate as the direct sum.
  const Complex z = phase(-xi);
  Complex s = 0.0;
  for (Eigen::Index k = family.taps.size() - 1; k >= 0; --k)
    s = s * z + family.taps[k];
  return s / kSqrt2;
}

Complex m1(const WaveletFamily& family, double xi)
{
  return -phase(-family.support_a * xi) * std::conj(m0(family, xi + std::numbers::pi));
}

int product_depth(const WaveletFamily& family, double xi)
{
  // The neglected tail phi_hat(xi / 2^K) is replaced by its first-order
  // expansion exp(-i mu xi / 2^K); the error is O((xi / 2^K)^2).
  const double ax = std::abs(xi);
  const double scale = std::sqrt(family.tail_tol);
  int k = family.product_depth;
  if (ax > 0.0)
    k = std::max(k, static_cast<int>(std::ceil(std::log2(ax / scale))));
  return k;
}

Complex scaling_fourier(const WaveletFamily& family, double xi)
{
  if (xi == 0.0)
    return 1.0;
  const int depth = product_depth(family, xi);
  Complex p = 1.0;
  double arg = xi;
  for (int s = 1; s <= depth; ++s) {
    arg *= 0.5;
    p *= m0(family, arg);
  }
  return p * phase(-first_moment(family) * arg);
}

Complex wavelet_fourier(const WaveletFamily& family, double xi)
{
  const double half = 0.5 * xi;
  return m1(family, half) * scaling_fourier(family, half);
}

std::string to_string(const BasisIndex& idx)
{
  if (idx.kind == BasisIndex::Kind::scaling)
    return "phi_{0," + std::to_string(idx.shift) + "}";
  return "psi_{" + std::to_string(idx.level) + "," + std::to_string(idx.shift) + "}";
}

bool is_valid(const WaveletFamily& family, const BasisIndex& idx)
{
  const long a = family.ceil_a();
  if (idx.kind == BasisIndex::Kind::scaling)
    return idx.level == 0 && std::abs(idx.shift) <= a - 1;
  if (idx.level < 0 || idx.level > kMaxLevel)
    return false;
  return idx.shift >= -a + 1 && idx.shift <= (1L << idx.level) * a - 1;
}

Complex dilated_scaling_fourier(const WaveletFamily& family, int level, long shift, double omega)
{
  if (level < 0)
    throw std::invalid_argument("dilated_scaling_fourier: negative level");
  const double scale = std::ldexp(1.0, -level);
  const double w = omega * scale;
  return std::sqrt(scale) * phase(-w * static_cast<double>(shift)) * scaling_fourier(family, w);
}

Complex basis_fourier(const WaveletFamily& family, const BasisIndex& idx, double omega)
{
  if (!is_valid(family, idx))
    throw std::invalid_argument("basis_fourier: " + to_string(idx) + " is not in the reconstruction system");
  if (idx.kind == BasisIndex::Kind::scaling)
    return phase(-omega * static_cast<double>(idx.shift)) * scaling_fourier(family, omega);
  const double scale = std::ldexp(1.0, -idx.level);
  const double w = omega * scale;
  return std::sqrt(scale) * phase(-w * static_cast<double>(idx.shift)) * wavelet_fourier(family, w);
}

Eigen::VectorXcd basis_fourier_row(const WaveletFamily& family, long n, double omega)
{
  Eigen::VectorXcd row(n);
  const long a = family.ceil_a();
  long p = 0;

  const Complex phi_hat = scaling_fourier(family, omega);
  for (long k = -a + 1; k <= a - 1 && p < n; ++k, ++p)
    row[p] = phase(-omega * static_cast<double>(k)) * phi_hat;

  for (int j = 0; p < n; ++j) {
    const double scale = std::ldexp(1.0, -j);
    const double w = omega * scale;
    const Complex psi_hat = std::sqrt(scale) * wavelet_fourier(family, w);
    const long last = (1L << j) * a - 1;
    for (long k = -a + 1; k <= last && p < n; ++k, ++p)
      row[p] = phase(-w * static_cast<double>(k)) * psi_hat;
  }
  return row;
}

long scaling_count(const WaveletFamily& family) { return 2L * family.ceil_a() - 1; }

long level_count(const WaveletFamily& family, int level)
{
  return ((1L << level) + 1) * family.ceil_a() - 1;
}

BasisIndex position_to_index(const WaveletFamily& family, long position)
{
  if (position < 1)
    throw std::invalid_argument("position_to_index: positions start at 1");
  const long a = family.ceil_a();
  if (position <= scaling_count(family))
    return BasisIndex::scaling(position - a);
  long q = position - scaling_count(family);
  int j = 0;
  while (q > level_count(family, j)) {
    q -= level_count(family, j);
    ++j;
    if (j > kMaxLevel)
      throw std::invalid_argument("position_to_index: position too large");
  }
  return BasisIndex::wavelet(j, q - a);
}

long index_to_position(const WaveletFamily& family, const BasisIndex& idx)
{
  if (!is_valid(family, idx))
    throw std::invalid_argument("index_to_position: " + to_string(idx) + " is not in the reconstruction system");
  const long a = family.ceil_a();
  if (idx.kind == BasisIndex::Kind::scaling)
    return idx.shift + a;
  const long j = idx.level;
  return scaling_count(family) + ((1L << j) - 1) * a + j * (a - 1) + idx.shift + a;
}

long n_r(const WaveletFamily& family, int R)
{
  if (R < 0 || R > kMaxLevel)
    throw std::invalid_argument("n_r: R out of range");
  const long a = family.ceil_a();
  return (1L << R) * a + (R + 1) * (a - 1);
}

FineScaleWindow fine_scale_window(const WaveletFamily& family, int R)
{
  if (R < 1 || R > kMaxLevel)
    throw std::invalid_argument("fine_scale_window: requires R >= 1");
  const long a = family.ceil_a();
  const long p = 1L << R;
  return {-(p + 1) * a + p + 1, 2 * p * a - p - 1};
}

} // namespace gsw
