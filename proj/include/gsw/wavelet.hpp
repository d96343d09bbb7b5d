#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace gsw {

using Complex = std::complex<double>;

/// Compactly supported orthonormal wavelet family given by its low-pass filter.
///
/// Taps are normalized so that their sum is sqrt(2). The scaling function and
/// the mother wavelet are both supported in [0, support_a] with
/// support_a = taps.size() - 1.
struct WaveletFamily
{
  std::string name;
  Eigen::VectorXd taps;
  int support_a = 0;
  /// Lower bound on the number of factors kept from the infinite product.
  int product_depth = 24;
  /// Target truncation error of the infinite product.
  double tail_tol = 1e-9;

  /// The integer ceil(a); a is always an integer for the embedded families.
  int ceil_a() const { return support_a; }
};

/// Names accepted by make_family, canonical names first.
std::vector<std::string> family_names();

/// Builds a family from its name. `dbK` has K taps; `dbKt` is the
/// vanishing-moment alias (db2t == db4). Throws std::invalid_argument.
WaveletFamily make_family(std::string_view name);

/// Builds a family from explicit taps without validating them.
WaveletFamily make_family_from_taps(std::string name, Eigen::VectorXd taps);

struct FamilyDiagnostics
{
  double tap_sum_error = 0.0;        // |sum h - sqrt 2|
  double orthonormality_error = 0.0; // max_m |sum h_i h_{i+2m} - delta_m0|
  double m0_at_zero_error = 0.0;     // |m0(0) - 1|
  bool support_consistent = false;   // support_a == taps - 1

  bool ok() const
  {
    return support_consistent && tap_sum_error <= 1e-12 &&
           orthonormality_error <= 1e-10 && m0_at_zero_error <= 1e-12;
  }
};

FamilyDiagnostics diagnose(const WaveletFamily& family);

/// Throws std::invalid_argument naming the first violated invariant.
void validate(const WaveletFamily& family);

/// Low-pass symbol m0(xi) = 2^{-1/2} sum_k h_k e^{-i k xi}.
Complex m0(const WaveletFamily& family, double xi);

/// High-pass symbol m1(xi) = -e^{-i a xi} conj(m0(xi + pi)).
Complex m1(const WaveletFamily& family, double xi);

/// Number of product factors used for phi_hat at xi.
int product_depth(const WaveletFamily& family, double xi);

/// phi_hat(xi) = prod_{s>=1} m0(xi / 2^s), with the convention
/// g_hat(w) = int g(x) e^{-i w x} dx.
Complex scaling_fourier(const WaveletFamily& family, double xi);

/// psi_hat(xi) = m1(xi/2) phi_hat(xi/2).
Complex wavelet_fourier(const WaveletFamily& family, double xi);

/// Element of the reconstruction system: phi_{0,k} or psi_{j,k}.
struct BasisIndex
{
  enum class Kind { scaling, wavelet };

  Kind kind = Kind::scaling;
  int level = 0;
  long shift = 0;

  static BasisIndex scaling(long k) { return {Kind::scaling, 0, k}; }
  static BasisIndex wavelet(int j, long k) { return {Kind::wavelet, j, k}; }

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

std::string to_string(const BasisIndex& idx);

bool is_valid(const WaveletFamily& family, const BasisIndex& idx);

/// Fourier transform of phi_{0,k} or psi_{j,k} at omega:
/// 2^{-j/2} e^{-i omega k / 2^j} g_hat(omega / 2^j).
Complex basis_fourier(const WaveletFamily& family, const BasisIndex& idx, double omega);

/// Fourier transform of the dilated scaling function phi_{j,k} for any j >= 0.
Complex dilated_scaling_fourier(const WaveletFamily& family, int level, long shift, double omega);

/// Transforms of the first n basis elements at omega, in basis order.
/// Shares one phi_hat/psi_hat evaluation per level.
Eigen::VectorXcd basis_fourier_row(const WaveletFamily& family, long n, double omega);

// Ordering: scaling shifts -a+1..a-1, then wavelet levels 0,1,... in
// increasing shift. Positions are 1-based.
BasisIndex position_to_index(const WaveletFamily& family, long position);
long index_to_position(const WaveletFamily& family, const BasisIndex& idx);

/// Number of scaling shifts, 2a - 1.
long scaling_count(const WaveletFamily& family);

/// Number of wavelets at level j, (2^j + 1) a - 1.
long level_count(const WaveletFamily& family, int level);

/// N_R = 2^R a + (R + 1)(a - 1): all wavelets of levels 0..R-1.
long n_r(const WaveletFamily& family, int R);

struct FineScaleWindow
{
  long first = 0;
  long last = 0;
  long size() const { return last - first + 1; }
};

/// Shift window [A_{R,1}, A_{R,2}] such that T_{N_R} lies in
/// span{phi_{R,k} : A_{R,1} <= k <= A_{R,2}}. Requires R >= 1.
FineScaleWindow fine_scale_window(const WaveletFamily& family, int R);

/// phi and psi sampled on 2^{-levels} Z intersected with [0, a].
struct CascadeTable
{
  int levels = 0;
  int support_a = 0;
  Eigen::VectorXd phi;
  Eigen::VectorXd psi;

  double step() const { return 1.0 / static_cast<double>(1L << levels); }
  long samples_per_unit() const { return 1L << levels; }

  /// Value of phi_{j,k} (or psi_{j,k}) at x = m 2^{-levels}.
  double dilate(bool wavelet, int level, long shift, long m) const;
  double basis_value(const BasisIndex& idx, long m) const;
};

/// Time-domain cascade: exact values of phi at the integers, then the
/// refinement equation on successively finer dyadic grids.
CascadeTable cascade_evaluate(const WaveletFamily& family, int levels);

} // namespace gsw
