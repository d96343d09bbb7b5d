#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "gsw/oracle.hpp"
#include "gsw/wavelet.hpp"

namespace gsw {

/// Uniform Fourier sampling at density epsilon for functions supported in
/// [-T1, T2]. The sampling exponentials live on a window of length 1/epsilon.
struct SamplingScheme
{
  double epsilon = 1.0;
  double T1 = 0.0;
  double T2 = 1.0;

  double window_lower() const { return -T1 / (epsilon * (T1 + T2)); }
  double window_upper() const { return T2 / (epsilon * (T1 + T2)); }
};

/// Largest density allowed by the minimal window of a family, 1/(3a - 2).
double max_epsilon(const WaveletFamily& family);

/// Minimal window T1 = a - 1, T2 = 2a - 1 at the given density
/// (default: max_epsilon).
SamplingScheme default_scheme(const WaveletFamily& family, std::optional<double> epsilon = std::nullopt);

/// Throws std::invalid_argument on a non-positive density or a density
/// above the Nyquist rate 1/(T1 + T2).
void validate(const SamplingScheme& scheme);

/// Additionally requires the window to contain every reconstruction element.
void validate(const SamplingScheme& scheme, const WaveletFamily& family);

/// Frequencies l = -floor(M/2) .. ceil(M/2) - 1, in increasing order.
struct SampleIndexSet
{
  long M = 0;

  long first() const { return -(M / 2); }
  long last() const { return (M + 1) / 2 - 1; }
  long at(long i) const { return first() + i; }
  long row_of(long l) const { return l - first(); }
  bool contains(long l) const { return l >= first() && l <= last(); }
};

/// f = sum_p beta_p varphi_p in basis order.
struct WaveletCombo
{
  WaveletFamily family;
  Eigen::VectorXd beta;
};

/// f = values[i] on [breakpoints[i], breakpoints[i+1]).
struct PiecewiseConstant
{
  std::vector<double> breakpoints;
  std::vector<double> values;
};

/// f known through samples on a uniform grid.
struct Callable
{
  oracle::UniformGrid grid;
  Eigen::VectorXcd values;
};

using FunctionModel = std::variant<WaveletCombo, PiecewiseConstant, Callable>;

/// Throws std::invalid_argument if the model violates its own invariants or
/// is not supported inside [-T1, T2].
void validate(const FunctionModel& model, const SamplingScheme& scheme);

/// Fourier samples <f, s_l>, l over a SampleIndexSet.
struct SampleVector
{
  SamplingScheme scheme;
  SampleIndexSet index;
  Eigen::VectorXcd values;
  double noise_norm = 0.0;
  std::optional<std::uint64_t> seed;
  /// Largest quadrature error estimate, zero for closed-form models.
  double quadrature_error = 0.0;
};

/// <f, s_l> = sqrt(eps) f_hat(-2 pi eps l).
Complex sample_inner_product(const SamplingScheme& scheme, const FunctionModel& model, long l);

SampleVector synthesize_samples(const SamplingScheme& scheme, const FunctionModel& model, long M);

/// Adds a seeded complex Gaussian vector rescaled to Euclidean norm `level`.
SampleVector add_noise(const SampleVector& v, double level, std::uint64_t seed);

/// ||f - P_M f|| for a wavelet combination, from ||f||^2 = sum beta^2.
double truncated_fourier_error(const SamplingScheme& scheme, const WaveletCombo& model, long M);

/// Same quantity from already synthesized noiseless samples.
double truncated_fourier_error(const WaveletCombo& model, const SampleVector& samples);

/// The truncated Fourier series f_M(x) = sum_l v_l sqrt(eps) e^{-2 pi i eps l x}.
Complex fourier_partial_sum(const SampleVector& samples, double x);

/// f_M on a grid; O(size * M) direct summation.
Eigen::VectorXcd fourier_partial_sum(const SampleVector& samples, const oracle::UniformGrid& grid);

} // namespace gsw
