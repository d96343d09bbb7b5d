#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gsw/wavelet.hpp"

// Cross-checks of the Fourier-domain code against the brute-force oracles.
// Every check is deterministic given its seed.

namespace gsw::verify {

struct CheckResult
{
  std::string name;
  bool passed = false;
  std::string detail;
};

CheckResult check_family(const WaveletFamily& family);

/// |m0(xi)|^2 + |m0(xi + pi)|^2 = 1 and phi_hat(xi) = m0(xi/2) phi_hat(xi/2).
CheckResult check_refinement(const WaveletFamily& family, std::uint64_t seed, int count = 200);

/// sum_{|l|<=L} |phi_hat(xi + 2 pi l)|^2 within tol of 1 for `count` random xi.
CheckResult check_partition_of_unity(const WaveletFamily& family, std::uint64_t seed, int count = 200,
                                     double tol = 1e-6);

/// Unit norm and shift orthogonality of the cascade scaling function.
CheckResult check_cascade(const WaveletFamily& family, int levels = 12, double tol = 1e-5);

/// position_to_index and index_to_position are inverse up to `limit`.
CheckResult check_ordering(const WaveletFamily& family, long limit = 10000);

/// Entries of U against trapezoid inner products of cascade values.
CheckResult check_entries(const WaveletFamily& family, long n = 16, int levels = 14, double tol = 1e-6);

CheckResult check_dft_identity(std::uint64_t seed, int count = 100, double tol = 1e-12);

CheckResult check_grochenig(std::uint64_t seed, int count = 100);

/// C_{N,M} nondecreasing in M and close to 1 for M >> N.
CheckResult check_cnm_limit(const WaveletFamily& family, long N);

/// Samples of f in T_N are recovered to 1e-8 kappa.
CheckResult check_perfectness(const WaveletFamily& family, std::uint64_t seed);

/// ||f - f_tilde|| <= theta ||f - Q_N f|| at M = Theta(N; theta) for
/// random decaying coefficients.
CheckResult check_quasi_optimality(std::uint64_t seed, int count = 20);

/// U*(U alpha - f_hat) = 0 relative to ||f_hat||.
CheckResult check_consistency(const WaveletFamily& family, std::uint64_t seed);

/// Pure noise of norm delta reconstructs to norm at most delta / sigma_min.
CheckResult check_noise_amplification(const WaveletFamily& family, std::uint64_t seed);

struct Options
{
  std::uint64_t seed = 20130521;
  /// Families for the per-family checks; defaults to haar, db4, db6, db8.
  std::vector<WaveletFamily> families;
};

std::vector<CheckResult> run_all(const Options& options);

/// One line per check, then a summary line.
void print_report(std::ostream& os, const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace gsw::verify
