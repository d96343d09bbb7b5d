#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "gsw/gs.hpp"
#include "gsw/oracle.hpp"
#include "gsw/sampling.hpp"
#include "gsw/wavelet.hpp"

namespace gsw {

/// Length of the test expansions f = sum beta_j varphi_j.
inline constexpr long kExpansionTerms = 3000;

/// beta_j = j^{-alpha}, j = 1..count.
Eigen::VectorXd power_law_coefficients(long count, double alpha);

/// floor(M eps ceil(a)), robust to the rounding of eps = 1/q.
long compliant_n(const WaveletFamily& family, double epsilon, long M);

struct TableRowSpec
{
  std::string family = "haar";
  std::optional<double> epsilon; // default: max_epsilon(family)
  long M = 0;
  long N = 0; // 0 selects compliant_n
  double alpha = 3.0;
  double noise = 0.0;
  std::uint64_t seed = 1;
  long terms = kExpansionTerms;
  IllPosedPolicy policy = IllPosedPolicy::reject;
};

struct TableRowResult
{
  std::string family;
  double epsilon = 0.0;
  long M = 0;
  long N = 0;
  double alpha = 0.0;
  double noise = 0.0;
  double err_fourier = 0.0; // ||f - f_M|| from the same (possibly noisy) samples
  double err_gs = 0.0;
  double conv_exponent = 0.0; // -log(err_gs) / log(N)
  double sigma_min = 0.0;
  std::string method;
  bool rank_deficient = false;
};

/// Synthesizes samples of the power-law expansion, adds noise and runs both
/// reconstructions. Requires alpha > 1.
TableRowResult run_table_row(const TableRowSpec& spec);

/// How a printed "DB k" label maps to a family name.
enum class DbConvention {
  taps,             ///< DB k has k taps
  vanishing_moments ///< DB k has k vanishing moments (2k taps)
};

const char* to_string(DbConvention c);

/// Family name for a printed label ("Haar", "DB 4"), or nullopt when the
/// convention has no such family.
std::optional<std::string> resolve_label(std::string_view label, DbConvention convention);

/// A printed table row together with what it takes to rerun it.
struct ReferenceRow
{
  int table = 0;
  std::string label;
  long M = 0;
  long N = 0;
  double alpha = 0.0;
  double noise = 0.0;
  /// Only for the third table: which ratio produced N ("c" or "c1").
  std::string column;
  double err_fourier = 0.0;
  double err_gs = 0.0;
  std::optional<double> exponent;
};

std::vector<ReferenceRow> reference_rows(int table);

struct PresetRow
{
  ReferenceRow reference;
  TableRowSpec spec;
};

/// Runnable rows of table 1, 2 or 3 under a naming convention; rows whose
/// label does not resolve are dropped.
std::vector<PresetRow> table_preset(int table, DbConvention convention, std::uint64_t seed = 1);

struct RowComparison
{
  double fourier_ratio = 0.0; // ours / printed
  double gs_ratio = 0.0;
  std::optional<double> exponent_delta;

  /// Both ratios within [1/factor, factor] and the exponent within tol.
  bool within(double factor, double exponent_tol) const;
};

RowComparison compare(const TableRowResult& ours, const ReferenceRow& printed);

/// Built-in signals for the reconstruct command.
struct DemoSignal
{
  std::string name;
  WaveletFamily family;
  SamplingScheme scheme;
  FunctionModel model;
  long M = 0;
  long N = 0;
};

std::vector<std::string> demo_names();

/// "box-spikes" or "bandlimited". Throws std::invalid_argument.
DemoSignal make_demo(std::string_view name);

/// Exact values of a demo signal on a grid (midpoint value at jumps).
Eigen::VectorXd demo_values(const DemoSignal& demo, const oracle::UniformGrid& grid);

/// sum_p alpha_p varphi_p at x = m 2^{-levels}, m = m_first..m_last, using
/// cascade values. Requires every used level to be at most table.levels.
Eigen::VectorXcd evaluate_expansion(const WaveletFamily& family, const CascadeTable& table,
                                    const Eigen::VectorXcd& alpha, long m_first, long m_last);

/// Overshoot of `values` past a jump from `left` to `right` at x0, relative
/// to |right - left|, over grid points within `half_width` of x0.
double jump_overshoot(const oracle::UniformGrid& grid, const Eigen::VectorXd& values, double x0, double left,
                      double right, double half_width);

} // namespace gsw
