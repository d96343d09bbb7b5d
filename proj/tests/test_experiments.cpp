#include <doctest.h>

#include <cmath>

#include "gsw/experiments.hpp"
#include "gsw/gs.hpp"
#include "gsw/ssr.hpp"

using namespace gsw;

TEST_CASE("power-law coefficients")
{
  const Eigen::VectorXd b = power_law_coefficients(4, 2.0);
  CHECK(b[0] == 1.0);
  CHECK(b[3] == doctest::Approx(1.0 / 16.0));
  CHECK_THROWS_AS(power_law_coefficients(0, 2.0), std::invalid_argument);
}

TEST_CASE("compliant sizes")
{
  const WaveletFamily db4 = make_family("db4");
  CHECK(compliant_n(db4, 1.0 / 7.0, 934) == 400);
  CHECK(compliant_n(db4, 1.0 / 7.0, 1834) == 786);
  CHECK(compliant_n(make_family("db6"), 1.0 / 13.0, 906) == 348);
  CHECK(compliant_n(make_family("haar"), 1.0, 512) == 512);
}

TEST_CASE("printed labels under both naming conventions")
{
  CHECK(resolve_label("Haar", DbConvention::taps) == "haar");
  CHECK(resolve_label("DB 4", DbConvention::taps) == "db4");
  CHECK(make_family(*resolve_label("DB 2", DbConvention::vanishing_moments)).taps == make_family("db4").taps);
  CHECK(make_family(*resolve_label("DB 3", DbConvention::vanishing_moments)).taps == make_family("db6").taps);
  CHECK(make_family(*resolve_label("DB 2", DbConvention::taps)).taps == make_family("haar").taps);
  CHECK_FALSE(resolve_label("DB 3", DbConvention::taps).has_value());
  CHECK_FALSE(resolve_label("Symlet", DbConvention::taps).has_value());
}

TEST_CASE("presets")
{
  for (int table : {1, 2, 3})
    CHECK_FALSE(reference_rows(table).empty());
  CHECK_THROWS_AS(reference_rows(4), std::invalid_argument);
  for (const auto& row : table_preset(3, DbConvention::taps)) {
    CHECK(row.spec.family == "db4");
    CHECK(row.spec.policy ==
          (row.reference.column == "c1" ? IllPosedPolicy::basic_solution : IllPosedPolicy::reject));
  }
  for (const auto& row : table_preset(1, DbConvention::taps))
    CHECK(make_family(row.spec.family).taps == make_family("haar").taps);
}

TEST_CASE("row comparison")
{
  TableRowResult ours;
  ours.err_fourier = 2e-3;
  ours.err_gs = 1e-6;
  ours.N = 256;
  ours.conv_exponent = 2.5;
  ReferenceRow printed;
  printed.err_fourier = 1e-3;
  printed.err_gs = 1.5e-6;
  printed.exponent = 2.55;
  const RowComparison c = compare(ours, printed);
  CHECK(c.fourier_ratio == doctest::Approx(2.0));
  CHECK(c.within(2.0, 0.1));
  CHECK_FALSE(c.within(1.5, 0.1));
  CHECK_FALSE(c.within(2.0, 0.01));
}

TEST_CASE("reconstruction error stays within theta of the best approximation")
{
  const WaveletFamily db4 = make_family("db4");
  const SamplingScheme s = default_scheme(db4);
  const double theta = 2.0;
  const long N = 60;
  const long M = stable_sampling_rate({db4, s, theta, N, 0}).M_star;
  const Eigen::VectorXd beta = power_law_coefficients(1500, 2.0);
  const SampleVector v = synthesize_samples(s, WaveletCombo{db4, beta}, M);
  const GsSolution sol = solve(assemble(db4, s, N, M), v);
  const double tail = best_approx_error(beta, N);
  CHECK(reconstruction_error(beta, sol.alpha) <= theta * tail);
  CHECK((sol.alpha - beta.head(N).cast<Complex>()).norm() <= theta * tail);
}

TEST_CASE("cascade expansion of a single scaling function")
{
  const WaveletFamily haar = make_family("haar");
  const CascadeTable t = cascade_evaluate(haar, 6);
  const Eigen::VectorXcd v = evaluate_expansion(haar, t, Eigen::VectorXcd::Unit(3, 0), 1, 63);
  CHECK((v.array() - 1.0).abs().maxCoeff() < 1e-14);
  const Eigen::VectorXcd w = evaluate_expansion(haar, t, Eigen::VectorXcd::Unit(3, 1), 1, 31);
  CHECK((w.array() - 1.0).abs().maxCoeff() < 1e-14);
}

TEST_CASE("jump overshoot")
{
  const oracle::UniformGrid grid{0.0, 0.01, 101};
  Eigen::VectorXd v(101);
  for (int i = 0; i <= 100; ++i)
    v[i] = i < 50 ? 0.0 : 1.0;
  v[51] = 1.1;
  CHECK(jump_overshoot(grid, v, 0.5, 0.0, 1.0, 0.05) == doctest::Approx(0.1));
}

TEST_CASE("box-spikes demo")
{
  const DemoSignal d = make_demo("box-spikes");
  CHECK(d.family.name == "haar");
  CHECK(d.M == 2048);
  CHECK(d.N == 512);
  CHECK_THROWS_AS(make_demo("nothing"), std::invalid_argument);

  const SampleVector v = synthesize_samples(d.scheme, d.model, d.M);
  const GsSolution sol = solve(assemble(d.family, d.scheme, d.N, d.M), v);
  CHECK(sol.kappa < 1.2);

  const int levels = 12;
  const CascadeTable t = cascade_evaluate(d.family, levels);
  const oracle::UniformGrid grid{0.0, t.step(), (Eigen::Index{1} << levels) + 1};
  const Eigen::VectorXd gs = evaluate_expansion(d.family, t, sol.alpha, 0, grid.size - 1).real();
  const Eigen::VectorXd fourier = fourier_partial_sum(v, grid).real();
  const Eigen::VectorXd exact = demo_values(d, grid);
  const double left = exact[static_cast<Eigen::Index>(0.6 / t.step())];
  const double right = exact[static_cast<Eigen::Index>(0.7 / t.step())];
  CHECK(jump_overshoot(grid, gs, 2.0 / 3.0, left, right, 0.025) < 0.10);
  CHECK(jump_overshoot(grid, fourier, 2.0 / 3.0, left, right, 0.025) > 0.08);
}

TEST_CASE("the box-spikes density is stable at theta 1.2")
{
  const DemoSignal d = make_demo("box-spikes");
  CHECK(stable_sampling_rate({d.family, d.scheme, 1.2, d.N, 0}).M_star <= d.M);
}
