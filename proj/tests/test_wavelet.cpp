#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gsw/oracle.hpp"
#include "gsw/verify.hpp"
#include "gsw/wavelet.hpp"

using namespace gsw;
using std::numbers::pi;

namespace {

const Complex I{0.0, 1.0};

Complex haar_phi_hat(double xi) { return (1.0 - std::polar(1.0, -xi)) / (I * xi); }

Complex haar_psi_hat(double xi)
{
  const Complex h = 1.0 - std::polar(1.0, -0.5 * xi);
  return h * h / (I * xi);
}

// Coefficients one level finer after a two-scale filter.
Eigen::VectorXd upsample(const Eigen::VectorXd& c, const Eigen::VectorXd& filter)
{
  Eigen::VectorXd out = Eigen::VectorXd::Zero(2 * c.size() + filter.size() - 2);
  for (Eigen::Index k = 0; k < c.size(); ++k)
    for (Eigen::Index n = 0; n < filter.size(); ++n)
      out[2 * k + n] += c[k] * filter[n];
  return out;
}

} // namespace

TEST_CASE("embedded families satisfy the filter invariants")
{
  for (const auto& name : family_names()) {
    const WaveletFamily f = make_family(name);
    CAPTURE(name);
    CHECK(diagnose(f).ok());
    CHECK_NOTHROW(validate(f));
    CHECK(f.support_a == f.taps.size() - 1);
    CHECK(std::abs(m0(f, 0.0) - 1.0) < 1e-14);
    CHECK(std::abs(m0(f, pi)) < 1e-12);
  }
}

TEST_CASE("family aliases and unknown names")
{
  CHECK(make_family("db2t").taps == make_family("db4").taps);
  CHECK(make_family("db1t").taps == make_family("haar").taps);
  CHECK(make_family("db3t").taps == make_family("db6").taps);
  CHECK_THROWS_AS(make_family("db5"), std::invalid_argument);
}

TEST_CASE("a tampered tap is caught by validation")
{
  WaveletFamily f = make_family("db4");
  f.taps[1] += 1e-4;
  CHECK_FALSE(diagnose(f).ok());
  CHECK_THROWS_AS(validate(f), std::invalid_argument);
  CHECK_FALSE(verify::check_family(f).passed);
}

TEST_CASE("Haar transforms match their closed forms")
{
  const WaveletFamily haar = make_family("haar");
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-200.0, 200.0);
  for (int i = 0; i < 200; ++i) {
    const double xi = u(rng);
    CHECK(std::abs(scaling_fourier(haar, xi) - haar_phi_hat(xi)) < 1e-10);
    CHECK(std::abs(wavelet_fourier(haar, xi) - haar_psi_hat(xi)) < 1e-10);
  }
  CHECK(scaling_fourier(haar, 0.0) == Complex(1.0));
  // The smallest |phi_hat| on [-pi, pi] is 2/pi, at the ends.
  CHECK(std::abs(std::abs(scaling_fourier(haar, pi)) - 2.0 / pi) < 1e-12);
  CHECK(std::abs(scaling_fourier(haar, 2.0 * pi)) < 1e-12);
}

TEST_CASE("db4 wavelet transform agrees with cascade quadrature")
{
  const WaveletFamily db4 = make_family("db4");
  const CascadeTable t = cascade_evaluate(db4, 14);
  const double h = t.step();
  for (double omega : {-9.0, -2.5, 0.0, 0.7, 3.1, 12.0}) {
    Eigen::VectorXcd v(t.psi.size());
    for (Eigen::Index m = 0; m < v.size(); ++m)
      v[m] = t.psi[m] * std::polar(1.0, -omega * static_cast<double>(m) * h);
    const Complex q = oracle::trapezoid(v, h).value;
    CAPTURE(omega);
    CHECK(std::abs(q - wavelet_fourier(db4, omega)) < 1e-6);
  }
}

TEST_CASE("dilated and shifted elements")
{
  const WaveletFamily db6 = make_family("db6");
  const double omega = 3.7;
  const BasisIndex idx = BasisIndex::wavelet(2, 5);
  const Complex expect = 0.5 * std::polar(1.0, -omega * 5.0 / 4.0) * wavelet_fourier(db6, omega / 4.0);
  CHECK(std::abs(basis_fourier(db6, idx, omega) - expect) < 1e-14);
  CHECK(std::abs(dilated_scaling_fourier(db6, 0, -2, omega) - basis_fourier(db6, BasisIndex::scaling(-2), omega)) <
        1e-14);
  CHECK_THROWS_AS(basis_fourier(db6, BasisIndex::scaling(5), omega), std::invalid_argument);
  CHECK_THROWS_AS(basis_fourier(db6, BasisIndex::wavelet(1, -5), omega), std::invalid_argument);
}

TEST_CASE("row evaluation equals elementwise evaluation")
{
  const WaveletFamily db4 = make_family("db4");
  const long n = n_r(db4, 4);
  for (double omega : {-40.0, -0.3, 0.0, 5.5}) {
    const Eigen::VectorXcd row = basis_fourier_row(db4, n, omega);
    REQUIRE(row.size() == n);
    double worst = 0.0;
    for (long p = 1; p <= n; ++p)
      worst = std::max(worst, std::abs(row[p - 1] - basis_fourier(db4, position_to_index(db4, p), omega)));
    CHECK(worst < 1e-13);
  }
}

TEST_CASE("basis ordering")
{
  const WaveletFamily haar = make_family("haar");
  const WaveletFamily db4 = make_family("db4");
  CHECK(n_r(haar, 3) == 8);
  CHECK(n_r(db4, 0) == 5);
  CHECK(n_r(db4, 2) == 18);
  CHECK(scaling_count(db4) == 5);
  CHECK(level_count(db4, 1) == 8);
  CHECK(position_to_index(db4, 1) == BasisIndex::scaling(-2));
  CHECK(position_to_index(db4, 5) == BasisIndex::scaling(2));
  CHECK(position_to_index(db4, 6) == BasisIndex::wavelet(0, -2));
  CHECK(position_to_index(haar, 1) == BasisIndex::scaling(0));
  CHECK(position_to_index(haar, 2) == BasisIndex::wavelet(0, 0));
  CHECK(position_to_index(haar, 3) == BasisIndex::wavelet(1, 0));
  CHECK_THROWS_AS(position_to_index(db4, 0), std::invalid_argument);
  CHECK_THROWS_AS(index_to_position(db4, BasisIndex::scaling(3)), std::invalid_argument);
  for (const char* name : {"haar", "db4", "db6"})
    CHECK(verify::check_ordering(make_family(name), 10000).passed);
}

TEST_CASE("fine-scale window")
{
  const WaveletFamily db4 = make_family("db4");
  const FineScaleWindow w = fine_scale_window(db4, 1);
  CHECK(w.first == -6);
  CHECK(w.last == 9);
  CHECK_THROWS_AS(fine_scale_window(db4, 0), std::invalid_argument);
  const FineScaleWindow h = fine_scale_window(make_family("haar"), 3);
  CHECK(h.first == 0);
  CHECK(h.last == 7);
}

TEST_CASE("T_{N_R} lies in the span of the fine-scale window")
{
  // Push every element of T_{N_R} down to level R with the two-scale filters
  // and compare transforms.
  const WaveletFamily f = make_family("db4");
  const int R = 3;
  const long a = f.ceil_a();
  const FineScaleWindow w = fine_scale_window(f, R);
  Eigen::VectorXd g(f.taps.size());
  for (Eigen::Index k = 0; k < g.size(); ++k)
    g[k] = (k % 2 == 0 ? 1.0 : -1.0) * f.taps[a - k];

  for (long p = 1; p <= n_r(f, R); ++p) {
    const BasisIndex idx = position_to_index(f, p);
    Eigen::VectorXd c = Eigen::VectorXd::Ones(1);
    long first = idx.shift;
    int level = idx.level;
    if (idx.kind == BasisIndex::Kind::wavelet) {
      c = upsample(c, g);
      first *= 2;
      ++level;
    }
    while (level < R) {
      c = upsample(c, f.taps);
      first *= 2;
      ++level;
    }
    CAPTURE(p);
    REQUIRE(first >= w.first);
    REQUIRE(first + c.size() - 1 <= w.last);
    for (double omega : {-7.0, 0.4, 11.0}) {
      Complex s = 0.0;
      for (Eigen::Index k = 0; k < c.size(); ++k)
        s += c[k] * dilated_scaling_fourier(f, R, first + k, omega);
      CHECK(std::abs(s - basis_fourier(f, idx, omega)) < 1e-10);
    }
  }
}

TEST_CASE("cascade values")
{
  const CascadeTable haar = cascade_evaluate(make_family("haar"), 4);
  CHECK(haar.phi[0] == doctest::Approx(0.5));
  CHECK(haar.phi[16] == doctest::Approx(0.5));
  for (int m = 1; m < 16; ++m)
    CHECK(haar.phi[m] == doctest::Approx(1.0));
  CHECK(haar.psi[4] == doctest::Approx(1.0));
  CHECK(haar.psi[8] == doctest::Approx(0.0));
  CHECK(haar.psi[12] == doctest::Approx(-1.0));

  // Integer shifts of phi sum to one.
  const WaveletFamily db4 = make_family("db4");
  const CascadeTable t = cascade_evaluate(db4, 10);
  const long unit = t.samples_per_unit();
  for (long m = 0; m < unit; m += 37) {
    double s = 0.0;
    for (long k = 0; k < 3; ++k)
      s += t.phi[m + k * unit];
    CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(t.dilate(false, 0, 0, -1) == 0.0);
  CHECK(t.dilate(false, 0, 0, 3 * unit + 1) == 0.0);
  CHECK(t.dilate(true, 2, 1, unit / 4 + 7) == doctest::Approx(2.0 * t.psi[28]));
  CHECK_THROWS_AS(cascade_evaluate(db4, 0), std::invalid_argument);

  for (const char* name : {"db4", "db6"})
    CHECK(verify::check_cascade(make_family(name), 12).passed);
}

TEST_CASE("frequency-domain identities")
{
  for (const char* name : {"haar", "db4"}) {
    const WaveletFamily f = make_family(name);
    CHECK(verify::check_refinement(f, 3).passed);
    CHECK(verify::check_partition_of_unity(f, 5, 40).passed);
  }
}
