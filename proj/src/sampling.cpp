#include "gsw/sampling.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "gsw/parallel.hpp"

namespace gsw {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSupportSlack = 1e-12;

struct SampleVisitor
{
  const SamplingScheme& scheme;
  long l;
  double* quadrature_error = nullptr;

  double t() const { return kTwoPi * scheme.epsilon * static_cast<double>(l); }

  Complex operator()(const WaveletCombo& m) const
  {
    const Eigen::VectorXcd row = basis_fourier_row(m.family, m.beta.size(), -t());
    return std::sqrt(scheme.epsilon) * (row.transpose() * m.beta.cast<Complex>()).value();
  }

  // int_a^b e^{i t x} dx in closed form.
  Complex operator()(const PiecewiseConstant& m) const
  {
    const double w = t();
    Complex s = 0.0;
    for (std::size_t i = 0; i + 1 < m.breakpoints.size(); ++i) {
      const double a = m.breakpoints[i];
      const double b = m.breakpoints[i + 1];
      Complex piece;
      if (w == 0.0)
        piece = b - a;
      else
        piece = (std::polar(1.0, w * b) - std::polar(1.0, w * a)) / Complex(0.0, w);
      s += m.values[i] * piece;
    }
    return std::sqrt(scheme.epsilon) * s;
  }

  Complex operator()(const Callable& m) const
  {
    const double w = t();
    Eigen::VectorXcd integrand(m.grid.size);
    for (Eigen::Index i = 0; i < m.grid.size; ++i)
      integrand[i] = m.values[i] * std::polar(1.0, w * m.grid.at(i));
    const auto q = oracle::trapezoid(integrand, m.grid.step);
    if (quadrature_error)
      *quadrature_error = std::sqrt(scheme.epsilon) * q.error_estimate;
    return std::sqrt(scheme.epsilon) * q.value;
  }
};

} // namespace

double max_epsilon(const WaveletFamily& family) { return 1.0 / (3.0 * family.ceil_a() - 2.0); }

SamplingScheme default_scheme(const WaveletFamily& family, std::optional<double> epsilon)
{
  SamplingScheme s;
  s.T1 = family.ceil_a() - 1.0;
  s.T2 = 2.0 * family.ceil_a() - 1.0;
  s.epsilon = epsilon.value_or(max_epsilon(family));
  validate(s, family);
  return s;
}

void validate(const SamplingScheme& scheme)
{
  if (!(scheme.epsilon > 0.0) || !std::isfinite(scheme.epsilon))
    throw std::invalid_argument("sampling density epsilon must be positive");
  if (scheme.T1 < 0.0 || !(scheme.T2 > 0.0))
    throw std::invalid_argument("sampling window needs T1 >= 0 and T2 > 0");
  const double nyquist = 1.0 / (scheme.T1 + scheme.T2);
  if (scheme.epsilon > nyquist * (1.0 + kSupportSlack))
    throw std::invalid_argument("epsilon = " + std::to_string(scheme.epsilon) +
                                " exceeds the Nyquist rate 1/(T1+T2) = " + std::to_string(nyquist));
}

void validate(const SamplingScheme& scheme, const WaveletFamily& family)
{
  validate(scheme);
  const int a = family.ceil_a();
  if (scheme.T1 < a - 1.0 || scheme.T2 < 2.0 * a - 1.0)
    throw std::invalid_argument("sampling window [-T1, T2] must contain [-(a-1), 2a-1] for " + family.name);
}

void validate(const FunctionModel& model, const SamplingScheme& scheme)
{
  const double lo = -scheme.T1 - kSupportSlack;
  const double hi = scheme.T2 + kSupportSlack;
  if (const auto* combo = std::get_if<WaveletCombo>(&model)) {
    validate(scheme, combo->family);
  } else if (const auto* pc = std::get_if<PiecewiseConstant>(&model)) {
    if (pc->breakpoints.size() < 2 || pc->values.size() + 1 != pc->breakpoints.size())
      throw std::invalid_argument("piecewise-constant model needs one value per interval");
    for (std::size_t i = 1; i < pc->breakpoints.size(); ++i)
      if (!(pc->breakpoints[i] > pc->breakpoints[i - 1]))
        throw std::invalid_argument("piecewise-constant breakpoints must be strictly increasing");
    if (pc->breakpoints.front() < lo || pc->breakpoints.back() > hi)
      throw std::invalid_argument("piecewise-constant model is not supported in [-T1, T2]");
  } else {
    const auto& c = std::get<Callable>(model);
    if (c.grid.size < 2 || c.values.size() != c.grid.size || !(c.grid.step > 0.0))
      throw std::invalid_argument("callable model needs values on an increasing grid");
    if (c.grid.start < lo || c.grid.stop() > hi)
      throw std::invalid_argument("callable model grid is not inside [-T1, T2]");
  }
}

Complex sample_inner_product(const SamplingScheme& scheme, const FunctionModel& model, long l)
{
  validate(model, scheme);
  return std::visit(SampleVisitor{scheme, l}, model);
}

SampleVector synthesize_samples(const SamplingScheme& scheme, const FunctionModel& model, long M)
{
  if (M < 1)
    throw std::invalid_argument("synthesize_samples: M must be positive");
  validate(model, scheme);

  SampleVector out;
  out.scheme = scheme;
  out.index = SampleIndexSet{M};
  out.values.resize(M);
  std::vector<double> errors(static_cast<std::size_t>(M), 0.0);
  parallel_for(static_cast<std::size_t>(M), [&](std::size_t i) {
    const long l = out.index.at(static_cast<long>(i));
    out.values[static_cast<Eigen::Index>(i)] = std::visit(SampleVisitor{scheme, l, &errors[i]}, model);
  });
  for (double e : errors)
    out.quadrature_error = std::max(out.quadrature_error, e);
  return out;
}

SampleVector add_noise(const SampleVector& v, double level, std::uint64_t seed)
{
  if (!(level >= 0.0))
    throw std::invalid_argument("add_noise: level must be non-negative");
  SampleVector out = v;
  out.seed = seed;
  if (level == 0.0)
    return out;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd noise(v.values.size());
  for (auto& z : noise) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = {re, im};
  }
  noise *= level / noise.norm();
  out.values += noise;
  out.noise_norm = level;
  return out;
}

double truncated_fourier_error(const WaveletCombo& model, const SampleVector& samples)
{
  const double total = model.beta.squaredNorm();
  const double captured = samples.values.squaredNorm();
  return std::sqrt(std::max(0.0, total - captured));
}

double truncated_fourier_error(const SamplingScheme& scheme, const WaveletCombo& model, long M)
{
  return truncated_fourier_error(model, synthesize_samples(scheme, model, M));
}

Complex fourier_partial_sum(const SampleVector& samples, double x)
{
  const auto& s = samples.scheme;
  if (x < s.window_lower() || x > s.window_upper())
    return 0.0;
  Complex acc = 0.0;
  for (long i = 0; i < samples.index.M; ++i) {
    const double l = static_cast<double>(samples.index.at(i));
    acc += samples.values[i] * std::polar(1.0, -kTwoPi * s.epsilon * l * x);
  }
  return std::sqrt(s.epsilon) * acc;
}

Eigen::VectorXcd fourier_partial_sum(const SampleVector& samples, const oracle::UniformGrid& grid)
{
  Eigen::VectorXcd out(grid.size);
  parallel_for(static_cast<std::size_t>(grid.size), [&](std::size_t i) {
    out[static_cast<Eigen::Index>(i)] = fourier_partial_sum(samples, grid.at(static_cast<Eigen::Index>(i)));
  });
  return out;
}

} // namespace gsw
