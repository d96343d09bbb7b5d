// Acceptance run: one PASS/FAIL line per criterion, with the measured numbers.
// Usage: acceptance [criterion ...]   (default: all of 1..8)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "gsw/experiments.hpp"
#include "gsw/gs.hpp"
#include "gsw/ssr.hpp"
#include "gsw/verify.hpp"
#include "gsw/wavelet.hpp"

using namespace gsw;
using std::numbers::pi;

namespace {

struct Outcome
{
  bool passed = true;
  std::vector<std::string> lines;

  void note(const std::string& s) { lines.push_back(s); }
  void require(bool ok, const std::string& s)
  {
    passed = passed && ok;
    lines.push_back(std::string(ok ? "ok   " : "bad  ") + s);
  }
};

std::string fmt(const char* pattern, auto... args)
{
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

class Stopwatch
{
public:
  double seconds() const
  {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Theta(N_R) for each R against the expected value factor * 2^R.
void ssr_staircase(Outcome& out, const char* family_name, double epsilon, double theta, int r_min, int r_max,
                   long factor)
{
  const WaveletFamily f = make_family(family_name);
  const SamplingScheme s = default_scheme(f, epsilon);
  int r0 = r_max + 1;
  for (int R = r_max; R >= r_min; --R) {
    const long N = n_r(f, R);
    const SsrResult r = stable_sampling_rate({f, s, theta, N, 0});
    const long expected = factor << R;
    out.require(r.M_star == expected, fmt("%s eps=%.6g R=%d N=%ld: Theta=%ld expected %ld (C=%.6f)", family_name,
                                          epsilon, R, N, r.M_star, expected, r.sigma_min));
    if (r.M_star == expected && r0 == R + 1)
      r0 = R;
  }
  out.note(r0 <= r_max ? fmt("     %s: equality holds for every tested R >= %d", family_name, r0)
                       : fmt("     %s: equality fails at R = %d", family_name, r_max));
}

Outcome criterion_1()
{
  Outcome out;
  Stopwatch clock;
  const double theta = pi / 2.0 * (1.0 + 1e-9);
  const WaveletFamily haar = make_family("haar");
  for (double eps : {1.0, 0.5}) {
    const SamplingScheme s{eps, 0.0, 1.0};
    for (int R = 2; R <= 7; ++R) {
      const long N = n_r(haar, R);
      const SsrResult r = stable_sampling_rate({haar, s, theta, N, 0});
      const long expected = eps == 1.0 ? (1L << R) : (1L << (R + 1));
      out.require(r.M_star == expected,
                  fmt("haar eps=%g R=%d: Theta=%ld expected %ld (C=%.9f)", eps, R, r.M_star, expected, r.sigma_min));
    }
  }
  const double t = clock.seconds();
  out.require(t < 60.0, fmt("runtime %.1f s < 60 s", t));
  return out;
}

Outcome criterion_2()
{
  Outcome out;
  Stopwatch clock;
  ssr_staircase(out, "db4", 1.0 / 7.0, 1.0 / 0.684, 2, 6, 7);
  ssr_staircase(out, "db6", 1.0 / 13.0, 1.0 / 0.698, 2, 5, 13);
  const double t = clock.seconds();
  out.require(t < 600.0, fmt("runtime %.1f s < 600 s", t));
  return out;
}

Outcome criterion_3()
{
  Outcome out;
  struct Case
  {
    const char* family;
    double epsilon;
    double theta;
  };
  const int R = 7;
  for (const Case& c : {Case{"haar", 1.0, pi / 2.0 * (1.0 + 1e-9)}, Case{"db4", 1.0 / 7.0, 1.0 / 0.684},
                        Case{"db6", 1.0 / 13.0, 1.0 / 0.698}}) {
    const WaveletFamily f = make_family(c.family);
    const SsrCurve curve = ssr_curve(f, default_scheme(f, c.epsilon), c.theta, {n_r(f, R)});
    const SsrPoint& p = curve.points.back();
    const double deviation = std::abs(p.ratio - curve.predicted_ratio) / curve.predicted_ratio;
    out.require(deviation <= 0.05, fmt("%s R=%d N=%ld Theta=%ld ratio %.4f vs %.4f (%.2f%%)", c.family, R, p.N,
                                       p.M_star, p.ratio, curve.predicted_ratio, 100.0 * deviation));
  }
  return out;
}

bool is_haar_label(const ReferenceRow& r) { return r.label == "Haar"; }

Outcome criterion_4()
{
  Outcome out;
  Stopwatch clock;

  for (const PresetRow& row : table_preset(1, DbConvention::taps)) {
    if (!is_haar_label(row.reference))
      continue;
    const TableRowResult r = run_table_row(row.spec);
    const RowComparison c = compare(r, row.reference);
    out.require(c.within(2.0, 0.1),
                fmt("Haar (%ld,%ld,%g): err_fourier %.3g/%.3g (x%.2f), err_gs %.3g/%.3g (x%.2f), exponent %.3f/%.2f",
                    r.M, r.N, r.alpha, r.err_fourier, row.reference.err_fourier, c.fourier_ratio, r.err_gs,
                    row.reference.err_gs, c.gs_ratio, r.conv_exponent, row.reference.exponent.value_or(NAN)));
  }

  struct Scored
  {
    DbConvention convention;
    int matched = 0;
    int total = 0;
    double worst = 0.0; // largest |log ratio|
    std::vector<std::string> lines;
  };
  std::vector<Scored> scores;
  const auto printed = reference_rows(1);
  const int printed_db_rows = static_cast<int>(
      std::count_if(printed.begin(), printed.end(), [](const ReferenceRow& r) { return !is_haar_label(r); }));
  for (DbConvention conv : {DbConvention::taps, DbConvention::vanishing_moments}) {
    Scored s;
    s.convention = conv;
    for (const PresetRow& row : table_preset(1, conv)) {
      if (is_haar_label(row.reference))
        continue;
      ++s.total;
      const TableRowResult r = run_table_row(row.spec);
      const RowComparison c = compare(r, row.reference);
      const bool ok = c.within(2.0, std::numeric_limits<double>::infinity());
      s.matched += ok ? 1 : 0;
      s.worst = std::max({s.worst, std::abs(std::log(c.fourier_ratio)), std::abs(std::log(c.gs_ratio))});
      s.lines.push_back(fmt("%s -> %s (%ld,%ld,%g): err_fourier %.3g/%.3g (x%.2f), err_gs %.3g/%.3g (x%.2f)",
                            row.reference.label.c_str(), r.family.c_str(), r.M, r.N, r.alpha, r.err_fourier,
                            row.reference.err_fourier, c.fourier_ratio, r.err_gs, row.reference.err_gs,
                            c.gs_ratio));
    }
    scores.push_back(std::move(s));
  }
  const Scored* best = nullptr;
  for (const Scored& s : scores)
    if (!best || s.matched > best->matched || (s.matched == best->matched && s.worst < best->worst))
      best = &s;
  out.note(fmt("DB naming convention: %s (%d/%d printed DB rows resolve, %d within factor 2)",
               to_string(best->convention), best->total, printed_db_rows, best->matched));
  for (const Scored& s : scores)
    if (&s != best)
      out.note(fmt("  other convention %s: %d/%d rows resolve, %d within factor 2", to_string(s.convention), s.total,
                   printed_db_rows, s.matched));
  for (std::size_t i = 0; i < best->lines.size(); ++i)
    out.note(best->lines[i]);
  out.require(best->total == printed_db_rows && best->matched == best->total,
              fmt("all DB rows within factor 2 under %s", to_string(best->convention)));

  const double t = clock.seconds();
  out.require(t < 900.0, fmt("runtime %.1f s < 900 s", t));
  return out;
}

Outcome criterion_5()
{
  Outcome out;
  for (const PresetRow& row : table_preset(2, DbConvention::taps)) {
    if (!is_haar_label(row.reference))
      continue;
    const TableRowResult r = run_table_row(row.spec);
    TableRowSpec clean = row.spec;
    clean.noise = 0.0;
    const TableRowResult r0 = run_table_row(clean);
    const double ratio = r.err_gs / r.noise;
    out.require(ratio >= 0.5 && ratio <= 2.0, fmt("Haar (%ld,%ld) noise %.0e: err_gs %.3g = %.2f x noise (printed %.3g)",
                                                   r.M, r.N, r.noise, r.err_gs, ratio, row.reference.err_gs));
    const double bound = pi / 2.0 * r.noise + r0.err_gs;
    out.require(r.err_gs <= bound, fmt("  err_gs %.4g <= pi/2 noise + err_noiseless = %.4g", r.err_gs, bound));
  }
  return out;
}

Outcome criterion_6()
{
  Outcome out;
  for (const PresetRow& row : table_preset(3, DbConvention::taps)) {
    const TableRowResult r = run_table_row(row.spec);
    const std::string line =
        fmt("db4 M=%ld N=%ld (%s) noise %.0e: err_gs %.3g (printed %.3g), sigma_min %.3g%s", r.M, r.N,
            row.reference.column.c_str(), r.noise, r.err_gs, row.reference.err_gs, r.sigma_min,
            r.rank_deficient ? ", rank deficient" : "");
    if (r.M != 934) {
      out.note("     " + line);
      continue;
    }
    if (row.reference.column == "c1" && r.noise > 0.0)
      out.require(r.err_gs >= 1e3, line + " >= 1e3");
    else if (row.reference.column == "c")
      out.require(r.err_gs <= 1e-4, line + " <= 1e-4");
    else
      out.note("     " + line);
  }
  return out;
}

void blowup_report(Outcome& out, const char* family, double eps, double c, bool asserted)
{
  const WaveletFamily f = make_family(family);
  const auto rows = blowup_experiment(f, default_scheme(f, eps), c, {4, 5, 6, 7, 8});
  const std::string prefix = asserted ? "" : "     ";
  for (const auto& r : rows)
    out.note(prefix + fmt("%s eps=%g c=%g R=%d N=%ld M=%ld sigma_min=%.3e log10 kappa=%.3f", family, eps, c, r.R, r.N,
                          r.M, r.sigma_min, r.log10_kappa));
  const BlowupFit fit = fit_blowup(rows, rows.size());
  const std::string summary = fmt("%s eps=%g c=%g: fit finite=%d slope=%.4g R^2=%.4f top growth=%.3g", family, eps, c,
                                  fit.finite ? 1 : 0, fit.slope, fit.r_squared, fit.top_growth);
  if (asserted)
    out.require(fit.exponential() && fit.top_growth >= 10.0, summary);
  else
    out.note(prefix + summary + " (informational)");
}

Outcome criterion_7()
{
  Outcome out;
  blowup_report(out, "haar", 1.0, 0.9, true);
  blowup_report(out, "haar", 0.5, 1.8, false);
  blowup_report(out, "db4", 1.0 / 7.0, 6.65, false);
  return out;
}

Outcome criterion_8()
{
  Outcome out;
  const std::uint64_t seed = 20130521;
  const WaveletFamily haar = make_family("haar");
  const WaveletFamily db4 = make_family("db4");
  std::vector<verify::CheckResult> checks;
  checks.push_back(verify::check_dft_identity(seed, 100, 1e-12));
  checks.push_back(verify::check_grochenig(seed, 100));
  for (long N : {16L, 64L})
    checks.push_back(verify::check_cnm_limit(haar, N));
  for (long N : {n_r(db4, 1), n_r(db4, 4)})
    checks.push_back(verify::check_cnm_limit(db4, N));
  for (const auto& f : {haar, db4})
    checks.push_back(verify::check_perfectness(f, seed));
  checks.push_back(verify::check_quasi_optimality(seed, 20));
  for (const auto& f : {haar, db4})
    checks.push_back(verify::check_entries(f, 16, 16, 1e-6));
  for (const char* name : {"haar", "db4", "db6", "db8"})
    checks.push_back(verify::check_partition_of_unity(make_family(name), seed, 200, 1e-6));
  for (const auto& c : checks)
    out.require(c.passed, c.name + ": " + c.detail);
  return out;
}

const std::map<int, std::pair<const char*, std::function<Outcome()>>>& criteria()
{
  static const std::map<int, std::pair<const char*, std::function<Outcome()>>> table = {
      {1, {"SSR exactness, Haar", criterion_1}},
      {2, {"SSR exactness, db4 and db6", criterion_2}},
      {3, {"asymptotic sampling ratio", criterion_3}},
      {4, {"first table replication", criterion_4}},
      {5, {"second table replication", criterion_5}},
      {6, {"third table instability", criterion_6}},
      {7, {"exponential blow-up, Haar eps=1 c=0.9", criterion_7}},
      {8, {"property suite", criterion_8}},
  };
  return table;
}

} // namespace

int main(int argc, char** argv)
{
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const int k = std::atoi(argv[i]);
    if (!criteria().contains(k)) {
      std::cerr << "unknown criterion '" << argv[i] << "'\n";
      return 2;
    }
    selected.push_back(k);
  }
  if (selected.empty())
    for (const auto& [k, _] : criteria())
      selected.push_back(k);

  std::vector<std::pair<int, bool>> summary;
  for (int k : selected) {
    const auto& [title, run] = criteria().at(k);
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.note(std::string("exception: ") + e.what());
    }
    for (const auto& line : o.lines)
      std::cout << "    " << line << '\n';
    std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << k << ": " << title << '\n' << std::flush;
    summary.emplace_back(k, o.passed);
  }

  int passed = 0;
  for (const auto& [k, ok] : summary)
    passed += ok ? 1 : 0;
  if (summary.size() > 1) {
    std::cout << "\n";
    for (const auto& [k, ok] : summary)
      std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << k << ": " << criteria().at(k).first << '\n';
    std::cout << passed << "/" << summary.size() << " criteria passed\n";
  }
  return passed == static_cast<int>(summary.size()) ? 0 : 1;
}
