// gsw: command-line front end for generalized-sampling wavelet experiments.
//
// Exit codes: 0 success, 1 computational failure (SSR cap, ill-posed system,
// failed check), 2 invalid arguments, 3 malformed input file.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gsw/experiments.hpp"
#include "gsw/gs.hpp"
#include "gsw/io.hpp"
#include "gsw/sampling.hpp"
#include "gsw/ssr.hpp"
#include "gsw/verify.hpp"

namespace {

using gsw::io::json;

enum Exit { kOk = 0, kFailure = 1, kInvalid = 2, kMalformed = 3 };

// Accepts decimals, "p/q" and "pi" factors: "1/13", "pi/2", "1/0.684".
double parse_number(const std::string& text)
{
  auto atom = [&](const std::string& s) -> double {
    if (s == "pi")
      return std::numbers::pi;
    if (s.size() > 2 && s.substr(0, 2) == "pi")
      throw std::invalid_argument("cannot parse number '" + text + "'");
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse number '" + text + "'");
    }
    if (used != s.size())
      throw std::invalid_argument("cannot parse number '" + text + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos)
    return atom(text);
  const double den = atom(text.substr(slash + 1));
  if (den == 0.0)
    throw std::invalid_argument("zero denominator in '" + text + "'");
  return atom(text.substr(0, slash)) / den;
}

// Writes to the named file, or stdout for "" and "-".
class Output
{
public:
  explicit Output(const std::string& path)
  {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
  std::ofstream file_;
};

json header(const std::string& command, json config)
{
  json h = json::object();
  h["command"] = command;
  h["config"] = std::move(config);
  h["version"] = gsw::io::kVersion;
  return h;
}

gsw::SamplingScheme scheme_for(const gsw::WaveletFamily& family, const std::string& epsilon)
{
  if (epsilon.empty())
    return gsw::default_scheme(family);
  return gsw::default_scheme(family, parse_number(epsilon));
}

// ---- ssr -------------------------------------------------------------------

struct SsrArgs
{
  std::string family = "haar";
  std::string epsilon;
  std::string theta;
  int rmin = 2;
  int rmax = 7;
  bool all_n = false;
  long cap = 0;
  std::string out;
};

int run_ssr(const SsrArgs& a)
{
  const gsw::WaveletFamily family = gsw::make_family(a.family);
  const gsw::SamplingScheme scheme = scheme_for(family, a.epsilon);
  const double theta = parse_number(a.theta);
  if (a.rmin < 0 || a.rmax < a.rmin)
    throw std::invalid_argument("need 0 <= rmin <= rmax");

  std::vector<long> Ns;
  if (a.all_n) {
    for (long N = 1; N <= gsw::n_r(family, a.rmax); ++N)
      Ns.push_back(N);
  } else {
    Ns = gsw::level_sizes(family, a.rmin, a.rmax);
  }
  const gsw::SsrCurve curve = gsw::ssr_curve(family, scheme, theta, Ns, a.cap);

  auto table = gsw::io::to_table(curve);
  json config = {{"family", family.name}, {"epsilon", scheme.epsilon}, {"theta", theta},
                 {"rmin", a.rmin},        {"rmax", a.rmax},           {"all_n", a.all_n},
                 {"cap", a.cap}};
  json prov = header("ssr", config);
  prov.update(table.provenance);
  table.provenance = prov;
  Output out(a.out);
  gsw::io::write_csv(out.stream(), table);
  return kOk;
}

// ---- table -----------------------------------------------------------------

struct TableArgs
{
  int preset = 0;
  std::string convention = "best";
  bool check = false;
  std::string family = "haar";
  std::string epsilon;
  long M = 0;
  long N = 0;
  double alpha = 3.0;
  double noise = 0.0;
  std::uint64_t seed = 1;
  std::string policy = "reject";
  std::string out;
};

struct TableRun
{
  std::vector<gsw::PresetRow> rows;
  std::vector<gsw::TableRowResult> results;
  gsw::DbConvention convention = gsw::DbConvention::taps;
};

TableRun run_preset(int table, gsw::DbConvention convention, std::uint64_t seed)
{
  TableRun run;
  run.convention = convention;
  run.rows = gsw::table_preset(table, convention, seed);
  for (const auto& r : run.rows) {
    try {
      run.results.push_back(gsw::run_table_row(r.spec));
    } catch (const gsw::IllPosedError& e) {
      // Recorded as an infinite error so the row cannot match.
      gsw::TableRowResult bad;
      bad.family = r.spec.family;
      bad.M = r.spec.M;
      bad.N = r.spec.N;
      bad.alpha = r.spec.alpha;
      bad.noise = r.spec.noise;
      bad.err_fourier = bad.err_gs = bad.conv_exponent = std::numeric_limits<double>::infinity();
      bad.sigma_min = e.sigma_min();
      bad.method = "ill-posed";
      run.results.push_back(bad);
    }
  }
  return run;
}

// Rows of a DB label that land within a factor of 2 of the printed errors.
int db_matches(const TableRun& run)
{
  int n = 0;
  for (std::size_t i = 0; i < run.rows.size(); ++i)
    if (run.rows[i].reference.label != "Haar" &&
        gsw::compare(run.results[i], run.rows[i].reference).within(2.0, 1e300))
      ++n;
  return n;
}

int run_table(const TableArgs& a)
{
  gsw::io::CsvTable t;
  t.header = {"M", "N", "alpha", "err_fourier", "err_gs", "conv_exponent", "noise", "family", "epsilon", "sigma_min"};
  auto add_row = [&](const gsw::TableRowResult& r) {
    using gsw::io::format_double;
    t.rows.push_back({std::to_string(r.M), std::to_string(r.N), format_double(r.alpha), format_double(r.err_fourier),
                      format_double(r.err_gs), format_double(r.conv_exponent), format_double(r.noise), r.family,
                      format_double(r.epsilon), format_double(r.sigma_min)});
  };

  json config;
  bool all_within = true;
  if (a.preset != 0) {
    TableRun run;
    if (a.convention == "best") {
      TableRun taps = run_preset(a.preset, gsw::DbConvention::taps, a.seed);
      TableRun moments = run_preset(a.preset, gsw::DbConvention::vanishing_moments, a.seed);
      run = db_matches(moments) > db_matches(taps) ? std::move(moments) : std::move(taps);
    } else if (a.convention == "taps") {
      run = run_preset(a.preset, gsw::DbConvention::taps, a.seed);
    } else if (a.convention == "vanishing-moments") {
      run = run_preset(a.preset, gsw::DbConvention::vanishing_moments, a.seed);
    } else {
      throw std::invalid_argument("convention must be taps, vanishing-moments or best");
    }
    for (const auto& r : run.results)
      add_row(r);
    config = {{"preset", a.preset}, {"convention", gsw::to_string(run.convention)}, {"seed", a.seed}};

    if (a.check) {
      std::cerr << "table " << a.preset << " vs printed values (convention: " << gsw::to_string(run.convention)
                << ")\n";
      for (std::size_t i = 0; i < run.rows.size(); ++i) {
        const auto& ref = run.rows[i].reference;
        const auto c = gsw::compare(run.results[i], ref);
        const bool ok = c.within(2.0, 0.1);
        all_within = all_within && ok;
        std::cerr << (ok ? "  ok    " : "  off   ") << ref.label << " (" << ref.M << "," << ref.N << ","
                  << ref.alpha << ")" << (ref.column.empty() ? "" : " N=M/" + ref.column)
                  << " noise=" << ref.noise << "  err_fourier x" << c.fourier_ratio << "  err_gs x"
                  << c.gs_ratio;
        if (c.exponent_delta)
          std::cerr << "  exponent " << (*c.exponent_delta >= 0 ? "+" : "") << *c.exponent_delta;
        std::cerr << '\n';
      }
    }
  } else {
    if (a.M < 1)
      throw std::invalid_argument("give --preset or --M");
    gsw::TableRowSpec spec;
    spec.family = a.family;
    if (!a.epsilon.empty())
      spec.epsilon = parse_number(a.epsilon);
    spec.M = a.M;
    spec.N = a.N;
    spec.alpha = a.alpha;
    spec.noise = a.noise;
    spec.seed = a.seed;
    if (a.policy == "basic")
      spec.policy = gsw::IllPosedPolicy::basic_solution;
    else if (a.policy != "reject")
      throw std::invalid_argument("policy must be reject or basic");
    add_row(gsw::run_table_row(spec));
    config = {{"family", a.family}, {"epsilon", a.epsilon}, {"M", a.M}, {"N", a.N}, {"alpha", a.alpha},
              {"noise", a.noise},   {"seed", a.seed},       {"policy", a.policy}};
  }
  t.provenance = header("table", config);
  Output out(a.out);
  gsw::io::write_csv(out.stream(), t);
  return a.check && !all_within ? kFailure : kOk;
}

// ---- reconstruct -----------------------------------------------------------

struct ReconstructArgs
{
  std::string samples;
  std::string demo;
  std::string family = "haar";
  long N = 0;
  int grid_levels = 14;
  std::string policy = "reject";
  std::string out;
};

int run_reconstruct(const ReconstructArgs& a)
{
  if (a.samples.empty() == a.demo.empty())
    throw std::invalid_argument("give exactly one of --samples and --demo");
  if (a.grid_levels < 4 || a.grid_levels > 18)
    throw std::invalid_argument("--grid-levels must be in [4, 18]");

  std::optional<gsw::DemoSignal> demo;
  gsw::WaveletFamily family;
  gsw::SampleVector samples;
  long N = a.N;
  if (!a.demo.empty()) {
    demo = gsw::make_demo(a.demo);
    family = demo->family;
    samples = gsw::synthesize_samples(demo->scheme, demo->model, demo->M);
    if (N == 0)
      N = demo->N;
  } else {
    std::ifstream in(a.samples);
    if (!in)
      throw gsw::io::FormatError("cannot read '" + a.samples + "'");
    samples = gsw::io::read_samples(in);
    family = gsw::make_family(a.family);
    if (N == 0)
      throw std::invalid_argument("--N is required with --samples");
  }

  const gsw::GsProblem problem = gsw::assemble(family, samples.scheme, N, samples.index.M);
  const gsw::GsSolution sol = gsw::solve(
      problem, samples, a.policy == "basic" ? gsw::IllPosedPolicy::basic_solution : gsw::IllPosedPolicy::reject);

  json doc = gsw::io::to_json(sol, problem);
  json prov = header("reconstruct", {{"samples", a.samples}, {"demo", a.demo}, {"family", family.name},
                                     {"N", N}, {"grid_levels", a.grid_levels}, {"policy", a.policy}});

  // Dense grid over the sampling window.
  const gsw::CascadeTable table = gsw::cascade_evaluate(family, a.grid_levels);
  const long unit = table.samples_per_unit();
  const long m_first = static_cast<long>(std::floor(-samples.scheme.T1)) * unit;
  const long m_last = static_cast<long>(std::ceil(samples.scheme.T2)) * unit;
  const gsw::oracle::UniformGrid grid{static_cast<double>(m_first) * table.step(), table.step(),
                                      m_last - m_first + 1};
  const Eigen::VectorXcd gs_values = gsw::evaluate_expansion(family, table, sol.alpha, m_first, m_last);
  const Eigen::VectorXcd fourier_values = gsw::fourier_partial_sum(samples, grid);

  gsw::io::CsvTable t;
  t.header = {"x", "gs_re", "gs_im", "fourier_re", "fourier_im"};
  Eigen::VectorXd exact;
  if (demo) {
    exact = gsw::demo_values(*demo, grid);
    t.header.push_back("exact");
    if (demo->name == "box-spikes") {
      // Overshoot at the jump from 1/2 to 0 at x = 2/3.
      const double x0 = 2.0 / 3.0, w = 0.025;
      doc["diagnostics"] = {
          {"overshoot_gs", gsw::jump_overshoot(grid, gs_values.real(), x0, 0.5, 0.0, w)},
          {"overshoot_fourier", gsw::jump_overshoot(grid, fourier_values.real(), x0, 0.5, 0.0, w)},
          {"kappa_below_1_2", sol.kappa < 1.2}};
    }
  }
  for (Eigen::Index i = 0; i < grid.size; ++i) {
    using gsw::io::format_double;
    std::vector<std::string> row = {format_double(grid.at(i)), format_double(gs_values[i].real()),
                                    format_double(gs_values[i].imag()), format_double(fourier_values[i].real()),
                                    format_double(fourier_values[i].imag())};
    if (demo)
      row.push_back(format_double(exact[i]));
    t.rows.push_back(std::move(row));
  }
  t.provenance = prov;

  doc["provenance"] = prov;
  if (a.out.empty() || a.out == "-") {
    std::cout << doc.dump(2) << '\n';
  } else {
    Output js(a.out + ".json");
    js.stream() << doc.dump(2) << '\n';
    Output csv(a.out + ".csv");
    gsw::io::write_csv(csv.stream(), t);
  }
  return kOk;
}

// ---- blowup ----------------------------------------------------------------

struct BlowupArgs
{
  std::string family = "haar";
  std::string epsilon;
  double c = 0.9;
  int rmin = 4;
  int rmax = 8;
  std::string out;
};

int run_blowup(const BlowupArgs& a)
{
  const gsw::WaveletFamily family = gsw::make_family(a.family);
  const gsw::SamplingScheme scheme = scheme_for(family, a.epsilon);
  if (a.rmin < 0 || a.rmax < a.rmin)
    throw std::invalid_argument("need 0 <= rmin <= rmax");
  std::vector<int> Rs;
  for (int R = a.rmin; R <= a.rmax; ++R)
    Rs.push_back(R);
  const auto rows = gsw::blowup_experiment(family, scheme, a.c, Rs);
  const gsw::BlowupFit fit = gsw::fit_blowup(rows);

  auto t = gsw::io::to_table(rows);
  t.provenance = header("blowup", {{"family", family.name}, {"epsilon", scheme.epsilon}, {"c", a.c},
                                   {"rmin", a.rmin}, {"rmax", a.rmax}});
  Output out(a.out);
  gsw::io::write_csv(out.stream(), t);
  std::cerr << "fit of ln kappa against 2^R: ";
  if (fit.finite)
    std::cerr << "slope " << fit.slope << ", R^2 " << fit.r_squared << ", top growth " << fit.top_growth
              << (fit.exponential() ? " (exponential)\n" : " (not exponential)\n");
  else
    std::cerr << "kappa is infinite in the fitted range (M < N_R)\n";
  return kOk;
}

// ---- synth -----------------------------------------------------------------

struct SynthArgs
{
  std::string family = "haar";
  std::string epsilon;
  std::string demo;
  long M = 256;
  double alpha = 3.0;
  long terms = gsw::kExpansionTerms;
  double noise = 0.0;
  std::uint64_t seed = 1;
  std::string out;
};

int run_synth(const SynthArgs& a)
{
  gsw::SampleVector v;
  json config;
  if (!a.demo.empty()) {
    const gsw::DemoSignal d = gsw::make_demo(a.demo);
    v = gsw::synthesize_samples(d.scheme, d.model, a.M);
    config = {{"demo", a.demo}, {"M", a.M}};
  } else {
    if (!(a.alpha > 1.0))
      throw std::invalid_argument("--alpha must exceed 1");
    const gsw::WaveletFamily family = gsw::make_family(a.family);
    const gsw::SamplingScheme scheme = scheme_for(family, a.epsilon);
    const gsw::WaveletCombo f{family, gsw::power_law_coefficients(a.terms, a.alpha)};
    v = gsw::synthesize_samples(scheme, f, a.M);
    config = {{"family", family.name}, {"M", a.M}, {"alpha", a.alpha}, {"terms", a.terms}};
  }
  if (a.noise > 0.0)
    v = gsw::add_noise(v, a.noise, a.seed);
  config["noise"] = a.noise;
  config["seed"] = a.seed;

  auto t = gsw::io::to_table(v);
  json prov = header("synth", config);
  prov.update(t.provenance);
  t.provenance = prov;
  Output out(a.out);
  gsw::io::write_csv(out.stream(), t);
  return kOk;
}

// ---- matrix ----------------------------------------------------------------

struct MatrixArgs
{
  std::string family = "haar";
  std::string epsilon;
  long N = 4;
  long M = 4;
  std::string out;
};

int run_matrix(const MatrixArgs& a)
{
  const gsw::WaveletFamily family = gsw::make_family(a.family);
  const gsw::GsProblem p = gsw::assemble(family, scheme_for(family, a.epsilon), a.N, a.M);
  auto t = gsw::io::matrix_table(p);
  json prov = header("matrix", {{"family", family.name}, {"N", a.N}, {"M", a.M}});
  prov.update(t.provenance);
  t.provenance = prov;
  Output out(a.out);
  gsw::io::write_csv(out.stream(), t);
  return kOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs
{
  std::uint64_t seed = 20130521;
  std::string tamper;
};

int run_verify(const VerifyArgs& a)
{
  gsw::verify::Options o;
  o.seed = a.seed;
  for (const char* n : {"haar", "db4", "db6", "db8"})
    o.families.push_back(gsw::make_family(n));
  if (!a.tamper.empty()) {
    // FAMILY:INDEX:DELTA adds DELTA to one tap of FAMILY.
    std::istringstream ss(a.tamper);
    std::string name, index, delta;
    if (!std::getline(ss, name, ':') || !std::getline(ss, index, ':') || !std::getline(ss, delta))
      throw std::invalid_argument("--tamper expects FAMILY:INDEX:DELTA");
    for (auto& f : o.families)
      if (f.name == gsw::make_family(name).name) {
        const long k = std::stol(index);
        if (k < 0 || k >= f.taps.size())
          throw std::invalid_argument("--tamper index out of range");
        f.taps[k] += parse_number(delta);
        f.name += "*";
      }
  }
  const auto results = gsw::verify::run_all(o);
  gsw::verify::print_report(std::cout, results);
  return gsw::verify::all_passed(results) ? kOk : kFailure;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Generalized sampling: wavelet coefficients from Fourier samples"};
  app.require_subcommand(1);

  SsrArgs ssr;
  auto* c_ssr = app.add_subcommand("ssr", "Stable sampling rate at the level sizes N_R");
  c_ssr->add_option("--family", ssr.family, "Wavelet family");
  c_ssr->add_option("--epsilon", ssr.epsilon, "Sampling density, e.g. 1/13 (default: largest allowed)");
  c_ssr->add_option("--theta", ssr.theta, "Threshold theta > 1, e.g. pi/2 or 1/0.684")->required();
  c_ssr->add_option("--rmin", ssr.rmin, "Smallest level R");
  c_ssr->add_option("--rmax", ssr.rmax, "Largest level R");
  c_ssr->add_flag("--all-n", ssr.all_n, "Every N from 1 to N_rmax instead of the N_R");
  c_ssr->add_option("--cap", ssr.cap, "Largest M searched (default 16 N)");
  c_ssr->add_option("--out", ssr.out, "Output CSV (default stdout)");

  TableArgs tab;
  auto* c_tab = app.add_subcommand("table", "Reconstruction errors for power-law expansions");
  c_tab->add_option("--preset", tab.preset, "Rerun printed table 1, 2 or 3")->check(CLI::Range(1, 3));
  c_tab->add_option("--convention", tab.convention, "DB naming for presets: taps, vanishing-moments or best");
  c_tab->add_flag("--check", tab.check, "Compare presets with the printed values (report on stderr)");
  c_tab->add_option("--family", tab.family, "Wavelet family");
  c_tab->add_option("--epsilon", tab.epsilon, "Sampling density");
  c_tab->add_option("--M", tab.M, "Number of Fourier samples");
  c_tab->add_option("--N", tab.N, "Number of wavelet coefficients (default floor(M eps a))");
  c_tab->add_option("--alpha", tab.alpha, "Coefficient decay beta_j = j^-alpha");
  c_tab->add_option("--noise", tab.noise, "Euclidean norm of the sample noise");
  c_tab->add_option("--seed", tab.seed, "Noise seed");
  c_tab->add_option("--policy", tab.policy, "Singular systems: reject or basic");
  c_tab->add_option("--out", tab.out, "Output CSV (default stdout)");

  ReconstructArgs rec;
  auto* c_rec = app.add_subcommand("reconstruct", "Reconstruct from a sample file or a built-in demo");
  c_rec->add_option("--samples", rec.samples, "Sample CSV written by synth");
  c_rec->add_option("--demo", rec.demo, "box-spikes or bandlimited");
  c_rec->add_option("--family", rec.family, "Wavelet family (with --samples)");
  c_rec->add_option("--N", rec.N, "Number of wavelet coefficients");
  c_rec->add_option("--grid-levels", rec.grid_levels, "Evaluation grid step 2^-levels");
  c_rec->add_option("--policy", rec.policy, "Singular systems: reject or basic");
  c_rec->add_option("--out", rec.out, "Output prefix for PREFIX.json and PREFIX.csv (default: JSON on stdout)");

  BlowupArgs blow;
  auto* c_blow = app.add_subcommand("blowup", "Condition number below the critical sampling ratio");
  c_blow->add_option("--family", blow.family, "Wavelet family");
  c_blow->add_option("--epsilon", blow.epsilon, "Sampling density");
  c_blow->add_option("--c", blow.c, "Ratio M = floor(c 2^R), 0 < c < 1/epsilon");
  c_blow->add_option("--rmin", blow.rmin, "Smallest level R");
  c_blow->add_option("--rmax", blow.rmax, "Largest level R");
  c_blow->add_option("--out", blow.out, "Output CSV (default stdout)");

  SynthArgs syn;
  auto* c_syn = app.add_subcommand("synth", "Write Fourier samples of a test function");
  c_syn->add_option("--family", syn.family, "Wavelet family of the power-law expansion");
  c_syn->add_option("--epsilon", syn.epsilon, "Sampling density");
  c_syn->add_option("--demo", syn.demo, "Sample a demo signal instead");
  c_syn->add_option("--M", syn.M, "Number of samples");
  c_syn->add_option("--alpha", syn.alpha, "Coefficient decay");
  c_syn->add_option("--terms", syn.terms, "Number of expansion terms");
  c_syn->add_option("--noise", syn.noise, "Noise norm");
  c_syn->add_option("--seed", syn.seed, "Noise seed");
  c_syn->add_option("--out", syn.out, "Output CSV (default stdout)");

  MatrixArgs mat;
  auto* c_mat = app.add_subcommand("matrix", "Dump the sampling matrix U");
  c_mat->add_option("--family", mat.family, "Wavelet family");
  c_mat->add_option("--epsilon", mat.epsilon, "Sampling density");
  c_mat->add_option("--N", mat.N, "Columns");
  c_mat->add_option("--M", mat.M, "Rows");
  c_mat->add_option("--out", mat.out, "Output CSV (default stdout)");

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify", "Run the oracle cross-checks");
  c_ver->add_option("--seed", ver.seed, "Seed for the randomized checks");
  c_ver->add_option("--tamper", ver.tamper, "FAMILY:INDEX:DELTA perturbs one filter tap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*c_ssr)
      return run_ssr(ssr);
    if (*c_tab)
      return run_table(tab);
    if (*c_rec)
      return run_reconstruct(rec);
    if (*c_blow)
      return run_blowup(blow);
    if (*c_syn)
      return run_synth(syn);
    if (*c_mat)
      return run_matrix(mat);
    if (*c_ver)
      return run_verify(ver);
  } catch (const gsw::io::FormatError& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return kMalformed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kInvalid;
  } catch (const gsw::SsrCapError& e) {
    std::cerr << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}
