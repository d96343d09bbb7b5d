#include "gsw/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace gsw::io {

namespace {

std::vector<std::string> split(const std::string& line)
{
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ','))
    out.push_back(cell);
  if (!line.empty() && line.back() == ',')
    out.emplace_back();
  return out;
}

double parse_double(const std::string& s)
{
  double v = 0.0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (begin != end && *begin == '+')
    ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end)
    throw FormatError("not a number: '" + s + "'");
  return v;
}

template <typename T>
T get_field(const json& j, const char* key)
{
  if (!j.contains(key))
    throw FormatError(std::string("provenance header is missing '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("provenance field '") + key + "': " + e.what());
  }
}

} // namespace

std::string format_double(double v)
{
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc())
    throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, ptr);
}

std::size_t CsvTable::column(const std::string& name) const
{
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name)
      return i;
  throw FormatError("missing column '" + name + "'");
}

double CsvTable::number(std::size_t row, const std::string& name) const
{
  return parse_double(rows.at(row).at(column(name)));
}

void write_csv(std::ostream& os, const CsvTable& table)
{
  os << "# " << table.provenance.dump() << '\n';
  for (std::size_t i = 0; i < table.header.size(); ++i)
    os << (i ? "," : "") << table.header[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << row[i];
    os << '\n';
  }
}

CsvTable read_csv(std::istream& is)
{
  CsvTable t;
  std::string line;
  auto next_line = [&]() -> bool {
    if (!std::getline(is, line))
      return false;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    return true;
  };

  if (!next_line())
    throw FormatError("empty file");
  if (line.rfind("# ", 0) == 0) {
    try {
      t.provenance = json::parse(line.substr(2));
    } catch (const json::exception& e) {
      throw FormatError(std::string("bad provenance header: ") + e.what());
    }
    if (!next_line())
      throw FormatError("missing header row");
  }
  t.header = split(line);
  if (t.header.empty())
    throw FormatError("empty header row");
  while (next_line()) {
    if (line.empty())
      continue;
    auto cells = split(line);
    if (cells.size() != t.header.size())
      throw FormatError("row " + std::to_string(t.rows.size() + 1) + " has " + std::to_string(cells.size()) +
                        " cells, expected " + std::to_string(t.header.size()));
    t.rows.push_back(std::move(cells));
  }
  return t;
}

json to_json(const SamplingScheme& s)
{
  return {{"epsilon", s.epsilon}, {"T1", s.T1}, {"T2", s.T2}};
}

CsvTable to_table(const SampleVector& v)
{
  CsvTable t;
  t.provenance = {{"epsilon", v.scheme.epsilon},
                  {"T1", v.scheme.T1},
                  {"T2", v.scheme.T2},
                  {"M", v.index.M},
                  {"noise_norm", v.noise_norm},
                  {"seed", v.seed ? json(*v.seed) : json(nullptr)},
                  {"version", kVersion}};
  t.header = {"l", "re", "im"};
  for (long i = 0; i < v.index.M; ++i)
    t.rows.push_back({std::to_string(v.index.at(i)), format_double(v.values[i].real()),
                      format_double(v.values[i].imag())});
  return t;
}

SampleVector samples_from_table(const CsvTable& t)
{
  const auto& p = t.provenance;
  SampleVector v;
  v.scheme.epsilon = get_field<double>(p, "epsilon");
  v.scheme.T1 = get_field<double>(p, "T1");
  v.scheme.T2 = get_field<double>(p, "T2");
  v.index.M = get_field<long>(p, "M");
  v.noise_norm = get_field<double>(p, "noise_norm");
  if (p.contains("seed") && !p.at("seed").is_null())
    v.seed = get_field<std::uint64_t>(p, "seed");
  try {
    validate(v.scheme);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  if (v.index.M < 1 || static_cast<long>(t.rows.size()) != v.index.M)
    throw FormatError("expected " + std::to_string(v.index.M) + " sample rows, found " +
                      std::to_string(t.rows.size()));

  const std::size_t cl = t.column("l"), cre = t.column("re"), cim = t.column("im");
  v.values.resize(v.index.M);
  for (long i = 0; i < v.index.M; ++i) {
    const auto& row = t.rows[static_cast<std::size_t>(i)];
    if (static_cast<long>(parse_double(row[cl])) != v.index.at(i))
      throw FormatError("row " + std::to_string(i + 1) + " has l = " + row[cl] + ", expected " +
                        std::to_string(v.index.at(i)));
    v.values[i] = {parse_double(row[cre]), parse_double(row[cim])};
  }
  return v;
}

void write_samples(std::ostream& os, const SampleVector& v) { write_csv(os, to_table(v)); }

SampleVector read_samples(std::istream& is) { return samples_from_table(read_csv(is)); }

json to_json(const GsSolution& sol, const GsProblem& problem)
{
  json alpha = json::array();
  for (const auto& a : sol.alpha)
    alpha.push_back({a.real(), a.imag()});
  return {{"N", problem.N},
          {"M", problem.M},
          {"epsilon", problem.scheme.epsilon},
          {"family", problem.family.name},
          {"sigma_min", sol.sigma_min},
          {"kappa", sol.kappa},
          {"residual", sol.residual},
          {"method", to_string(sol.method)},
          {"alpha", std::move(alpha)}};
}

CsvTable matrix_table(const GsProblem& problem)
{
  CsvTable t;
  t.provenance = {{"family", problem.family.name}, {"N", problem.N}, {"M", problem.M},
                  {"scheme", to_json(problem.scheme)}, {"version", kVersion}};
  t.header = {"i", "j", "l", "re", "im"};
  const SampleIndexSet rows = problem.rows();
  for (Eigen::Index j = 0; j < problem.U.cols(); ++j)
    for (Eigen::Index i = 0; i < problem.U.rows(); ++i)
      t.rows.push_back({std::to_string(i + 1), std::to_string(j + 1), std::to_string(rows.at(i)),
                        format_double(problem.U(i, j).real()), format_double(problem.U(i, j).imag())});
  return t;
}

CsvTable to_table(const SsrCurve& curve)
{
  CsvTable t;
  t.provenance = {{"theta", curve.theta}, {"epsilon", curve.epsilon},
                  {"predicted_ratio", curve.predicted_ratio}, {"version", kVersion}};
  t.header = {"N", "theta", "M_star", "sigma_min_at_M_star", "ratio"};
  for (const auto& p : curve.points)
    t.rows.push_back({std::to_string(p.N), format_double(curve.theta), std::to_string(p.M_star),
                      format_double(p.sigma_min), format_double(p.ratio)});
  return t;
}

SsrCurve curve_from_table(const CsvTable& t)
{
  SsrCurve c;
  c.theta = get_field<double>(t.provenance, "theta");
  c.epsilon = get_field<double>(t.provenance, "epsilon");
  c.predicted_ratio = get_field<double>(t.provenance, "predicted_ratio");
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    c.points.push_back({static_cast<long>(t.number(i, "N")), static_cast<long>(t.number(i, "M_star")),
                        t.number(i, "sigma_min_at_M_star"), t.number(i, "ratio")});
  return c;
}

CsvTable to_table(const std::vector<BlowupRow>& rows)
{
  CsvTable t;
  t.provenance = {{"version", kVersion}};
  t.header = {"R", "N_R", "M", "sigma_min", "log10_kappa"};
  for (const auto& r : rows)
    t.rows.push_back({std::to_string(r.R), std::to_string(r.N), std::to_string(r.M), format_double(r.sigma_min),
                      format_double(r.log10_kappa)});
  return t;
}

} // namespace gsw::io
