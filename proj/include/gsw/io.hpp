#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gsw/gs.hpp"
#include "gsw/sampling.hpp"
#include "gsw/ssr.hpp"

namespace gsw::io {

using json = nlohmann::ordered_json;

/// Malformed input file.
class FormatError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kVersion = "1.0.0";

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

/// CSV with a leading "# {json}" provenance line, then a header row.
struct CsvTable
{
  json provenance = json::object();
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const;
  double number(std::size_t row, const std::string& name) const;
};

void write_csv(std::ostream& os, const CsvTable& table);
CsvTable read_csv(std::istream& is);

// Sample vectors: columns l, re, im; provenance carries
// {epsilon, T1, T2, M, noise_norm, seed}.
CsvTable to_table(const SampleVector& v);
SampleVector samples_from_table(const CsvTable& t);
void write_samples(std::ostream& os, const SampleVector& v);
SampleVector read_samples(std::istream& is);

json to_json(const GsSolution& sol, const GsProblem& problem);
json to_json(const SamplingScheme& s);

/// Dense dump of U: columns i, j, l, re, im.
CsvTable matrix_table(const GsProblem& problem);

CsvTable to_table(const SsrCurve& curve);
SsrCurve curve_from_table(const CsvTable& t);

CsvTable to_table(const std::vector<BlowupRow>& rows);

} // namespace gsw::io
