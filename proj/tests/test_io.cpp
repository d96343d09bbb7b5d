#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "gsw/io.hpp"

using namespace gsw;
using namespace gsw::io;

namespace {

SampleVector sample_vector(long M)
{
  SampleVector v;
  v.scheme = {0.25, 1.0, 3.0};
  v.index = {M};
  v.values.resize(M);
  std::mt19937_64 rng(2);
  std::normal_distribution<double> n(0.0, 1.0);
  for (auto& x : v.values) {
    const double re = n(rng);
    x = {re, n(rng) * 1e-17};
  }
  v.noise_norm = 1e-5;
  v.seed = 42;
  return v;
}

SampleVector parse(const std::string& text)
{
  std::istringstream is(text);
  return read_samples(is);
}

} // namespace

TEST_CASE("shortest round-trip formatting")
{
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng) * std::pow(10.0, 40.0 * u(rng));
    CHECK(std::stod(format_double(x)) == x);
  }
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
}

TEST_CASE("sample files round-trip exactly")
{
  for (long M : {1L, 4L, 7L}) {
    const SampleVector v = sample_vector(M);
    std::ostringstream os;
    write_samples(os, v);
    CHECK(os.str().rfind("# {", 0) == 0);
    const SampleVector w = parse(os.str());
    CHECK(w.values == v.values);
    CHECK(w.index.M == M);
    CHECK(w.scheme.epsilon == v.scheme.epsilon);
    CHECK(w.scheme.T1 == v.scheme.T1);
    CHECK(w.noise_norm == v.noise_norm);
    CHECK(w.seed == v.seed);
  }
}

TEST_CASE("malformed sample files")
{
  const std::string head = R"(# {"epsilon":0.5,"T1":0,"T2":1,"M":2,"noise_norm":0})";
  CHECK_THROWS_AS(parse(""), FormatError);
  CHECK_THROWS_AS(parse("l,re,im\n-1,0,0\n0,1,0\n"), FormatError);
  CHECK_THROWS_AS(parse(head + "\n"), FormatError);
  CHECK_THROWS_AS(parse(head + "\nl,re,im\n-1,0,0\n"), FormatError);
  CHECK_THROWS_AS(parse(head + "\nl,re,im\n-1,0,0\n1,1,0\n"), FormatError);
  CHECK_THROWS_AS(parse(head + "\nl,re,im\n-1,0,0\n0,x,0\n"), FormatError);
  CHECK_THROWS_AS(parse(head + "\nl,re\n-1,0\n0,1\n"), FormatError);
  CHECK_THROWS_AS(parse(head + "\nl,re,im\n-1,0,0\n0,1\n"), FormatError);
  CHECK_THROWS_AS(parse("# {not json\nl,re,im\n"), FormatError);
  const std::string nyquist = R"(# {"epsilon":2,"T1":0,"T2":1,"M":1,"noise_norm":0})";
  CHECK_THROWS_AS(parse(nyquist + "\nl,re,im\n0,1,0\n"), FormatError);
  CHECK_NOTHROW(parse(head + "\nl,re,im\n-1,0,0\n0,1,0\n"));
}

TEST_CASE("curve tables round-trip")
{
  SsrCurve c;
  c.theta = 1.5;
  c.epsilon = 1.0 / 7.0;
  c.predicted_ratio = 7.0 / 3.0;
  c.points = {{18, 40, 0.7, 40.0 / 18.0}, {32, 72, 0.68, 72.0 / 32.0}};
  std::stringstream ss;
  write_csv(ss, to_table(c));
  const SsrCurve d = curve_from_table(read_csv(ss));
  CHECK(d.theta == c.theta);
  CHECK(d.epsilon == c.epsilon);
  REQUIRE(d.points.size() == 2);
  CHECK(d.points[1].M_star == 72);
  CHECK(d.points[1].ratio == c.points[1].ratio);
}

TEST_CASE("solution json")
{
  GsProblem p;
  p.family = make_family("db4");
  p.scheme = default_scheme(p.family);
  p.N = 2;
  p.M = 3;
  GsSolution s;
  s.alpha = Eigen::VectorXcd::Ones(2);
  s.sigma_min = 0.5;
  s.sigma_max = 1.0;
  s.kappa = 2.0;
  const json j = to_json(s, p);
  CHECK(j["family"] == "db4");
  CHECK(j["alpha"].size() == 2);
  CHECK(j["method"] == "pivoted_qr");
  CHECK(j["kappa"] == 2.0);
}

TEST_CASE("missing columns are reported")
{
  CsvTable t;
  t.header = {"a"};
  t.rows = {{"1"}};
  CHECK_THROWS_AS(t.column("b"), FormatError);
  CHECK(t.number(0, "a") == 1.0);
}
