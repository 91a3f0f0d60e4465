#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "noonsim/errors.hpp"
#include "noonsim/estimation.hpp"
#include "noonsim/experiment.hpp"

using namespace noonsim;

namespace {

double as_real(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return *d;
  return static_cast<double>(std::get<long>(c));
}

double footer(const Table& t, const std::string& key) {
  for (const auto& [k, v] : t.footer) {
    if (k == key) return as_real(v);
  }
  FAIL("missing footer " << key);
  return 0.0;
}

}  // namespace

TEST_CASE("grid specs") {
  const auto g = GridSpec::parse("0:3.1:100");
  CHECK(g.start == 0.0);
  CHECK(g.stop == doctest::Approx(3.1));
  CHECK(g.count == 100);
  CHECK(g.values().size() == 100);
  CHECK(g.values().back() == doctest::Approx(3.1));
  for (const char* bad : {"0:1", "0:1:1", "1:0:5", "a:b:c", "0:1:2:3", "", "0:1:x", "0:1:2.5"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(GridSpec::parse(bad), DomainError);
  }
}

TEST_CASE("range specs") {
  CHECK(RangeSpec::parse("1:5").values() == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(RangeSpec::parse("4:12:2").values() == std::vector<int>{4, 6, 8, 10, 12});
  CHECK(RangeSpec::parse("3:3").values() == std::vector<int>{3});
  CHECK_THROWS_AS(RangeSpec::parse("5:1"), DomainError);
  CHECK_THROWS_AS(RangeSpec::parse("1:5:0"), DomainError);
  CHECK_THROWS_AS(RangeSpec::parse("1"), DomainError);
}

TEST_CASE("table formatting") {
  CHECK(format_real(0.25) == "0.25");
  CHECK(format_real(INFINITY) == "inf");
  CHECK(format_real(-INFINITY) == "-inf");
  CHECK(format_real(0.1) == "0.10000000000000001");
  Table t{{"a", "b"}, {{1L, 0.5}, {std::string("x"), INFINITY}}, {{"slope", -1.0}, {"seed", std::string("7")}}};
  CHECK(t.to_csv() == "a,b\n1,0.5\nx,inf\n# slope,-1\n# seed,7\n");
}

TEST_CASE("N00N framings agree") {
  ExperimentConfig after;
  ExperimentConfig input;
  input.framing = NoonFraming::input_port;
  for (int n = 1; n <= 6; ++n) {
    const auto a = make_scheme_setup(SchemeTag(Scheme::noon, n), after);
    const auto b = make_scheme_setup(SchemeTag(Scheme::noon, n), input);
    CHECK(a.likelihood_period == doctest::Approx(2 * std::numbers::pi / n));
    CHECK(b.pipeline.stages().size() == 3);
    for (double phi : {0.2, 1.0, 2.3}) {
      const auto pa = outcome_distribution(a.pipeline, a.input, phi);
      const auto pb = outcome_distribution(b.pipeline, b.input, phi);
      for (std::size_t i = 0; i < pa.size(); ++i) CHECK(pa[i] == doctest::Approx(pb[i]).epsilon(1e-12));
      const auto sa = sensitivity(a.pipeline.run(a.input, phi), a.observable, a.pipeline.output_generator());
      const auto sb = sensitivity(b.pipeline.run(b.input, phi), b.observable, b.pipeline.output_generator());
      CHECK(sa == doctest::Approx(1.0 / n).epsilon(1e-10));
      CHECK(sb == doctest::Approx(1.0 / n).epsilon(1e-10));
    }
  }
}

TEST_CASE("observable selection") {
  ExperimentConfig c;
  CHECK(make_scheme_setup(SchemeTag(Scheme::noon, 3), c).observable_name == "noon-flip");
  CHECK(make_scheme_setup(SchemeTag(Scheme::single_port_fock, 3), c).observable_name == "jz");
  c.observable = "noon-flip";
  CHECK_NOTHROW(make_scheme_setup(SchemeTag(Scheme::single_port_fock, 3), c));
  c.observable = "parity";
  CHECK_THROWS_AS(make_scheme_setup(SchemeTag(Scheme::noon, 3), c), DomainError);
}

TEST_CASE("coherent setup picks a sufficient cutoff or reports truncation") {
  ExperimentConfig c;
  const auto s = make_scheme_setup(SchemeTag(Scheme::coherent, 4), c);
  CHECK(s.input.truncation_tail() < 1e-12);
  c.cutoff = 5;
  CHECK_THROWS_AS(make_scheme_setup(SchemeTag(Scheme::coherent, 4), c), TruncationError);
}

TEST_CASE("sensitivity runner") {
  ExperimentConfig c;
  c.n = 4;
  c.phi_grid = GridSpec::parse("0:3.1:100");
  const auto t = run_sensitivity(c);
  CHECK(t.header == std::vector<std::string>{"scheme", "n", "phi", "expectation", "variance", "sensitivity"});
  REQUIRE(t.rows.size() == 100);
  CHECK(std::isinf(as_real(t.rows[0][5])));
  for (std::size_t i = 1; i < t.rows.size(); ++i) CHECK(as_real(t.rows[i][5]) == doctest::Approx(0.25).epsilon(1e-10));

  c.scheme = Scheme::dual_fock;
  c.n = 3;
  for (const auto& row : run_sensitivity(c).rows) CHECK(std::isinf(as_real(row[5])));
}

TEST_CASE("scaling runner") {
  ExperimentConfig c;
  c.n_range = RangeSpec::parse("1:8");
  CHECK(footer(run_scaling(c), "slope") == doctest::Approx(-1.0).epsilon(1e-10));
  c.scheme = Scheme::single_port_fock;
  CHECK(footer(run_scaling(c), "slope") == doctest::Approx(-0.5).epsilon(1e-10));
  c.scheme = Scheme::dual_fock;
  c.metric = "fisher";
  c.n_range = RangeSpec::parse("2:6");
  const double slope = footer(run_scaling(c), "slope");
  CHECK(slope > 1.7);
  CHECK(slope < 2.3);
  c.metric = "entropy";
  CHECK_THROWS_AS(run_scaling(c), DomainError);
  c.metric = "sensitivity";
  CHECK_THROWS_AS(run_scaling(c), NoInformationError);
  c.n_range = RangeSpec::parse("2:3");
  CHECK_THROWS_AS(run_scaling(c), DomainError);
  c.n_range.reset();
  CHECK_THROWS_AS(run_scaling(c), DomainError);
}

TEST_CASE("HOM runner") {
  const auto t = run_hom(ExperimentConfig{});
  REQUIRE(t.rows.size() == 3);
  CHECK(as_real(t.rows[0][2]) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(as_real(t.rows[1][2]) < 1e-12);
  CHECK(as_real(t.rows[2][2]) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("lithography runner") {
  ExperimentConfig c;
  c.n = 4;
  c.points = 512;
  const auto t = run_litho(c);
  CHECK(t.header.back() == "noon_4");
  CHECK(t.rows.size() == 3 * 512 + 1);
  CHECK(footer(t, "period_ratio") == doctest::Approx(4.0).epsilon(1e-6));
  c.points = 1;
  CHECK_THROWS_AS(run_litho(c), DomainError);
}

TEST_CASE("rosetta runner") {
  ExperimentConfig c;
  c.n_range = RangeSpec::parse("1:12");
  c.phi_grid = GridSpec::parse("0:6.283185307179586:50");
  const auto t = run_rosetta(c);
  CHECK(t.rows.size() == 12 * 50);
  CHECK(footer(t, "max_discrepancy") < 1e-12);
  c.n_range = RangeSpec::parse("15:15");
  CHECK_THROWS_AS(run_rosetta(c), DomainError);
}

TEST_CASE("sample runner") {
  ExperimentConfig c;
  c.n = 2;
  c.phi = 0.3;
  c.seed = 7;
  const auto first = run_sample(c).to_csv();
  CHECK(first == run_sample(c).to_csv());
  c.seed = 8;
  CHECK(first != run_sample(c).to_csv());

  c.estimator = "bayes";
  c.shots = 2000;
  c.grid_points = 1024;
  const auto t = run_sample(c);
  const double period = std::numbers::pi;
  // Photon counting cannot tell phi from -phi, so the posterior has twin
  // peaks at +-0.3 and its circular mean sits on the fold at 0.
  const double mean = std::fmod(footer(t, "posterior_mean"), period);
  CHECK(std::min(mean, period - mean) < 0.05);
  CHECK(footer(t, "posterior_std") == doctest::Approx(0.3).epsilon(0.15));

  c.estimator = "mle";
  CHECK_THROWS_AS(run_sample(c), DomainError);
  c.estimator = "none";
  c.shots = -5;
  CHECK_THROWS_AS(run_sample(c), DomainError);
  c.shots = 10;
  c.seed = 0xFFFFFFFFFFFFFFFFull;
  const auto big = run_sample(c).to_csv();
  CHECK(big.find("# seed,18446744073709551615") != std::string::npos);
}
