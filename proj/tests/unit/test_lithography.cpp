#include <doctest.h>

#include <cmath>
#include <numbers>

#include "noonsim/elements.hpp"
#include "noonsim/errors.hpp"
#include "noonsim/estimation.hpp"
#include "noonsim/lithography.hpp"

using namespace noonsim;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("deposition kinds") {
  CHECK(parse_deposition_kind("single") == DepositionKind::single);
  CHECK(parse_deposition_kind("classical-two-photon") == DepositionKind::classical_two_photon);
  CHECK(parse_deposition_kind("noon") == DepositionKind::noon);
  CHECK(to_string(DepositionKind::classical_two_photon) == "classical-two-photon");
  CHECK_THROWS_AS(parse_deposition_kind("triple"), DomainError);
}

TEST_CASE("deposition rates") {
  const std::vector<double> x{0.0, 0.25, 0.5, 1.0};
  const auto single = deposition_rate(DepositionKind::single, 1, x, 1.0);
  CHECK(single.rate[0] == doctest::Approx(2.0));
  CHECK(single.rate[2] == doctest::Approx(1.0));
  CHECK(single.rate[3] == doctest::Approx(0.0));
  const auto two = deposition_rate(DepositionKind::classical_two_photon, 2, x, 1.0);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(two.rate[i] == doctest::Approx(single.rate[i] * single.rate[i]));
  const auto n3 = deposition_rate(DepositionKind::noon, 3, x, 2.0);
  CHECK(n3.rate[1] == doctest::Approx(1 + std::cos(3 * kPi * 0.125)));
  for (double r : n3.rate) CHECK(r >= 0.0);
  CHECK_THROWS_AS(deposition_rate(DepositionKind::single, 1, x, 0.0), DomainError);
  CHECK_THROWS_AS(deposition_rate(DepositionKind::noon, 0, x, 1.0), DomainError);
}

TEST_CASE("fringe periods shrink by N") {
  const auto x = linspace(-1.0, 5.0, 3 * 512 + 1);
  const double p1 = fringe_period(deposition_rate(DepositionKind::single, 1, x, 1.0));
  CHECK(p1 == doctest::Approx(2.0).epsilon(1e-8));
  for (int n = 1; n <= 6; ++n) {
    const double pn = fringe_period(deposition_rate(DepositionKind::noon, n, x, 1.0));
    CHECK(p1 / pn == doctest::Approx(double(n)).epsilon(1e-6));
  }
  const double p2 = fringe_period(deposition_rate(DepositionKind::classical_two_photon, 2, x, 1.0));
  CHECK(p2 == doctest::Approx(p1).epsilon(1e-8));
}

TEST_CASE("fringe period needs enough samples and maxima") {
  const auto coarse = linspace(-1.0, 5.0, 100);
  CHECK_THROWS_AS(fringe_period(deposition_rate(DepositionKind::noon, 4, coarse, 1.0)),
                  InsufficientGridError);
  const auto short_span = linspace(-0.5, 1.0, 1000);
  CHECK_THROWS_AS(fringe_period(deposition_rate(DepositionKind::single, 1, short_span, 1.0)),
                  InsufficientGridError);
}

TEST_CASE("N00N fidelity from a single splitter") {
  const auto theta = linspace(0.0, 2 * kPi, 4001);
  const auto f10 = noon_fidelity_sweep(1, 0, theta);
  CHECK(f10.fidelity == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(std::cos(f10.theta)) < 1e-9);
  CHECK(noon_fidelity_sweep(1, 1, theta).fidelity == doctest::Approx(1.0).epsilon(1e-12));
  // |2,0> -> cos^2 |2,0> + ... - sin^2 |0,2>: the N00N weight never exceeds 1/2.
  CHECK(noon_fidelity_sweep(2, 0, theta).fidelity == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(noon_fidelity_sweep(2, 1, theta).fidelity < 0.99);
  CHECK_THROWS_AS(noon_fidelity_sweep(0, 0, theta), DomainError);
  CHECK_THROWS_AS(noon_fidelity_sweep(1, 0, std::vector<double>{}), DomainError);
}

TEST_CASE("fidelity sweep agrees with the splitter unitary") {
  for (auto [na, nb] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}}) {
    const int n = na + nb;
    for (double t : {0.3, 1.1, 2.0}) {
      const auto out = apply(beam_splitter(t, n), make_basis_state(na, nb, n));
      const double amp = std::abs(out.amplitude(n, 0)) + std::abs(out.amplitude(0, n));
      const double single = noon_fidelity_sweep(na, nb, std::vector<double>{t}).fidelity;
      CHECK(single == doctest::Approx(0.5 * amp * amp).epsilon(1e-12));
    }
  }
}
