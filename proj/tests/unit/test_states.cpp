#include <doctest.h>

#include <cmath>
#include <numbers>

#include "noonsim/errors.hpp"
#include "noonsim/states.hpp"
#include "oracles.hpp"

using namespace noonsim;

TEST_CASE("scheme names round-trip") {
  for (auto s : all_schemes()) CHECK(parse_scheme(to_string(s)) == s);
  CHECK(all_schemes().size() == 6);
  CHECK(to_string(Scheme::yurke_fermionic_analog) == "yurke-fermionic-analog");
  CHECK_THROWS_AS(parse_scheme("squeezed"), DomainError);
}

TEST_CASE("scheme tags enforce parity") {
  CHECK_NOTHROW(SchemeTag(Scheme::yurke_fermionic_analog, 5));
  CHECK_THROWS_AS(SchemeTag(Scheme::yurke_fermionic_analog, 4), ParityError);
  CHECK_NOTHROW(SchemeTag(Scheme::yurke_bosonic, 4));
  CHECK_THROWS_AS(SchemeTag(Scheme::yurke_bosonic, 3), ParityError);
  CHECK_THROWS_AS(SchemeTag(Scheme::yurke_bosonic, 0), ParityError);
  // ParityError is a DomainError so callers can treat it as bad input.
  CHECK_THROWS_AS(SchemeTag(Scheme::yurke_bosonic, 5), DomainError);
  CHECK_THROWS_AS(SchemeTag(Scheme::noon, -1), DomainError);
}

TEST_CASE("Fock inputs") {
  const auto s = single_port_fock(4, 6);
  CHECK(s.amplitude(4, 0) == Complex(1.0));
  const auto d = dual_fock(3, 6);
  CHECK(d.amplitude(3, 3) == Complex(1.0));
  CHECK_THROWS_AS(dual_fock(3, 5), DomainError);
  CHECK_THROWS_AS(single_port_fock(4, 3), DomainError);
}

TEST_CASE("N00N state") {
  const double r = 1 / std::sqrt(2.0);
  const auto s = noon(3, 0.4, 5);
  CHECK(std::abs(s.amplitude(3, 0) - Complex(r)) < 1e-15);
  CHECK(std::abs(s.amplitude(0, 3) - std::polar(r, 1.2)) < 1e-15);
  CHECK(s.norm_squared() == doctest::Approx(1.0));
  // N = 1 collapses onto a single-photon superposition.
  const auto one = noon(1, 0.0, 1);
  CHECK(std::norm(one.amplitude(1, 0)) == doctest::Approx(0.5));
  CHECK_THROWS_AS(noon(0, 0.0, 3), DomainError);
  CHECK_THROWS_AS(noon(4, 0.0, 3), DomainError);
}

TEST_CASE("Yurke states") {
  const double half = 0.5;
  const auto f = yurke_fermionic_analog(5, 5);
  CHECK(std::norm(f.amplitude(3, 2)) == doctest::Approx(half));
  CHECK(std::norm(f.amplitude(2, 3)) == doctest::Approx(half));
  const auto b = yurke_bosonic(4, 4);
  CHECK(std::norm(b.amplitude(2, 2)) == doctest::Approx(half));
  CHECK(std::norm(b.amplitude(3, 1)) == doctest::Approx(half));
  const auto b2 = yurke_bosonic(2, 2);
  CHECK(std::norm(b2.amplitude(2, 0)) == doctest::Approx(half));
  CHECK_THROWS_AS(yurke_fermionic_analog(4, 6), ParityError);
  CHECK_THROWS_AS(yurke_bosonic(5, 6), ParityError);
  CHECK_THROWS_AS(yurke_fermionic_analog(7, 6), DomainError);
}

TEST_CASE("coherent state matches the Poisson distribution") {
  const Complex alpha = std::polar(2.0, 0.3);
  const int cutoff = coherent_cutoff(4.0, 1e-12);
  const auto s = coherent_vacuum(alpha, cutoff, 1e-12);
  double kept = 0.0;
  for (int k = 0; k <= cutoff; ++k) kept += oracle::poisson(4.0, k);
  for (int k = 0; k <= cutoff; ++k) {
    CHECK(std::norm(s.amplitude(k, 0)) == doctest::Approx(oracle::poisson(4.0, k) / kept).epsilon(1e-12));
    if (k > 0) CHECK(std::arg(s.amplitude(k, 0) / s.amplitude(k - 1, 0)) == doctest::Approx(0.3));
    for (int j = 1; j <= cutoff - k; ++j) CHECK(s.amplitude(k, j) == Complex(0.0));
  }
  CHECK(s.truncation_tail() < 1e-12);
  CHECK(s.truncation_tail() == doctest::Approx(1.0 - kept).epsilon(1e-3));
}

TEST_CASE("coherent cutoff is the smallest sufficient one") {
  for (double mean : {0.5, 1.0, 4.0, 9.0, 25.0}) {
    const int c = coherent_cutoff(mean, 1e-12);
    double tail = 0.0;
    double below = 0.0;
    for (int k = c + 1; k < c + 400; ++k) tail += oracle::poisson(mean, k);
    below = tail + oracle::poisson(mean, c);
    CHECK(tail < 1e-12);
    CHECK(below >= 1e-12);
  }
  CHECK(coherent_cutoff(0.0, 1e-12) == 0);
}

TEST_CASE("coherent truncation raises with the required cutoff") {
  try {
    coherent_vacuum(Complex(2.0, 0.0), 5, 1e-12);
    FAIL("expected TruncationError");
  } catch (const TruncationError& e) {
    CHECK(e.required_cutoff() == coherent_cutoff(4.0, 1e-12));
    CHECK(e.tail_mass() > 0.1);
  }
  CHECK_NOTHROW(coherent_vacuum(Complex(2.0, 0.0), 5, 0.5));
  const auto vac = coherent_vacuum(Complex(0.0, 0.0), 0, 1e-12);
  CHECK(vac.amplitude(0, 0) == Complex(1.0));
}
