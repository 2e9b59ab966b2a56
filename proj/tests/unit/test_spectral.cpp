#include <cmath>

#include "doctest.h"
#include "orbigraph/error.hpp"
#include "orbigraph/spectral.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace orbigraph;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

void check_roots(const Orbigraph& g, const std::vector<double>& expected) {
  const auto ev = eigenvalues(g);
  REQUIRE(ev.size() == expected.size());
  for (std::size_t i = 0; i < ev.size(); ++i) {
    CHECK(std::abs(ev[i].real() - expected[i]) < 1e-9);
    CHECK(std::abs(ev[i].imag()) < 1e-9);
  }
}

}  // namespace

TEST_CASE("characteristic polynomials of the worked examples") {
  CHECK(char_poly(fixtures::k4_quotient()).coefficients() == big({-3, -2, 1}));
  CHECK(char_poly(fixtures::k4_quotient()).to_string() == "x^2 - 2x - 3");
  CHECK(char_poly(fixtures::cospectral_bad()).coefficients() == big({0, 6, -5, -2, 1}));
  CHECK(char_poly(fixtures::cospectral_good()) == char_poly(fixtures::cospectral_bad()));
  CHECK(char_poly(fixtures::seven_bad()).coefficients() == big({12, -22, -12, 33, 0, -12, 0, 1}));
  CHECK(char_poly(Orbigraph::validate(fixtures::kK4)).coefficients() == big({-3, -8, -6, 0, 1}));
}

TEST_CASE("characteristic polynomial agrees with the Leibniz expansion") {
  for (const auto& m : {fixtures::kK4Quotient, fixtures::kSevenBad, fixtures::kCospectralBad, fixtures::kCospectralGood,
                        fixtures::kCospectralCover, fixtures::kK4})
    CHECK(char_poly(Digraph::from_rows(m)).coefficients() == oracle::leibniz_char_poly(m));
  // Entries large enough to exercise several CRT primes.
  const IntMatrix heavy = {{1, 999'999, 0}, {500'000, 0, 499'999}, {0, 1, 999'998}};
  CHECK(char_poly(Digraph::from_rows(heavy)).coefficients() == oracle::leibniz_char_poly(heavy));
}

TEST_CASE("eigenvalues") {
  check_roots(fixtures::k4_quotient(), {-1, 3});
  check_roots(fixtures::cospectral_bad(), {-2, 0, 1, 3});
  check_roots(fixtures::cospectral_good(), {-2, 0, 1, 3});
  const auto ev = eigenvalues(fixtures::seven_bad());
  REQUIRE(ev.size() == 7);
  // (x - 3)(x - 1)^2 (x + 1)(x + 2)(x^2 + 2x - 2)
  const std::vector<double> expected = {-1 - std::sqrt(3.0), -2, -1, -1 + std::sqrt(3.0), 1, 1, 3};
  for (std::size_t i = 0; i < 7; ++i) CHECK(std::abs(ev[i].real() - expected[i]) < 1e-9);
}

TEST_CASE("real root counting") {
  CHECK(count_real_roots(IntPolynomial(big({-3, -2, 1}))) == 2);
  CHECK(count_real_roots(IntPolynomial(big({1, 0, 1}))) == 0);
  CHECK(count_real_roots(IntPolynomial(big({0, 0, 0, 1}))) == 3);
  CHECK(count_real_roots(IntPolynomial(big({-1, 0, 0, 1}))) == 1);
  CHECK(count_real_roots(char_poly(fixtures::seven_bad())) == 7);
}

TEST_CASE("polynomial arithmetic") {
  const IntPolynomial p(big({-3, -2, 1}));
  CHECK(p.evaluate(BigInt(3)) == 0);
  CHECK(p.evaluate(BigInt(0)) == -3);
  CHECK(IntPolynomial(big({1, 1})).divides(p));
  CHECK_FALSE(IntPolynomial(big({1, 0, 1})).divides(p));
  CHECK_THROWS_AS(IntPolynomial(big({1, 2})), OrbigraphError);
  CHECK(IntPolynomial(big({0, 1})).to_string() == "x");
}

TEST_CASE("length spectrum counts closed walks") {
  const auto ls = length_spectrum(fixtures::k4_quotient(), 3);
  CHECK(ls.traces() == big({2, 10, 26}));
  CHECK(ls.walks(2) == 10);
  for (const auto& m : {fixtures::kSevenBad, fixtures::kCospectralBad, fixtures::kK4}) {
    const auto spectrum = length_spectrum(Orbigraph::validate(m), 5);
    for (std::size_t len = 1; len <= 5; ++len) CHECK(spectrum.walks(len) == oracle::closed_walks(m, len));
  }
}

TEST_CASE("Newton identities in both directions") {
  const auto poly = char_poly(fixtures::seven_bad());
  const auto sums = char_poly_to_power_sums(poly, 7);
  CHECK(sums == length_spectrum(fixtures::seven_bad(), 7).traces());
  CHECK(power_sums_to_char_poly(sums, 7) == poly);
  // p = (1, 0) forces e2 = 1/2; three roots need three power sums.
  const std::vector<BigInt> bad = big({1, 2});
  CHECK_THROWS_AS(power_sums_to_char_poly(std::vector<BigInt>{1, 0}, 2), OrbigraphError);
  CHECK_THROWS_AS(power_sums_to_char_poly(bad, 3), OrbigraphError);
}

TEST_CASE("singular count bounds") {
  const auto b = singular_bounds(fixtures::k4_quotient());
  CHECK(b.lower == make_rational(2, 3));
  CHECK(b.upper == 4);
  CHECK(b.actual == 2);
  for (std::size_t n = 1; n <= 3; ++n)
    for (Weight k = 2; k <= 3; ++k) {
      const auto g = Orbigraph::validate(fixtures::scaled_identity(n, k), std::nullopt, true);
      const auto s = singular_bounds(g);
      CHECK(s.lower == Rational(n));
      CHECK(s.actual == n);
    }
}

TEST_CASE("spectral regularity and cospectrality") {
  CHECK(spectral_regularity_test(Orbigraph::validate(fixtures::kK4)));
  CHECK_FALSE(spectral_regularity_test(fixtures::k4_quotient()));
  CHECK(cospectral(fixtures::cospectral_bad(), fixtures::cospectral_good()));
  CHECK_FALSE(cospectral(fixtures::cospectral_bad(), fixtures::seven_bad()));
  CHECK(spectrum_divides(Digraph::from_rows(fixtures::kCospectralCover), fixtures::cospectral_good()));
  CHECK(spectrum_divides(Digraph::from_rows(fixtures::kK4), fixtures::k4_quotient()));
  CHECK_FALSE(spectrum_divides(Digraph::from_rows(fixtures::kK4), fixtures::cospectral_good()));
}
