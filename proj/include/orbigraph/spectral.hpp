#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "orbigraph/core.hpp"
#include "orbigraph/numeric.hpp"

namespace orbigraph {

// Monic polynomial with big-integer coefficients, stored lowest degree first.
class IntPolynomial {
 public:
  // Trailing zero coefficients are dropped; throws InvalidArgument unless the
  // leading coefficient is 1.
  explicit IntPolynomial(std::vector<BigInt> ascending);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  const BigInt& coefficient(std::size_t power) const { return coeffs_[power]; }

  BigInt evaluate(const BigInt& x) const;
  std::complex<long double> evaluate(std::complex<long double> x) const;

  // True iff this divides `other` in Z[x].
  bool divides(const IntPolynomial& other) const;

  // e.g. "x^2 - 2x - 3"
  std::string to_string(const std::string& var = "x") const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

IntPolynomial char_poly(const Digraph& a);
inline IntPolynomial char_poly(const Orbigraph& g) { return char_poly(g.graph()); }

// Numeric spectrum, n values with multiplicity, sorted by (real, imag).
// Integer eigenvalues are found exactly; the rest by simultaneous iteration
// on each square-free factor. Throws RootFindingDidNotConverge.
std::vector<std::complex<double>> eigenvalues(const Orbigraph& g, double tol = 1e-9);

// Real roots counted with multiplicity (Sturm sequences on square-free factors).
std::size_t count_real_roots(const IntPolynomial& p);

// walks(m) = tr(A^m), the weighted count of closed walks of length m.
class LengthSpectrum {
 public:
  explicit LengthSpectrum(std::vector<BigInt> traces) : traces_(std::move(traces)) {}
  std::size_t max_length() const noexcept { return traces_.size(); }
  const BigInt& walks(std::size_t m) const { return traces_.at(m - 1); }
  const std::vector<BigInt>& traces() const noexcept { return traces_; }

 private:
  std::vector<BigInt> traces_;
};

LengthSpectrum length_spectrum(const Orbigraph& g, std::size_t m_max);

// Newton's identities. `power_sums[0]` is the first power sum. Throws
// NonIntegralCoefficients / InvalidArgument.
IntPolynomial power_sums_to_char_poly(std::span<const BigInt> power_sums, std::size_t degree);
std::vector<BigInt> char_poly_to_power_sums(const IntPolynomial& p, std::size_t m_max);

struct SingularBounds {
  Rational lower;  // (tr A^2 - nk) / (k^2 - k); 0 when k == 1
  BigInt upper;    // tr A^2 - nk
  std::size_t actual;
};

SingularBounds singular_bounds(const Orbigraph& g);

// tr A^2 == nk and tr A == 0.
bool spectral_regularity_test(const Orbigraph& g);

bool cospectral(const Orbigraph& g1, const Orbigraph& g2);

// char_poly(quotient) divides char_poly(cover).
bool spectrum_divides(const Digraph& cover, const Orbigraph& quotient);

}  // namespace orbigraph
