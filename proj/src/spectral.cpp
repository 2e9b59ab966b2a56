#include "orbigraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "orbigraph/error.hpp"

namespace orbigraph {

using boost::multiprecision::abs;

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty() || coeffs_.back() != 1)
    throw OrbigraphError(ErrorKind::InvalidArgument, "polynomial must be monic");
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<long double> IntPolynomial::evaluate(std::complex<long double> x) const {
  std::complex<long double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<long double>();
  return acc;
}

bool IntPolynomial::divides(const IntPolynomial& other) const {
  if (degree() > other.degree()) return false;
  std::vector<BigInt> rem = other.coeffs_;
  const std::size_t d = degree();
  for (std::size_t top = rem.size(); top-- > d;) {
    const BigInt lead = rem[top];
    if (lead != 0)
      for (std::size_t i = 0; i <= d; ++i) rem[top - d + i] -= lead * coeffs_[i];
  }
  return std::all_of(rem.begin(), rem.begin() + static_cast<std::ptrdiff_t>(d), [](const BigInt& c) { return c == 0; });
}

std::string IntPolynomial::to_string(const std::string& var) const {
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0 && !(i == 0 && out.empty())) continue;
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// Characteristic polynomial: Hessenberg reduction modulo word-size primes,
// combined by the Chinese remainder theorem.

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  base %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

// Primes below 2^31, descending.
std::uint64_t next_prime_below(std::uint64_t x) {
  do {
    --x;
  } while (!is_prime(x));
  return x;
}

std::vector<std::uint64_t> char_poly_mod(const Digraph& a, std::uint64_t p) {
  const std::size_t n = a.size();
  std::vector<std::vector<std::uint64_t>> h(n, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto w = a(i, j) % static_cast<std::int64_t>(p);
      h[i][j] = static_cast<std::uint64_t>(w < 0 ? w + static_cast<std::int64_t>(p) : w);
    }

  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][j + 1]);
    }
    const std::uint64_t inv = pow_mod(h[j + 1][j], p - 2, p);
    for (std::size_t i = j + 2; i < n; ++i) {
      if (h[i][j] == 0) continue;
      const std::uint64_t u = mul_mod(h[i][j], inv, p);
      for (std::size_t c = 0; c < n; ++c) h[i][c] = (h[i][c] + p - mul_mod(u, h[j + 1][c], p)) % p;
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = (h[r][j + 1] + mul_mod(u, h[r][i], p)) % p;
    }
  }

  // polys[m] is the characteristic polynomial of the leading m x m block.
  std::vector<std::vector<std::uint64_t>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    auto& cur = polys[m];
    cur.assign(m + 1, 0);
    const auto& prev = polys[m - 1];
    for (std::size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] = (cur[i + 1] + prev[i]) % p;
      cur[i] = (cur[i] + p - mul_mod(h[m - 1][m - 1], prev[i], p)) % p;
    }
    std::uint64_t t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = mul_mod(t, h[m - i][m - i - 1], p);
      const std::uint64_t factor = mul_mod(t, h[m - i - 1][m - 1], p);
      if (factor == 0) continue;
      const auto& lower = polys[m - i - 1];
      for (std::size_t c = 0; c < lower.size(); ++c) cur[c] = (cur[c] + p - mul_mod(factor, lower[c], p)) % p;
    }
  }
  return polys[n];
}

// ---------------------------------------------------------------------------
// Rational polynomial helpers (ascending coefficients, no trailing zeros;
// the zero polynomial is empty).

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPolynomial& p) {
  RatPoly out(p.coefficients().begin(), p.coefficients().end());
  trim(out);
  return out;
}

RatPoly derivative(const RatPoly& p) {
  RatPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long long>(i));
  trim(out);
  return out;
}

RatPoly make_monic(RatPoly p) {
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

// Quotient and remainder of a / b, b nonzero.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  RatPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a));
}

RatPoly sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Yun's square-free decomposition: p = prod factors[i]^(i+1), each monic.
std::vector<RatPoly> square_free_factors(const RatPoly& p) {
  std::vector<RatPoly> out;
  const RatPoly dp = derivative(p);
  const RatPoly a0 = gcd(p, dp);
  RatPoly b = divmod(p, a0).first;
  RatPoly c = divmod(dp, a0).first;
  RatPoly d = sub(c, derivative(b));
  while (b.size() > 1) {
    const RatPoly a = gcd(b, d);
    out.push_back(make_monic(a));
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = sub(c, derivative(b));
  }
  return out;
}

int sign(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Distinct real roots of a square-free polynomial.
std::size_t sturm_distinct_real_roots(const RatPoly& f) {
  if (f.size() <= 1) return 0;
  std::vector<RatPoly> seq{f, derivative(f)};
  while (seq.back().size() > 1) {
    RatPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  auto changes = [&](bool at_plus_infinity) {
    std::size_t count = 0;
    int last = 0;
    for (const auto& s : seq) {
      int sg = sign(s.back());
      if (!at_plus_infinity && (s.size() - 1) % 2 == 1) sg = -sg;
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++count;
      last = sg;
    }
    return count;
  };
  return changes(false) - changes(true);
}

// ---------------------------------------------------------------------------
// Numeric roots of a square-free factor via Aberth iteration.

using Complex = std::complex<long double>;

Complex eval(const std::vector<long double>& c, Complex x) {
  Complex acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<long double> derivative(const std::vector<long double>& c) {
  std::vector<long double> out;
  for (std::size_t i = 1; i < c.size(); ++i) out.push_back(c[i] * static_cast<long double>(i));
  return out;
}

long double residual_scale(const std::vector<long double>& c, Complex x) {
  long double acc = 0;
  const long double r = std::abs(x);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::fabs(*it);
  return acc;
}

std::vector<Complex> aberth_roots(const std::vector<long double>& c, long double radius, double tol) {
  const std::size_t d = c.size() - 1;
  const auto dc = derivative(c);
  std::vector<Complex> z(d);
  for (std::size_t i = 0; i < d; ++i) {
    const long double angle = 2 * std::numbers::pi_v<long double> * (static_cast<long double>(i) + 0.25L) / d;
    z[i] = std::polar(radius * 0.9L + 0.1L, angle);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double biggest = 0;
    for (std::size_t i = 0; i < d; ++i) {
      const Complex f = eval(c, z[i]);
      if (f == Complex(0)) continue;
      const Complex ratio = f / eval(dc, z[i]);
      Complex repulsion = 0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) repulsion += Complex(1) / (z[i] - z[j]);
      const Complex step = ratio / (Complex(1) - ratio * repulsion);
      z[i] -= step;
      biggest = std::max(biggest, std::abs(step) / std::max<long double>(1, std::abs(z[i])));
    }
    if (biggest < 1e-30L) break;
  }
  for (const auto& root : z) {
    const long double res = std::abs(eval(c, root));
    if (!(res <= tol * residual_scale(c, root)))
      throw OrbigraphError(ErrorKind::RootFindingDidNotConverge,
                           "residual " + std::to_string(static_cast<double>(res)) + " exceeds tolerance");
  }
  return z;
}

BigInt trace(const std::vector<std::vector<BigInt>>& m) {
  BigInt t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

}  // namespace

IntPolynomial char_poly(const Digraph& a) {
  const std::size_t n = a.size();
  if (n == 0) return IntPolynomial({BigInt(1)});
  // Coefficient of x^(n-i) is bounded by C(n,i) R^i <= (1+R)^n, R the largest absolute row sum.
  std::int64_t r = 0;
  for (Vertex i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (Vertex j = 0; j < n; ++j) s += a(i, j) < 0 ? -a(i, j) : a(i, j);
    r = std::max(r, s);
  }
  const BigInt needed = 2 * boost::multiprecision::pow(BigInt(1 + r), static_cast<unsigned>(n)) + 1;

  std::vector<BigInt> value(n + 1, 0);
  BigInt modulus = 1;
  std::uint64_t prime = std::uint64_t{1} << 31;
  while (modulus <= needed) {
    prime = next_prime_below(prime);
    const auto residues = char_poly_mod(a, prime);
    // Garner step: lift value (mod modulus) to value' (mod modulus * prime).
    const std::uint64_t inv = pow_mod(BigInt(modulus % prime).convert_to<std::uint64_t>(), prime - 2, prime);
    for (std::size_t i = 0; i <= n; ++i) {
      const auto cur = BigInt(value[i] % prime).convert_to<std::uint64_t>();
      const std::uint64_t delta = mul_mod((residues[i] + prime - cur) % prime, inv, prime);
      value[i] += modulus * delta;
    }
    modulus *= prime;
  }
  const BigInt half = modulus / 2;
  for (auto& v : value)
    if (v > half) v -= modulus;
  return IntPolynomial(std::move(value));
}

std::size_t count_real_roots(const IntPolynomial& p) {
  const auto factors = square_free_factors(to_rat(p));
  std::size_t total = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) total += (i + 1) * sturm_distinct_real_roots(factors[i]);
  return total;
}

std::vector<std::complex<double>> eigenvalues(const Orbigraph& g, double tol) {
  if (!(tol > 0)) throw OrbigraphError(ErrorKind::InvalidArgument, "tolerance must be positive");
  const IntPolynomial p = char_poly(g);
  const auto factors = square_free_factors(to_rat(p));
  const long double k = static_cast<long double>(g.degree());

  std::vector<std::complex<double>> out;
  for (std::size_t fi = 0; fi < factors.size(); ++fi) {
    RatPoly f = factors[fi];
    const std::size_t multiplicity = fi + 1;
    std::vector<Complex> roots;
    // Eigenvalues lie in the disc of radius k, so integer ones are in [-k, k].
    for (Weight x = -g.degree(); x <= g.degree() && f.size() > 1; ++x) {
      const RatPoly linear{Rational(-x), Rational(1)};
      auto [q, r] = divmod(f, linear);
      if (r.empty()) {
        roots.emplace_back(static_cast<long double>(x), 0);
        f = std::move(q);
      }
    }
    if (f.size() > 1) {
      // Clear denominators for the numeric stage.
      std::vector<long double> c;
      for (const auto& x : f) c.push_back(x.convert_to<long double>());
      for (const auto& z : aberth_roots(c, k, tol)) roots.push_back(z);
    }
    for (const auto& z : roots)
      for (std::size_t m = 0; m < multiplicity; ++m)
        out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }

  for (const auto& z : out)
    if (std::abs(z) > static_cast<double>(k) + tol)
      throw OrbigraphError(ErrorKind::RootFindingDidNotConverge, "root outside the spectral radius");
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return out;
}

LengthSpectrum length_spectrum(const Orbigraph& g, std::size_t m_max) {
  const std::size_t n = g.size();
  std::vector<std::vector<BigInt>> power(n, std::vector<BigInt>(n));
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j) power[i][j] = g(i, j);
  std::vector<BigInt> traces;
  for (std::size_t m = 1; m <= m_max; ++m) {
    if (m > 1) {
      std::vector<std::vector<BigInt>> next(n, std::vector<BigInt>(n, 0));
      for (Vertex i = 0; i < n; ++i)
        for (Vertex t = 0; t < n; ++t) {
          if (power[i][t] == 0) continue;
          for (Vertex j = 0; j < n; ++j)
            if (g(t, j) != 0) next[i][j] += power[i][t] * g(t, j);
        }
      power = std::move(next);
    }
    traces.push_back(trace(power));
  }
  return LengthSpectrum(std::move(traces));
}

IntPolynomial power_sums_to_char_poly(std::span<const BigInt> power_sums, std::size_t degree) {
  if (power_sums.size() < degree)
    throw OrbigraphError(ErrorKind::InvalidArgument, "need at least as many power sums as the degree");
  // e[0] = 1, m e_m = sum_{i=1}^{m} (-1)^(i-1) e_{m-i} p_i
  std::vector<BigInt> e(degree + 1, 0);
  e[0] = 1;
  for (std::size_t m = 1; m <= degree; ++m) {
    BigInt acc = 0;
    for (std::size_t i = 1; i <= m; ++i) {
      const BigInt term = e[m - i] * power_sums[i - 1];
      acc += (i % 2 == 1) ? term : BigInt(-term);
    }
    if (acc % m != 0)
      throw OrbigraphError(ErrorKind::NonIntegralCoefficients,
                           "elementary symmetric function e_" + std::to_string(m) + " is not an integer");
    e[m] = acc / m;
  }
  // Coefficient of x^(n-m) is (-1)^m e_m.
  std::vector<BigInt> coeffs(degree + 1);
  for (std::size_t m = 0; m <= degree; ++m) coeffs[degree - m] = (m % 2 == 0) ? e[m] : BigInt(-e[m]);
  return IntPolynomial(std::move(coeffs));
}

std::vector<BigInt> char_poly_to_power_sums(const IntPolynomial& p, std::size_t m_max) {
  const std::size_t n = p.degree();
  std::vector<BigInt> e(n + 1);
  for (std::size_t m = 0; m <= n; ++m) e[m] = (m % 2 == 0) ? p.coefficient(n - m) : BigInt(-p.coefficient(n - m));
  // p_m = sum_{i=1}^{min(m-1,n)} (-1)^(i-1) e_i p_{m-i} + [m <= n] (-1)^(m-1) m e_m
  std::vector<BigInt> sums(m_max, 0);
  for (std::size_t m = 1; m <= m_max; ++m) {
    BigInt acc = 0;
    for (std::size_t i = 1; i <= std::min(m - 1, n); ++i) {
      const BigInt term = e[i] * sums[m - i - 1];
      acc += (i % 2 == 1) ? term : BigInt(-term);
    }
    if (m <= n) {
      const BigInt term = e[m] * m;
      acc += (m % 2 == 1) ? term : BigInt(-term);
    }
    sums[m - 1] = acc;
  }
  return sums;
}

SingularBounds singular_bounds(const Orbigraph& g) {
  const auto spectrum = length_spectrum(g, 2);
  const BigInt nk = BigInt(g.size()) * g.degree();
  const BigInt upper = spectrum.walks(2) - nk;
  const Weight k = g.degree();
  const Rational lower = k == 1 ? Rational(0) : Rational(upper, BigInt(k * k - k));
  return {lower, upper, singular_vertices(g).size()};
}

bool spectral_regularity_test(const Orbigraph& g) {
  const auto spectrum = length_spectrum(g, 2);
  return spectrum.walks(1) == 0 && spectrum.walks(2) == BigInt(g.size()) * g.degree();
}

bool cospectral(const Orbigraph& g1, const Orbigraph& g2) {
  return g1.size() == g2.size() && char_poly(g1) == char_poly(g2);
}

bool spectrum_divides(const Digraph& cover, const Orbigraph& quotient) {
  return char_poly(quotient).divides(char_poly(cover));
}

}  // namespace orbigraph
