#include "orbigraph/cheeger.hpp"

#include <cassert>
#include <cstdint>
#include <string>

#include "orbigraph/error.hpp"
#include "orbigraph/markov.hpp"

namespace orbigraph {

Circulation circulation(const Orbigraph& g) {
  const RationalVector pi = stationary_distribution(g);
  const RationalMatrix p = transition_matrix(g);
  const std::size_t n = g.size();
  Circulation out{RationalMatrix(n, RationalVector(n)), RationalVector(n, Rational(0))};
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j) {
      out.flow[i][j] = pi[i] * p[i][j];
      out.vertex_mass[j] += out.flow[i][j];
    }
  for (Vertex j = 0; j < n; ++j) assert(out.vertex_mass[j] == pi[j]);
  return out;
}

namespace {

std::vector<Vertex> members(std::uint64_t mask, std::size_t n) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (mask >> v & 1) out.push_back(v);
  return out;
}

}  // namespace

CheegerResult cheeger_constant(const Orbigraph& g, std::size_t max_vertices) {
  g.require_connected("cheeger_constant");
  const std::size_t n = g.size();
  if (n < 2) throw OrbigraphError(ErrorKind::TooSmall, "Cheeger constant needs at least two vertices");
  if (n > max_vertices || n > 62)
    throw OrbigraphError(ErrorKind::TooLarge,
                         std::to_string(n) + " vertices exceeds the limit of " + std::to_string(max_vertices));

  // With pi_j = q_j / L the ratio is sum_{i in S, j notin S} q_i A_ij / (k * min(q(S), q(S-bar))),
  // so everything can be compared on integers.
  const RationalVector pi = stationary_distribution(g);
  BigInt common = 1;
  for (const auto& x : pi) {
    const BigInt den = boost::multiprecision::denominator(x);
    common = common / boost::multiprecision::gcd(common, den) * den;
  }
  std::vector<BigInt> q(n);
  for (Vertex i = 0; i < n; ++i) q[i] = boost::multiprecision::numerator(Rational(pi[i] * common));
  BigInt total = 0;
  for (const auto& x : q) total += x;

  BigInt best_num = -1;
  BigInt best_den = 1;
  std::vector<Vertex> best_set;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    BigInt boundary = 0;
    BigInt inside = 0;
    for (Vertex i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      inside += q[i];
      for (Vertex j = 0; j < n; ++j)
        if (!(mask >> j & 1) && g(i, j) != 0) boundary += q[i] * g(i, j);
    }
    const BigInt smaller = std::min(inside, BigInt(total - inside));
    const BigInt num = boundary;
    const BigInt den = smaller * g.degree();
    bool better = best_num < 0;
    if (!better) {
      const BigInt lhs = num * best_den;
      const BigInt rhs = best_num * den;
      if (lhs < rhs) {
        better = true;
      } else if (lhs == rhs) {
        better = members(mask, n) < best_set;
      }
    }
    if (better) {
      best_num = num;
      best_den = den;
      best_set = members(mask, n);
    }
  }
  return {Rational(best_num, best_den), best_set};
}

CheegerBound cheeger_bound_check(const Orbigraph& g, std::size_t max_vertices) {
  const CheegerResult result = cheeger_constant(g, max_vertices);
  const std::size_t n = g.size();
  const BigInt denom = BigInt(n) * n * boost::multiprecision::pow(BigInt(g.degree()), static_cast<unsigned>(n));
  const Rational bound(BigInt(2), denom);
  return {result.h, bound, result.h >= bound};
}

}  // namespace orbigraph
