#include "orbigraph/markov.hpp"

#include <algorithm>
#include <utility>

#include "orbigraph/error.hpp"

namespace orbigraph {

RationalMatrix transition_matrix(const Orbigraph& g) {
  g.require_connected("transition_matrix");
  const std::size_t n = g.size();
  RationalMatrix p(n, RationalVector(n));
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j) p[i][j] = Rational(BigInt(g(i, j)), BigInt(g.degree()));
  return p;
}

namespace {

// Solves (P^T - I) x = 0 with the normalization row sum(x) = 1 appended, by
// exact elimination. The pivot in each column is the first nonzero candidate.
RationalVector solve_stationary(const RationalMatrix& p) {
  const std::size_t n = p.size();
  RationalMatrix aug(n + 1, RationalVector(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = p[c][r] - (r == c ? Rational(1) : Rational(0));
    aug[r][n] = 0;
  }
  for (std::size_t c = 0; c < n; ++c) aug[n][c] = 1;
  aug[n][n] = 1;

  std::size_t row = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = row;
    while (pivot <= n && aug[pivot][col] == 0) ++pivot;
    if (pivot > n) throw OrbigraphError(ErrorKind::Disconnected, "stationary system is rank deficient");
    std::swap(aug[row], aug[pivot]);
    const Rational inv = Rational(1) / aug[row][col];
    for (std::size_t c = col; c <= n; ++c) aug[row][c] *= inv;
    for (std::size_t r = 0; r <= n; ++r) {
      if (r == row || aug[r][col] == 0) continue;
      const Rational factor = aug[r][col];
      for (std::size_t c = col; c <= n; ++c) aug[r][c] -= factor * aug[row][c];
    }
    ++row;
  }
  RationalVector pi(n);
  for (std::size_t i = 0; i < n; ++i) pi[i] = aug[i][n];
  return pi;
}

}  // namespace

RationalVector stationary_distribution(const Orbigraph& g) {
  return solve_stationary(transition_matrix(g));
}

MinEntryBound stationary_min_bound(const Orbigraph& g) {
  const RationalVector pi = stationary_distribution(g);
  const Rational pi_min = *std::min_element(pi.begin(), pi.end());
  const BigInt denom = BigInt(g.size()) * boost::multiprecision::pow(BigInt(g.degree()), static_cast<unsigned>(g.size() - 1));
  const Rational bound(BigInt(1), denom);
  return {pi_min, bound, pi_min >= bound};
}

bool detailed_balance_holds(const Orbigraph& g) {
  const RationalVector pi = stationary_distribution(g);
  // With P = A/k the common factor 1/k cancels.
  for (Vertex i = 0; i < g.size(); ++i)
    for (Vertex j = i + 1; j < g.size(); ++j)
      if (pi[i] * g(i, j) != pi[j] * g(j, i)) return false;
  return true;
}

RationalVector quotient_stationary(const Digraph& cover, const VertexPartition& p) {
  if (auto bad = find_equitable_violation(cover, p))
    throw OrbigraphError(ErrorKind::NotEquitable, bad->describe());
  RationalVector out;
  out.reserve(p.cell_count());
  for (const auto& cell : p.cells()) out.emplace_back(BigInt(cell.size()), BigInt(cover.size()));
  return out;
}

}  // namespace orbigraph
