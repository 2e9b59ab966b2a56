#include "orbigraph/goodness.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "orbigraph/error.hpp"
#include "orbigraph/markov.hpp"

namespace orbigraph {

namespace {

// Support graphs of realistic covers stay far below this.
constexpr std::size_t kMaxCoverVertices = 5'000'000;

struct DepthFirstTree {
  std::vector<Vertex> parent;  // parent[root] == root
  std::vector<std::size_t> order;  // discovery index
  std::vector<std::size_t> depth;
};

DepthFirstTree depth_first_tree(const Orbigraph& g) {
  const std::size_t n = g.size();
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  DepthFirstTree t{std::vector<Vertex>(n, 0), std::vector<std::size_t>(n, unseen), std::vector<std::size_t>(n, 0)};
  std::size_t clock = 0;
  std::vector<std::pair<Vertex, Vertex>> stack;  // (vertex, next neighbor to try)
  t.order[0] = clock++;
  stack.emplace_back(0, 0);
  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    while (next < n && (next == u || g(u, next) == 0 || t.order[next] != unseen)) ++next;
    if (next == n) {
      stack.pop_back();
      continue;
    }
    const Vertex v = next++;
    t.parent[v] = u;
    t.depth[v] = t.depth[u] + 1;
    t.order[v] = clock++;
    stack.emplace_back(v, 0);
  }
  return t;
}

// Tree path from `from` to `to`, both endpoints included.
std::vector<Vertex> tree_path(const DepthFirstTree& t, Vertex from, Vertex to) {
  std::vector<Vertex> up;    // from .. lca
  std::vector<Vertex> down;  // to .. (child of lca)
  Vertex a = from;
  Vertex b = to;
  while (t.depth[a] > t.depth[b]) {
    up.push_back(a);
    a = t.parent[a];
  }
  while (t.depth[b] > t.depth[a]) {
    down.push_back(b);
    b = t.parent[b];
  }
  while (a != b) {
    up.push_back(a);
    down.push_back(b);
    a = t.parent[a];
    b = t.parent[b];
  }
  up.push_back(a);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

std::optional<BadCycle> find_unbalanced_cycle(const Orbigraph& g) {
  g.require_connected("goodness");
  const std::size_t n = g.size();
  const DepthFirstTree tree = depth_first_tree(g);

  // Potentials in discovery order, so each parent is assigned before its children.
  std::vector<Vertex> by_order(n);
  for (Vertex v = 0; v < n; ++v) by_order[tree.order[v]] = v;
  RationalVector phi(n);
  phi[0] = 1;
  for (std::size_t idx = 1; idx < n; ++idx) {
    const Vertex v = by_order[idx];
    const Vertex u = tree.parent[v];
    phi[v] = phi[u] * Rational(BigInt(g(u, v)), BigInt(g(v, u)));
  }

  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (g(i, j) == 0 || tree.parent[i] == j || tree.parent[j] == i) continue;
      if (phi[i] * g(i, j) == phi[j] * g(j, i)) continue;
      const auto [a, b] = tree.order[i] < tree.order[j] ? std::pair{i, j} : std::pair{j, i};
      std::vector<Vertex> cycle = tree_path(tree, a, b);
      cycle.push_back(a);
      return cycle_products(g, cycle);
    }
  }
  return std::nullopt;
}

BigInt lcm_big(const BigInt& a, const BigInt& b) { return a / boost::multiprecision::gcd(a, b) * b; }

}  // namespace

BadCycle cycle_products(const Orbigraph& g, const std::vector<Vertex>& closed_cycle) {
  if (closed_cycle.size() < 2 || closed_cycle.front() != closed_cycle.back())
    throw OrbigraphError(ErrorKind::InvalidArgument, "cycle must start and end at the same vertex");
  BadCycle out{closed_cycle, 1, 1};
  for (std::size_t s = 0; s + 1 < closed_cycle.size(); ++s) {
    const Vertex u = closed_cycle[s];
    const Vertex v = closed_cycle[s + 1];
    if (u >= g.size() || v >= g.size() || g(u, v) == 0)
      throw OrbigraphError(ErrorKind::InvalidArgument,
                           "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    out.forward_product *= g(u, v);
    out.reverse_product *= g(v, u);
  }
  return out;
}

Verdict goodness_verdict(const Orbigraph& g) { return find_unbalanced_cycle(g) ? Verdict::Bad : Verdict::Good; }

GoodnessCertificate kolmogorov_certificate(const Orbigraph& g) {
  if (auto cycle = find_unbalanced_cycle(g)) return {Verdict::Bad, std::move(cycle), std::nullopt};
  return {Verdict::Good, std::nullopt, build_cover(g)};
}

std::vector<BigInt> balance_vector(const Orbigraph& g) {
  const RationalVector pi = stationary_distribution(g);
  for (Vertex i = 0; i < g.size(); ++i)
    for (Vertex j = i + 1; j < g.size(); ++j)
      if (pi[i] * g(i, j) != pi[j] * g(j, i))
        throw OrbigraphError(ErrorKind::NotGood, "detailed balance fails at (" + std::to_string(i) + "," +
                                                     std::to_string(j) + ")");
  BigInt scale = 1;
  for (const auto& x : pi) scale = lcm_big(scale, boost::multiprecision::denominator(x));
  std::vector<BigInt> d;
  d.reserve(pi.size());
  BigInt common = 0;
  for (const auto& x : pi) {
    const Rational scaled = x * scale;
    d.push_back(boost::multiprecision::numerator(scaled));
    common = boost::multiprecision::gcd(common, d.back());
  }
  for (auto& x : d) x /= common;
  return d;
}

std::vector<Edge> biregular_bipartite(std::size_t n_a, std::size_t n_b, std::size_t a, std::size_t b) {
  if (a * n_a != b * n_b || a > n_b || b > n_a)
    throw OrbigraphError(ErrorKind::InfeasibleDegrees,
                         "no simple bipartite graph with " + std::to_string(n_a) + " vertices of degree " +
                             std::to_string(a) + " and " + std::to_string(n_b) + " of degree " + std::to_string(b));
  std::vector<std::size_t> residual(n_b, b);
  std::vector<std::size_t> rank(n_b);
  std::vector<Edge> edges;
  edges.reserve(a * n_a);
  for (std::size_t u = 0; u < n_a; ++u) {
    std::iota(rank.begin(), rank.end(), std::size_t{0});
    std::stable_sort(rank.begin(), rank.end(),
                     [&](std::size_t x, std::size_t y) { return residual[x] > residual[y]; });
    for (std::size_t t = 0; t < a; ++t) {
      const std::size_t v = rank[t];
      if (residual[v] == 0) throw OrbigraphError(ErrorKind::ConstructionFailed, "right side exhausted");
      --residual[v];
      edges.push_back({u, v});
    }
  }
  std::vector<std::size_t> left(n_a, 0), right(n_b, 0);
  for (const auto& e : edges) {
    ++left[e.u];
    ++right[e.v];
  }
  const bool degrees_ok = std::all_of(left.begin(), left.end(), [&](std::size_t d) { return d == a; }) &&
                          std::all_of(right.begin(), right.end(), [&](std::size_t d) { return d == b; });
  if (!degrees_ok) throw OrbigraphError(ErrorKind::ConstructionFailed, "bipartite degree check failed");
  return edges;
}

std::vector<Edge> circulant_regular(std::size_t n, std::size_t r) {
  if (r >= n)
    throw OrbigraphError(ErrorKind::InfeasibleDegrees,
                         "degree " + std::to_string(r) + " needs more than " + std::to_string(n) + " vertices");
  if (r % 2 == 1 && n % 2 == 1)
    throw OrbigraphError(ErrorKind::InfeasibleDegrees, "odd degree needs an even vertex count");
  std::vector<Edge> edges;
  for (std::size_t offset = 1; offset <= r / 2; ++offset)
    for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + offset) % n});
  if (r % 2 == 1)
    for (std::size_t i = 0; i < n / 2; ++i) edges.push_back({i, i + n / 2});
  return edges;
}

CoverWitness build_cover(const Orbigraph& g) {
  const std::vector<BigInt> d = balance_vector(g);
  const std::size_t n = g.size();

  BigInt c = 1;
  for (Vertex i = 0; i < n; ++i) {
    c = lcm_big(c, BigInt(g(i, i) + 1));
    for (Vertex j = 0; j < n; ++j)
      if (i != j && g(i, j) > 0) c = lcm_big(c, BigInt(g(i, j)));
  }

  std::vector<std::size_t> offset(n + 1, 0);
  for (Vertex i = 0; i < n; ++i) {
    const BigInt size = c * d[i];
    if (size > kMaxCoverVertices || offset[i] + size.convert_to<std::size_t>() > kMaxCoverVertices)
      throw OrbigraphError(ErrorKind::TooLarge, "cover would exceed " + std::to_string(kMaxCoverVertices) + " vertices");
    offset[i + 1] = offset[i] + size.convert_to<std::size_t>();
  }
  auto cell_size = [&](Vertex i) { return offset[i + 1] - offset[i]; };

  SimpleGraph cover(offset[n]);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (g(i, j) == 0) continue;
      const auto block = biregular_bipartite(cell_size(i), cell_size(j), static_cast<std::size_t>(g(i, j)),
                                             static_cast<std::size_t>(g(j, i)));
      for (const auto& e : block) cover.add_edge(offset[i] + e.u, offset[j] + e.v);
    }
    if (g(i, i) > 0)
      for (const auto& e : circulant_regular(cell_size(i), static_cast<std::size_t>(g(i, i))))
        cover.add_edge(offset[i] + e.u, offset[i] + e.v);
  }

  std::vector<std::vector<Vertex>> cells(n);
  for (Vertex i = 0; i < n; ++i) {
    cells[i].resize(cell_size(i));
    std::iota(cells[i].begin(), cells[i].end(), offset[i]);
  }
  CoverWitness out{std::move(cover), VertexPartition(offset[n], std::move(cells)), d, c};
  if (!out.cover.is_simple()) throw OrbigraphError(ErrorKind::ConstructionFailed, "cover is not simple");
  if (auto check = verify_cover(out.cover.to_digraph(), out.partition, g); !check)
    throw OrbigraphError(ErrorKind::ConstructionFailed, check.reason);
  return out;
}

CoverWitness connected_cover(const Orbigraph& g) {
  CoverWitness full = build_cover(g);
  const Digraph doubled = full.cover.to_digraph();
  const std::vector<Vertex> component = doubled.component_of(0);
  if (component.size() == doubled.size()) return full;

  constexpr std::size_t absent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> relabel(doubled.size(), absent);
  for (std::size_t idx = 0; idx < component.size(); ++idx) relabel[component[idx]] = idx;

  SimpleGraph piece(component.size());
  for (const auto& e : full.cover.edges())
    if (relabel[e.u] != absent) piece.add_edge(relabel[e.u], relabel[e.v]);

  std::vector<std::vector<Vertex>> cells;
  for (const auto& cell : full.partition.cells()) {
    std::vector<Vertex> kept;
    for (Vertex v : cell)
      if (relabel[v] != absent) kept.push_back(relabel[v]);
    if (kept.empty())
      throw OrbigraphError(ErrorKind::ComponentQuotientMismatch, "component misses a cell of the partition");
    cells.push_back(std::move(kept));
  }
  VertexPartition restricted(component.size(), std::move(cells));
  if (auto check = verify_cover(piece.to_digraph(), restricted, g); !check)
    throw OrbigraphError(ErrorKind::ComponentQuotientMismatch, check.reason);
  return {std::move(piece), std::move(restricted), std::move(full.balance), std::move(full.scale)};
}

}  // namespace orbigraph
