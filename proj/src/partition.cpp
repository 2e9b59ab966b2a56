#include "orbigraph/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "orbigraph/error.hpp"

namespace orbigraph {

VertexPartition::VertexPartition(std::size_t n, std::vector<std::vector<Vertex>> cells)
    : n_(n), cells_(std::move(cells)), cell_index_(n, cells_.size()) {
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    auto& cell = cells_[c];
    if (cell.empty()) throw OrbigraphError(ErrorKind::PartitionMismatch, "cell " + std::to_string(c) + " is empty");
    std::sort(cell.begin(), cell.end());
    for (Vertex v : cell) {
      if (v >= n)
        throw OrbigraphError(ErrorKind::PartitionMismatch,
                             "vertex " + std::to_string(v) + " out of range for " + std::to_string(n) + " vertices");
      if (cell_index_[v] != cells_.size())
        throw OrbigraphError(ErrorKind::PartitionMismatch, "vertex " + std::to_string(v) + " appears twice");
      cell_index_[v] = c;
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (cell_index_[v] == cells_.size())
      throw OrbigraphError(ErrorKind::PartitionMismatch, "vertex " + std::to_string(v) + " is in no cell");
}

VertexPartition VertexPartition::singletons(std::size_t n) {
  std::vector<std::vector<Vertex>> cells(n);
  for (Vertex v = 0; v < n; ++v) cells[v] = {v};
  return VertexPartition(n, std::move(cells));
}

VertexPartition VertexPartition::single_cell(std::size_t n) {
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  return VertexPartition(n, {all});
}

IntMatrix VertexPartition::incidence() const {
  IntMatrix out(n_, std::vector<Weight>(cells_.size(), 0));
  for (Vertex v = 0; v < n_; ++v) out[v][cell_index_[v]] = 1;
  return out;
}

std::string EquitableViolation::describe() const {
  return "cell " + std::to_string(from_cell) + " -> cell " + std::to_string(to_cell) + ": vertex " +
         std::to_string(first) + " sends " + std::to_string(first_sum) + " but vertex " + std::to_string(second) +
         " sends " + std::to_string(second_sum);
}

namespace {

void require_matching(const Digraph& g, const VertexPartition& p) {
  if (p.vertex_count() != g.size())
    throw OrbigraphError(ErrorKind::PartitionMismatch, "partition covers " + std::to_string(p.vertex_count()) +
                                                           " vertices but graph has " + std::to_string(g.size()));
}

// Row v of the result is the weight v sends into each cell.
std::vector<std::vector<Weight>> cell_sums(const Digraph& g, const VertexPartition& p) {
  std::vector<std::vector<Weight>> sums(g.size(), std::vector<Weight>(p.cell_count(), 0));
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = 0; v < g.size(); ++v) sums[u][p.cell_of(v)] += g(u, v);
  return sums;
}

}  // namespace

std::optional<EquitableViolation> find_equitable_violation(const Digraph& g, const VertexPartition& p) {
  require_matching(g, p);
  const auto sums = cell_sums(g, p);
  for (std::size_t i = 0; i < p.cell_count(); ++i) {
    const Vertex head = p.cell(i).front();
    for (Vertex u : p.cell(i)) {
      for (std::size_t j = 0; j < p.cell_count(); ++j) {
        if (sums[u][j] != sums[head][j]) return EquitableViolation{i, j, head, u, sums[head][j], sums[u][j]};
      }
    }
  }
  return std::nullopt;
}

bool is_equitable(const Digraph& g, const VertexPartition& p) { return !find_equitable_violation(g, p); }

Orbigraph quotient(const Digraph& g, const VertexPartition& p) {
  if (auto bad = find_equitable_violation(g, p))
    throw OrbigraphError(ErrorKind::NotEquitable, bad->describe(), {.row = bad->from_cell, .column = bad->to_cell});
  const std::size_t m = p.cell_count();
  Digraph q(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex u = p.cell(i).front();
    for (Vertex v = 0; v < g.size(); ++v) q.at(i, p.cell_of(v)) += g(u, v);
  }
  return Orbigraph::validate(q, std::nullopt, /*allow_disconnected=*/true);
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

VertexPartition orbit_partition(const Digraph& g, const std::vector<Permutation>& generators) {
  const std::size_t n = g.size();
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    const auto& sigma = generators[gi];
    if (sigma.size() != n)
      throw OrbigraphError(ErrorKind::InvalidArgument, "generator " + std::to_string(gi) + " has wrong length");
    std::vector<char> hit(n, 0);
    for (Vertex v : sigma) {
      if (v >= n || hit[v])
        throw OrbigraphError(ErrorKind::InvalidArgument, "generator " + std::to_string(gi) + " is not a permutation");
      hit[v] = 1;
    }
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (g(u, v) != g(sigma[u], sigma[v]))
          throw OrbigraphError(ErrorKind::NotAnAutomorphism,
                               "generator " + std::to_string(gi) + " maps edge (" + std::to_string(u) + "," +
                                   std::to_string(v) + ") of weight " + std::to_string(g(u, v)) + " to weight " +
                                   std::to_string(g(sigma[u], sigma[v])),
                               {.row = u, .column = v});
  }

  UnionFind uf(n);
  for (const auto& sigma : generators)
    for (Vertex v = 0; v < n; ++v) uf.unite(v, sigma[v]);

  std::map<std::size_t, std::vector<Vertex>> orbits;
  for (Vertex v = 0; v < n; ++v) orbits[uf.find(v)].push_back(v);
  std::vector<std::vector<Vertex>> cells;
  for (auto& [root, members] : orbits) cells.push_back(std::move(members));
  return VertexPartition(n, std::move(cells));
}

VertexPartition compose_partitions(const Digraph& g, const VertexPartition& p1, const VertexPartition& p2) {
  const Orbigraph middle = quotient(g, p1);
  if (p2.vertex_count() != p1.cell_count())
    throw OrbigraphError(ErrorKind::PartitionMismatch, "second partition must partition the cells of the first");
  if (auto bad = find_equitable_violation(middle.graph(), p2))
    throw OrbigraphError(ErrorKind::NotEquitable, "on the intermediate quotient: " + bad->describe());

  std::vector<std::vector<Vertex>> cells;
  cells.reserve(p2.cell_count());
  for (const auto& group : p2.cells()) {
    std::vector<Vertex> merged;
    for (std::size_t c : group) merged.insert(merged.end(), p1.cell(c).begin(), p1.cell(c).end());
    cells.push_back(std::move(merged));
  }
  return VertexPartition(g.size(), std::move(cells));
}

VertexPartition coarsest_equitable_refinement(const Digraph& g, const VertexPartition& seed) {
  require_matching(g, seed);
  VertexPartition current = seed;
  while (true) {
    const auto sums = cell_sums(g, current);
    std::vector<std::vector<Vertex>> next;
    for (const auto& cell : current.cells()) {
      // Cell members are ascending, so first occurrence orders sub-cells by smallest vertex.
      std::vector<std::vector<Weight>> signatures;
      std::vector<std::vector<Vertex>> split;
      for (Vertex v : cell) {
        auto it = std::find(signatures.begin(), signatures.end(), sums[v]);
        if (it == signatures.end()) {
          signatures.push_back(sums[v]);
          split.push_back({v});
        } else {
          split[static_cast<std::size_t>(it - signatures.begin())].push_back(v);
        }
      }
      for (auto& s : split) next.push_back(std::move(s));
    }
    if (next.size() == current.cell_count()) return current;
    current = VertexPartition(g.size(), std::move(next));
  }
}

CoverCheck verify_cover(const Digraph& cover, const VertexPartition& p, const Orbigraph& target) {
  if (p.vertex_count() != cover.size())
    return {false, "partition covers " + std::to_string(p.vertex_count()) + " vertices, cover has " +
                       std::to_string(cover.size())};
  if (p.cell_count() != target.size())
    return {false, "partition has " + std::to_string(p.cell_count()) + " cells, target has " +
                       std::to_string(target.size()) + " vertices"};
  if (auto bad = find_equitable_violation(cover, p)) return {false, "not equitable: " + bad->describe()};
  for (std::size_t i = 0; i < p.cell_count(); ++i) {
    const Vertex u = p.cell(i).front();
    std::vector<Weight> row(p.cell_count(), 0);
    for (Vertex v = 0; v < cover.size(); ++v) row[p.cell_of(v)] += cover(u, v);
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != target(i, j))
        return {false, "quotient entry (" + std::to_string(i) + "," + std::to_string(j) + ") is " +
                           std::to_string(row[j]) + ", target has " + std::to_string(target(i, j))};
  }
  return {true, "ok"};
}

}  // namespace orbigraph
