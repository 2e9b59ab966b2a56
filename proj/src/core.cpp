#include "orbigraph/core.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "orbigraph/error.hpp"

namespace orbigraph {

Digraph Digraph::from_rows(const IntMatrix& rows) {
  if (rows.empty()) throw OrbigraphError(ErrorKind::EmptyMatrix, "matrix has no rows");
  const std::size_t n = rows.size();
  Digraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw OrbigraphError(ErrorKind::NotSquare,
                           "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                               " entries, expected " + std::to_string(n),
                           {.row = i});
    }
    for (std::size_t j = 0; j < n; ++j) g.at(i, j) = rows[i][j];
  }
  return g;
}

Weight Digraph::out_weight(Vertex i) const {
  const auto row = w_.begin() + static_cast<std::ptrdiff_t>(i * n_);
  return std::accumulate(row, row + static_cast<std::ptrdiff_t>(n_), Weight{0});
}

IntMatrix Digraph::rows() const {
  IntMatrix out(n_, std::vector<Weight>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

std::vector<Vertex> Digraph::component_of(Vertex start) const {
  std::vector<char> seen(n_, 0);
  std::queue<Vertex> frontier;
  seen[start] = 1;
  frontier.push(start);
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex v = 0; v < n_; ++v) {
      if (!seen[v] && ((*this)(u, v) != 0 || (*this)(v, u) != 0)) {
        seen[v] = 1;
        frontier.push(v);
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

bool Digraph::weakly_connected() const { return n_ == 0 || component_of(0).size() == n_; }

std::vector<std::size_t> SimpleGraph::degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

bool SimpleGraph::is_simple() const {
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& e : edges_) {
    if (e.u == e.v || e.u >= n_ || e.v >= n_) return false;
    if (!seen.insert(std::minmax(e.u, e.v)).second) return false;
  }
  return true;
}

Digraph SimpleGraph::to_digraph() const {
  Digraph g(n_);
  for (const auto& e : edges_) {
    g.at(e.u, e.v) += 1;
    if (e.u != e.v) g.at(e.v, e.u) += 1;
  }
  return g;
}

Orbigraph Orbigraph::validate(const IntMatrix& matrix, std::optional<Weight> expected_k, bool allow_disconnected) {
  return validate(Digraph::from_rows(matrix), expected_k, allow_disconnected);
}

Orbigraph Orbigraph::validate(const Digraph& adj, std::optional<Weight> expected_k, bool allow_disconnected) {
  const std::size_t n = adj.size();
  if (n == 0) throw OrbigraphError(ErrorKind::EmptyMatrix, "orbigraph needs at least one vertex");

  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (adj(i, j) < 0)
        throw OrbigraphError(ErrorKind::NegativeEntry,
                             "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is negative",
                             {.row = i, .column = j});

  const Weight k = expected_k.value_or(adj.out_weight(0));
  if (k <= 0) throw OrbigraphError(ErrorKind::RowSumMismatch, "row sums must be positive", {.row = Vertex{0}});
  for (Vertex i = 0; i < n; ++i) {
    const Weight s = adj.out_weight(i);
    if (s != k)
      throw OrbigraphError(ErrorKind::RowSumMismatch,
                           "row " + std::to_string(i) + " sums to " + std::to_string(s) + ", expected " +
                               std::to_string(k),
                           {.row = i});
  }

  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if ((adj(i, j) > 0) != (adj(j, i) > 0))
        throw OrbigraphError(ErrorKind::SupportAsymmetry,
                             "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is " +
                                 std::to_string(adj(i, j)) + " but (" + std::to_string(j) + "," +
                                 std::to_string(i) + ") is " + std::to_string(adj(j, i)),
                             {.row = i, .column = j});

  const bool connected = adj.weakly_connected();
  if (!connected && !allow_disconnected)
    throw OrbigraphError(ErrorKind::Disconnected, "support graph is not connected");
  return Orbigraph(adj, k, connected);
}

void Orbigraph::require_connected(const char* operation) const {
  if (!connected_)
    throw OrbigraphError(ErrorKind::Disconnected, std::string(operation) + " requires a connected orbigraph");
}

WeightMultiset::WeightMultiset(std::vector<Weight> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw OrbigraphError(ErrorKind::InvalidArgument, "weight multiset is empty");
  for (Weight w : weights_)
    if (w <= 0) throw OrbigraphError(ErrorKind::InvalidArgument, "weights must be positive");
  std::sort(weights_.begin(), weights_.end(), std::greater<>());
}

Weight WeightMultiset::total() const { return std::accumulate(weights_.begin(), weights_.end(), Weight{0}); }

bool WeightMultiset::all_ones() const {
  return std::all_of(weights_.begin(), weights_.end(), [](Weight w) { return w == 1; });
}

std::vector<Vertex> singular_vertices(const Orbigraph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.size(); ++v) {
    for (Vertex u = 0; u < g.size(); ++u) {
      if (g(v, u) >= 2) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

WeightMultiset local_model(const Orbigraph& g, Vertex v) {
  if (v >= g.size())
    throw OrbigraphError(ErrorKind::VertexOutOfRange,
                         "vertex " + std::to_string(v) + " not in 0.." + std::to_string(g.size() - 1));
  std::vector<Weight> weights;
  for (Vertex u = 0; u < g.size(); ++u)
    if (g(v, u) > 0) weights.push_back(g(v, u));
  return WeightMultiset(std::move(weights));
}

namespace {

void partitions_into(Weight remaining, Weight largest, std::vector<Weight>& prefix,
                     std::vector<WeightMultiset>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (Weight part = std::min(remaining, largest); part >= 1; --part) {
    prefix.push_back(part);
    partitions_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<WeightMultiset> star_quotient_models(Weight k) {
  if (k < 1) throw OrbigraphError(ErrorKind::InvalidArgument, "k must be positive");
  std::vector<WeightMultiset> out;
  std::vector<Weight> prefix;
  partitions_into(k, k, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_simple_regular(const Orbigraph& g) {
  for (Vertex i = 0; i < g.size(); ++i) {
    if (g(i, i) != 0) return false;
    for (Vertex j = 0; j < g.size(); ++j)
      if (g(i, j) > 1) return false;
  }
  return true;
}

}  // namespace orbigraph
