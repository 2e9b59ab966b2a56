#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace orbigraph {

using Vertex = std::size_t;
using Weight = std::int64_t;
using IntMatrix = std::vector<std::vector<Weight>>;

// Dense weighted directed graph; entry (i, j) is the weight of edge i -> j.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n) : n_(n), w_(n * n, 0) {}

  // Throws EmptyMatrix / NotSquare.
  static Digraph from_rows(const IntMatrix& rows);

  std::size_t size() const noexcept { return n_; }
  Weight operator()(Vertex i, Vertex j) const { return w_[i * n_ + j]; }
  Weight& at(Vertex i, Vertex j) { return w_[i * n_ + j]; }

  Weight out_weight(Vertex i) const;
  IntMatrix rows() const;

  // Connectivity of the underlying undirected support.
  bool weakly_connected() const;
  // Vertices reachable from `start` along support edges in either direction, ascending.
  std::vector<Vertex> component_of(Vertex start) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Weight> w_;
};

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected graph as an edge list. Simple means no loops and no repeated edges.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : n_(n) {}
  SimpleGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {}

  std::size_t size() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  void add_edge(Vertex u, Vertex v) { edges_.push_back({u, v}); }

  std::vector<std::size_t> degrees() const;
  bool is_simple() const;
  // Each undirected edge {u, v} becomes the pair of directed edges (u, v), (v, u).
  Digraph to_digraph() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

// A k-orbigraph: nonnegative integer adjacency with every row summing to k and
// symmetric support. Immutable once validated.
class Orbigraph {
 public:
  static Orbigraph validate(const Digraph& matrix, std::optional<Weight> expected_k = std::nullopt,
                            bool allow_disconnected = false);
  static Orbigraph validate(const IntMatrix& matrix, std::optional<Weight> expected_k = std::nullopt,
                            bool allow_disconnected = false);

  std::size_t size() const noexcept { return adj_.size(); }
  Weight degree() const noexcept { return k_; }
  bool connected() const noexcept { return connected_; }
  const Digraph& graph() const noexcept { return adj_; }
  Weight operator()(Vertex i, Vertex j) const { return adj_(i, j); }
  IntMatrix rows() const { return adj_.rows(); }

  // Throws Disconnected naming the operation.
  void require_connected(const char* operation) const;

  friend bool operator==(const Orbigraph& a, const Orbigraph& b) { return a.adj_ == b.adj_; }

 private:
  Orbigraph(Digraph adj, Weight k, bool connected) : adj_(std::move(adj)), k_(k), connected_(connected) {}

  Digraph adj_;
  Weight k_ = 0;
  bool connected_ = false;
};

inline Orbigraph validate_orbigraph(const IntMatrix& matrix, std::optional<Weight> expected_k = std::nullopt,
                                    bool allow_disconnected = false) {
  return Orbigraph::validate(matrix, expected_k, allow_disconnected);
}

// Out-neighborhood weights of a vertex: the star-quotient local model.
// Stored in non-increasing order.
class WeightMultiset {
 public:
  // Throws InvalidArgument unless all weights are positive.
  explicit WeightMultiset(std::vector<Weight> weights);

  const std::vector<Weight>& weights() const noexcept { return weights_; }
  Weight total() const;
  bool all_ones() const;

  friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;
  friend auto operator<=>(const WeightMultiset&, const WeightMultiset&) = default;

 private:
  std::vector<Weight> weights_;
};

// Vertices with some outgoing edge (loops included) of weight >= 2, ascending.
std::vector<Vertex> singular_vertices(const Orbigraph& g);

// Throws VertexOutOfRange.
WeightMultiset local_model(const Orbigraph& g, Vertex v);

// Every integer partition of k, sorted lexicographically on the non-increasing sequences.
std::vector<WeightMultiset> star_quotient_models(Weight k);

// True iff adj is 0/1 with zero diagonal.
bool is_simple_regular(const Orbigraph& g);

}  // namespace orbigraph
