#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbigraph/core.hpp"

namespace orbigraph {

// Ordered list of disjoint, nonempty cells covering 0..n-1. Vertices within a
// cell are kept ascending; the cell order is significant (it is the vertex
// order of the quotient).
class VertexPartition {
 public:
  // Throws PartitionMismatch on overlap, gaps, empty cells or out-of-range vertices.
  VertexPartition(std::size_t n, std::vector<std::vector<Vertex>> cells);

  static VertexPartition singletons(std::size_t n);
  static VertexPartition single_cell(std::size_t n);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t cell_count() const noexcept { return cells_.size(); }
  const std::vector<std::vector<Vertex>>& cells() const noexcept { return cells_; }
  const std::vector<Vertex>& cell(std::size_t c) const { return cells_[c]; }
  std::size_t cell_of(Vertex v) const { return cell_index_[v]; }

  // n x m 0/1 characteristic matrix: entry (v, c) is 1 iff v is in cell c.
  IntMatrix incidence() const;

  friend bool operator==(const VertexPartition& a, const VertexPartition& b) { return a.cells_ == b.cells_; }

 private:
  std::size_t n_;
  std::vector<std::vector<Vertex>> cells_;
  std::vector<std::size_t> cell_index_;
};

// First place where the equitable condition breaks: two vertices of `from_cell`
// sending different total weight into `to_cell`.
struct EquitableViolation {
  std::size_t from_cell;
  std::size_t to_cell;
  Vertex first;
  Vertex second;
  Weight first_sum;
  Weight second_sum;

  std::string describe() const;
};

std::optional<EquitableViolation> find_equitable_violation(const Digraph& g, const VertexPartition& p);
bool is_equitable(const Digraph& g, const VertexPartition& p);
inline bool is_equitable(const Orbigraph& g, const VertexPartition& p) { return is_equitable(g.graph(), p); }

// Quotient by an equitable partition, validated as an orbigraph with the same
// degree. Connectivity is recorded, not enforced. Throws NotEquitable.
Orbigraph quotient(const Digraph& g, const VertexPartition& p);
inline Orbigraph quotient(const Orbigraph& g, const VertexPartition& p) { return quotient(g.graph(), p); }

using Permutation = std::vector<Vertex>;

// Orbits of the group generated by `generators`, each of which must be an
// automorphism of g. Cells are ordered by smallest member. Throws
// NotAnAutomorphism / InvalidArgument.
VertexPartition orbit_partition(const Digraph& g, const std::vector<Permutation>& generators);

// p2 partitions the cells of p1 (the vertices of g/p1); result cell c is the
// union of the p1 cells listed in p2's cell c.
VertexPartition compose_partitions(const Digraph& g, const VertexPartition& p1, const VertexPartition& p2);

// Coarsest equitable partition refining `seed`. Cells split by the vector of
// weights sent into every current cell; new cells keep the parent's position
// and are ordered by their smallest vertex.
VertexPartition coarsest_equitable_refinement(const Digraph& g, const VertexPartition& seed);

struct CoverCheck {
  bool ok = false;
  std::string reason;
  explicit operator bool() const noexcept { return ok; }
};

// True iff p is equitable on `cover` and the quotient equals `target` entrywise.
CoverCheck verify_cover(const Digraph& cover, const VertexPartition& p, const Orbigraph& target);

}  // namespace orbigraph
