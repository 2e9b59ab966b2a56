#pragma once

#include <optional>
#include <vector>

#include "orbigraph/core.hpp"
#include "orbigraph/numeric.hpp"
#include "orbigraph/partition.hpp"

namespace orbigraph {

enum class Verdict { Good, Bad };

// A directed cycle whose forward and reverse weight products differ.
// `cycle` is closed: cycle.front() == cycle.back().
struct BadCycle {
  std::vector<Vertex> cycle;
  BigInt forward_product;
  BigInt reverse_product;
};

// A simple k-regular graph with an equitable partition whose quotient is the
// orbigraph. Cell i holds scale * balance[i] vertices when produced by build_cover.
struct CoverWitness {
  SimpleGraph cover;
  VertexPartition partition;
  std::vector<BigInt> balance;
  BigInt scale;
};

struct GoodnessCertificate {
  Verdict verdict;
  std::optional<BadCycle> bad;
  std::optional<CoverWitness> good;

  bool is_good() const noexcept { return verdict == Verdict::Good; }
};

// Forward and reverse weight products along a closed vertex sequence. Throws
// InvalidArgument if the sequence is not closed or uses a non-edge.
BadCycle cycle_products(const Orbigraph& g, const std::vector<Vertex>& closed_cycle);

// Decides goodness via potentials on a depth-first spanning tree of the
// support (root 0, neighbors ascending). A failing non-tree edge {a, b}, with a
// discovered first, yields the fundamental cycle a -> ... -> b -> a along the
// tree. Good verdicts carry build_cover's output. Throws Disconnected.
GoodnessCertificate kolmogorov_certificate(const Orbigraph& g);

// Verdict only; no cover construction.
Verdict goodness_verdict(const Orbigraph& g);

// Minimal positive integer vector proportional to pi. Throws NotGood.
std::vector<BigInt> balance_vector(const Orbigraph& g);

// The constructive cover: c = lcm of nonzero off-diagonal entries and
// (diagonal + 1); cell i gets c * d_i vertices. Result may be disconnected.
// Throws NotGood.
CoverWitness build_cover(const Orbigraph& g);

// The component of build_cover containing vertex 0, with the partition
// restricted and re-verified. Throws NotGood / ComponentQuotientMismatch.
CoverWitness connected_cover(const Orbigraph& g);

// Simple bipartite graph with left degrees `a` and right degrees `b`. Left
// vertices are 0..n_a-1, right vertices are 0..n_b-1 in each returned edge
// (u on the left, v on the right). Throws InfeasibleDegrees / ConstructionFailed.
std::vector<Edge> biregular_bipartite(std::size_t n_a, std::size_t n_b, std::size_t a, std::size_t b);

// Simple r-regular circulant on n vertices. Throws InfeasibleDegrees.
std::vector<Edge> circulant_regular(std::size_t n, std::size_t r);

}  // namespace orbigraph
