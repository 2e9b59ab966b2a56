#pragma once

#include <vector>

#include "orbigraph/core.hpp"
#include "orbigraph/numeric.hpp"

namespace orbigraph {

// F(i, j) = pi_i P_ij and the inflow F(j) at each vertex.
struct Circulation {
  RationalMatrix flow;
  RationalVector vertex_mass;
};

// Throws Disconnected.
Circulation circulation(const Orbigraph& g);

struct CheegerResult {
  Rational h;
  std::vector<Vertex> argmin;  // lexicographically least minimizing S
};

inline constexpr std::size_t kDefaultCheegerMaxVertices = 20;

// Exact minimum over all nonempty proper subsets. Throws Disconnected,
// TooSmall (n == 1) or TooLarge (n > max_vertices).
CheegerResult cheeger_constant(const Orbigraph& g, std::size_t max_vertices = kDefaultCheegerMaxVertices);

struct CheegerBound {
  Rational h;
  Rational bound;  // 2 / (n^2 k^n)
  bool holds;
};

CheegerBound cheeger_bound_check(const Orbigraph& g, std::size_t max_vertices = kDefaultCheegerMaxVertices);

}  // namespace orbigraph
