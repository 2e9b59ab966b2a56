#pragma once

#include "orbigraph/core.hpp"
#include "orbigraph/numeric.hpp"
#include "orbigraph/partition.hpp"

namespace orbigraph {

// P = A / k, exactly. Throws Disconnected.
RationalMatrix transition_matrix(const Orbigraph& g);

// Unique pi with pi P = pi and sum(pi) = 1. Throws Disconnected.
RationalVector stationary_distribution(const Orbigraph& g);

struct MinEntryBound {
  Rational pi_min;
  Rational bound;  // 1 / (n k^(n-1))
  bool holds;
};

MinEntryBound stationary_min_bound(const Orbigraph& g);

// pi_i P_ij == pi_j P_ji for every pair, exactly. Throws Disconnected.
bool detailed_balance_holds(const Orbigraph& g);

// Cell sizes over N for an equitable partition of a regular cover. Throws NotEquitable.
RationalVector quotient_stationary(const Digraph& cover, const VertexPartition& p);

}  // namespace orbigraph
