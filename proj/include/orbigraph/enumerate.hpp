#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "orbigraph/core.hpp"
#include "orbigraph/goodness.hpp"
#include "orbigraph/spectral.hpp"

namespace orbigraph {

struct EnumerationSpec {
  std::size_t n = 1;
  Weight k = 1;
  bool connected_only = false;
  bool up_to_iso = false;
  // Maximum number of search-tree nodes (partial rows) to visit.
  std::size_t budget = 50'000'000;
};

// Return false to stop the stream early.
using OrbigraphSink = std::function<bool(const Orbigraph&)>;

// Streams every k-orbigraph on n labeled vertices in lexicographic row-major
// order. With up_to_iso, only the canonical representative of each class is
// emitted. Throws BudgetExceeded / InvalidArgument.
void enumerate_orbigraphs(const EnumerationSpec& spec, const OrbigraphSink& sink);
std::vector<Orbigraph> enumerate_orbigraphs(const EnumerationSpec& spec);

inline constexpr std::size_t kCanonicalFormMaxVertices = 8;

// Lexicographically least row-major matrix over all simultaneous row/column
// permutations. Throws TooLarge when n > 8.
IntMatrix canonical_form(const Orbigraph& g);

struct CospectralMember {
  Orbigraph graph;
  std::optional<Verdict> verdict;  // absent for disconnected members
};

struct CospectralClass {
  IntPolynomial poly;
  std::vector<CospectralMember> members;
};

// Enumerated orbigraphs grouped by characteristic polynomial; only groups of
// two or more, in order of first appearance.
std::vector<CospectralClass> find_cospectral_classes(const EnumerationSpec& spec);

}  // namespace orbigraph
