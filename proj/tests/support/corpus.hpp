#pragma once

#include <vector>

#include "orbigraph/enumerate.hpp"

namespace corpus {

// Every connected labeled k-orbigraph with n <= 4 and k <= 3, plus one
// representative of each isomorphism class of connected orbigraphs with
// n = 5 and k <= 2.
inline std::vector<orbigraph::Orbigraph> small() {
  std::vector<orbigraph::Orbigraph> out;
  for (std::size_t n = 1; n <= 4; ++n)
    for (orbigraph::Weight k = 1; k <= 3; ++k)
      for (auto& g : orbigraph::enumerate_orbigraphs({n, k, true, false})) out.push_back(std::move(g));
  for (orbigraph::Weight k = 1; k <= 2; ++k)
    for (auto& g : orbigraph::enumerate_orbigraphs({5, k, true, true})) out.push_back(std::move(g));
  return out;
}

}  // namespace corpus
