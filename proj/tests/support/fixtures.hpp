#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "orbigraph/core.hpp"
#include "orbigraph/io.hpp"
#include "orbigraph/partition.hpp"

namespace fixtures {

using orbigraph::IntMatrix;
using orbigraph::Orbigraph;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string data_path(const std::string& name) { return std::string(ORBIGRAPH_TEST_DATA) + "/" + name; }

inline const IntMatrix kK4Quotient = {{2, 1}, {3, 0}};

inline const IntMatrix kSevenBad = {
    {0, 2, 0, 0, 0, 0, 1}, {1, 0, 1, 0, 1, 0, 0}, {0, 1, 0, 1, 0, 0, 1}, {0, 0, 2, 0, 1, 0, 0},
    {0, 1, 0, 1, 0, 1, 0}, {0, 0, 0, 0, 2, 0, 1}, {1, 0, 1, 0, 0, 1, 0},
};

inline const IntMatrix kCospectralBad = {{0, 1, 0, 2}, {1, 1, 1, 0}, {0, 2, 0, 1}, {1, 0, 1, 1}};
inline const IntMatrix kCospectralGood = {{0, 1, 0, 2}, {1, 0, 2, 0}, {0, 1, 1, 1}, {1, 0, 1, 1}};

// A 6-vertex simple 3-regular cover of kCospectralGood.
inline const IntMatrix kCospectralCover = {
    {0, 1, 0, 1, 0, 1}, {1, 0, 1, 0, 0, 1}, {0, 1, 0, 1, 1, 0},
    {1, 0, 1, 0, 1, 0}, {0, 0, 1, 1, 0, 1}, {1, 1, 0, 0, 1, 0},
};
inline orbigraph::VertexPartition cospectral_cover_partition() { return {6, {{1}, {2}, {3, 4}, {0, 5}}}; }

inline const IntMatrix kK4 = {{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}};

inline Orbigraph k4_quotient() { return Orbigraph::validate(kK4Quotient); }
inline Orbigraph seven_bad() { return Orbigraph::validate(kSevenBad); }
inline Orbigraph cospectral_bad() { return Orbigraph::validate(kCospectralBad); }
inline Orbigraph cospectral_good() { return Orbigraph::validate(kCospectralGood); }

inline IntMatrix scaled_identity(std::size_t n, orbigraph::Weight k) {
  IntMatrix m(n, std::vector<orbigraph::Weight>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = k;
  return m;
}

}  // namespace fixtures
