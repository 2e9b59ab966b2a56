#include "orbigraph/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "orbigraph/error.hpp"

namespace orbigraph {

namespace {

// All length-n vectors of nonnegative integers summing to k, lexicographically ascending.
std::vector<std::vector<Weight>> compositions(std::size_t n, Weight k) {
  std::vector<std::vector<Weight>> out;
  std::vector<Weight> cur(n, 0);
  auto rec = [&](auto&& self, std::size_t pos, Weight remaining) -> void {
    if (pos + 1 == n) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (Weight w = 0; w <= remaining; ++w) {
      cur[pos] = w;
      self(self, pos + 1, remaining - w);
    }
  };
  rec(rec, 0, k);
  return out;
}

class Enumerator {
 public:
  Enumerator(const EnumerationSpec& spec, const OrbigraphSink& sink)
      : spec_(spec), sink_(sink), rows_(compositions(spec.n, spec.k)), matrix_(spec.n) {}

  void run() { descend(0); }

 private:
  bool descend(std::size_t row) {
    if (++visited_ > spec_.budget)
      throw OrbigraphError(ErrorKind::BudgetExceeded,
                           "enumeration visited more than " + std::to_string(spec_.budget) + " nodes");
    if (row == spec_.n) return emit();
    for (const auto& candidate : rows_) {
      bool consistent = true;
      for (std::size_t j = 0; j < row && consistent; ++j)
        consistent = (candidate[j] > 0) == (matrix_[j][row] > 0);
      if (!consistent) continue;
      matrix_[row] = candidate;
      if (!descend(row + 1)) return false;
    }
    return true;
  }

  bool emit() {
    const Orbigraph g = Orbigraph::validate(matrix_, spec_.k, /*allow_disconnected=*/true);
    if (spec_.connected_only && !g.connected()) return true;
    if (spec_.up_to_iso && canonical_form(g) != matrix_) return true;
    return sink_(g);
  }

  const EnumerationSpec& spec_;
  const OrbigraphSink& sink_;
  std::vector<std::vector<Weight>> rows_;
  IntMatrix matrix_;
  std::size_t visited_ = 0;
};

}  // namespace

void enumerate_orbigraphs(const EnumerationSpec& spec, const OrbigraphSink& sink) {
  if (spec.n < 1 || spec.k < 1) throw OrbigraphError(ErrorKind::InvalidArgument, "n and k must be positive");
  if (spec.up_to_iso && spec.n > kCanonicalFormMaxVertices)
    throw OrbigraphError(ErrorKind::TooLarge, "isomorphism classes need n <= 8");
  Enumerator(spec, sink).run();
}

std::vector<Orbigraph> enumerate_orbigraphs(const EnumerationSpec& spec) {
  std::vector<Orbigraph> out;
  enumerate_orbigraphs(spec, [&](const Orbigraph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

IntMatrix canonical_form(const Orbigraph& g) {
  const std::size_t n = g.size();
  if (n > kCanonicalFormMaxVertices)
    throw OrbigraphError(ErrorKind::TooLarge, "canonical form needs n <= 8, got " + std::to_string(n));
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::vector<Weight> best;
  std::vector<Weight> cur(n * n);
  do {
    // Row-major entries of P A P^T where new vertex i is old vertex perm[i].
    bool smaller = best.empty();
    bool decided = smaller;
    for (std::size_t idx = 0; idx < n * n; ++idx) {
      cur[idx] = g(perm[idx / n], perm[idx % n]);
      if (!decided && cur[idx] != best[idx]) {
        smaller = cur[idx] < best[idx];
        decided = true;
        if (!smaller) break;
      }
    }
    if (smaller) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));

  IntMatrix out(n, std::vector<Weight>(n));
  for (std::size_t idx = 0; idx < n * n; ++idx) out[idx / n][idx % n] = best[idx];
  return out;
}

std::vector<CospectralClass> find_cospectral_classes(const EnumerationSpec& spec) {
  std::vector<CospectralClass> groups;
  std::map<std::vector<BigInt>, std::size_t> index;
  enumerate_orbigraphs(spec, [&](const Orbigraph& g) {
    IntPolynomial poly = char_poly(g);
    auto [it, fresh] = index.try_emplace(poly.coefficients(), groups.size());
    if (fresh) groups.push_back({std::move(poly), {}});
    std::optional<Verdict> verdict;
    if (g.connected()) verdict = goodness_verdict(g);
    groups[it->second].members.push_back({g, verdict});
    return true;
  });
  std::vector<CospectralClass> out;
  for (auto& group : groups)
    if (group.members.size() >= 2) out.push_back(std::move(group));
  return out;
}

}  // namespace orbigraph
