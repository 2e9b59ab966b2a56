// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "orbigraph/enumerate.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/properties.hpp"

using namespace orbigraph;

namespace {

constexpr double kEigenTol = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

bool roots_match(const Orbigraph& g, const std::vector<double>& expected) {
  const auto ev = eigenvalues(g, kEigenTol);
  if (ev.size() != expected.size()) return false;
  for (std::size_t i = 0; i < ev.size(); ++i)
    if (std::abs(ev[i].real() - expected[i]) > kEigenTol || std::abs(ev[i].imag()) > kEigenTol) return false;
  return true;
}

std::vector<BigInt> big(std::initializer_list<long long> xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

Outcome two_vertex_quotient() {
  Outcome o;
  const auto g = Orbigraph::validate(fixtures::kK4Quotient, 3);
  o.require(singular_vertices(g) == std::vector<Vertex>{0, 1}, "singular set");
  o.require(char_poly(g).coefficients() == big({-3, -2, 1}), "char poly");
  o.require(roots_match(g, {-1, 3}), "eigenvalues");
  o.require(stationary_distribution(g) == RationalVector{make_rational(3, 4), make_rational(1, 4)}, "pi");
  const auto cert = kolmogorov_certificate(g);
  o.require(cert.is_good() && cert.good.has_value(), "verdict");
  if (!o.pass) return o;
  const auto& w = *cert.good;
  o.require(w.cover.size() == 12 && w.partition.cell(0).size() == 9 && w.partition.cell(1).size() == 3,
            "cover sizes");
  o.require(verify_cover(w.cover.to_digraph(), w.partition, g).ok, "cover verification");
  const Digraph k4 = Digraph::from_rows(fixtures::kK4);
  o.require(verify_cover(k4, orbit_partition(k4, {{1, 2, 0, 3}}), g).ok, "K4 orbit cover");
  o.detail = "cover 12 = 9 + 3";
  return o;
}

Outcome seven_vertex_bad() {
  Outcome o;
  const auto cert = kolmogorov_certificate(fixtures::seven_bad());
  o.require(cert.verdict == Verdict::Bad && cert.bad.has_value(), "verdict");
  if (!o.pass) return o;
  const auto again = cycle_products(fixtures::seven_bad(), cert.bad->cycle);
  o.require(again.forward_product == 2 && again.reverse_product == 4, "products");
  o.require(cert.bad->forward_product == 2 && cert.bad->reverse_product == 4, "certificate products");
  o.detail = "forward 2 reverse 4";
  return o;
}

Outcome cospectral_pair() {
  Outcome o;
  const auto left = fixtures::cospectral_bad();
  const auto center = fixtures::cospectral_good();
  const auto poly = big({0, 6, -5, -2, 1});
  o.require(char_poly(left).coefficients() == poly && char_poly(center).coefficients() == poly, "char poly");
  o.require(roots_match(left, {-2, 0, 1, 3}) && roots_match(center, {-2, 0, 1, 3}), "eigenvalues");
  o.require(goodness_verdict(left) == Verdict::Bad, "left verdict");
  o.require(goodness_verdict(center) == Verdict::Good, "center verdict");
  const Digraph right = Digraph::from_rows(fixtures::kCospectralCover);
  const auto part = fixtures::cospectral_cover_partition();
  std::vector<std::size_t> sizes;
  for (const auto& c : part.cells()) sizes.push_back(c.size());
  o.require(sizes == std::vector<std::size_t>{1, 1, 2, 2}, "cell sizes");
  o.require(verify_cover(right, part, center).ok, "six-vertex cover");
  o.require(spectrum_divides(right, center), "spectrum divides");
  bool rediscovered = false;
  for (const auto& cls : find_cospectral_classes({4, 3, true, true})) {
    if (cls.poly.coefficients() != poly) continue;
    bool l = false, c = false;
    for (const auto& m : cls.members) {
      l = l || oracle::isomorphic(m.graph.rows(), fixtures::kCospectralBad);
      c = c || oracle::isomorphic(m.graph.rows(), fixtures::kCospectralGood);
    }
    rediscovered = l && c;
  }
  o.require(rediscovered, "cospectral class not rediscovered");
  o.detail = "cospectral pair rediscovered";
  return o;
}

Outcome run_properties(const std::vector<std::pair<const char*, std::string (*)(const Orbigraph&)>>& checks) {
  Outcome o;
  const auto graphs = corpus::small();
  for (const auto& g : graphs)
    for (const auto& [name, check] : checks) {
      const auto failure = check(g);
      o.require(failure.empty(), std::string(name) + ": " + failure + " on " + props::describe(g));
    }
  if (o.pass) o.detail = std::to_string(graphs.size()) + " orbigraphs";
  return o;
}

Outcome corpus_properties() {
  Outcome o = run_properties({{"goodness", props::goodness_equivalence},
                         {"min entry", props::min_entry_bound},
                         {"cheeger", props::cheeger_bound},
                         {"singular", props::singular_sandwich},
                         {"spectral", props::spectral_facts}});
  // Smallest h / (2 / (n^2 k^n)) seen: data on how far the Cheeger bound is from sharp.
  Rational best = -1;
  std::string where;
  for (const auto& g : corpus::small()) {
    if (g.size() < 2) continue;
    const auto c = cheeger_bound_check(g);
    const Rational ratio = c.h / c.bound;
    if (best < 0 || ratio < best) {
      best = ratio;
      where = props::describe(g);
    }
  }
  if (o.pass) o.detail += "; min h/bound " + to_string(best) + " at " + where;
  return o;
}

Outcome quotient_properties() { return run_properties({{"quotient", props::quotient_closure}}); }

Outcome cover_proportions() {
  Outcome o = run_properties({{"proportions", props::cover_proportions}});
  o.require(quotient_stationary(Digraph::from_rows(fixtures::kK4), VertexPartition(4, {{0, 1, 2}, {3}})) ==
                RationalVector{make_rational(3, 4), make_rational(1, 4)},
            "K4 proportions");
  o.require(quotient_stationary(Digraph::from_rows(fixtures::kCospectralCover), fixtures::cospectral_cover_partition()) ==
                RationalVector{make_rational(1, 6), make_rational(1, 6), make_rational(1, 3), make_rational(1, 3)},
            "six-vertex cover proportions");
  return o;
}

Outcome regular_cospectrality() {
  Outcome o;
  std::map<std::vector<BigInt>, std::pair<bool, bool>> seen;  // poly -> (simple regular, singular)
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (Weight k = 1; k <= 3; ++k)
      enumerate_orbigraphs({n, k, false, false}, [&](const Orbigraph& g) {
        ++count;
        const bool regular = is_simple_regular(g);
        o.require(spectral_regularity_test(g) == regular, "regularity test disagrees on " + props::describe(g));
        auto& entry = seen[char_poly(g).coefficients()];
        if (regular) entry.first = true;
        if (!singular_vertices(g).empty()) entry.second = true;
        return true;
      });
  for (const auto& [poly, flags] : seen) o.require(!(flags.first && flags.second), "regular/singular cospectral pair");
  if (o.pass) o.detail = std::to_string(count) + " orbigraphs, " + std::to_string(seen.size()) + " polynomials";
  return o;
}

Outcome lower_bound_tightness() {
  Outcome o;
  for (Weight k = 2; k <= 3; ++k)
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto g = Orbigraph::validate(fixtures::scaled_identity(n, k), std::nullopt, true);
      const auto b = singular_bounds(g);
      o.require(b.lower == Rational(n) && b.actual == n, "kI_n bound");
    }
  o.detail = "lower bound = n for k in {2,3}, n in {1,2,3}";
  return o;
}

Outcome cheeger_values() {
  Outcome o;
  const auto two_cycle = cheeger_bound_check(Orbigraph::validate(IntMatrix{{0, 1}, {1, 0}}));
  o.require(two_cycle.h == 1 && two_cycle.bound == Rational(BigInt(2), BigInt(4) * props::power(1, 2)), "2-cycle");
  const auto k4_quotient = cheeger_bound_check(fixtures::k4_quotient());
  // 2 / (n^2 k^n) at n = 2, k = 3 is 2/36. The listed 1/162 = 2/(4 * 3^4) does
  // not follow from the formula; h itself is exact either way.
  o.require(k4_quotient.h == 1 && k4_quotient.bound == Rational(BigInt(2), BigInt(4) * props::power(3, 2)), "two-vertex quotient");
  o.require(k4_quotient.bound != make_rational(1, 162) && k4_quotient.holds, "bound formula");
  o.detail = "2-cycle h = 1 vs bound 1/2; two-vertex quotient h = 1 vs bound 1/18 (listed as 1/162, which is 2/(4*3^4))";
  return o;
}

// The worked examples are all covered above; nothing large-scale exists to
// reproduce. This records that the criteria above ran to completion.
Outcome worked_examples_note(bool earlier_all_ran) {
  Outcome o;
  o.require(earlier_all_ran, "an earlier criterion did not run");
  o.detail = "no large-scale experiments to reproduce; worked examples covered by criteria 1-3, 8, 9";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  bool all_ran = true;
  const std::vector<Criterion> criteria = {
      {1, "two-vertex quotient pipeline", 1, two_vertex_quotient},
      {2, "seven-vertex bad witness", 1, seven_vertex_bad},
      {3, "cospectral bad/good pair", 60, cospectral_pair},
      {4, "corpus properties", 300, corpus_properties},
      {5, "quotient closure and transitivity", 300, quotient_properties},
      {6, "cover cell proportions", 300, cover_proportions},
      {7, "regular/singular cospectrality", 600, regular_cospectrality},
      {8, "singular lower bound tightness", 1, lower_bound_tightness},
      {9, "exact Cheeger values", 1, cheeger_values},
      {10, "worked examples reproduced", 1, [&] { return worked_examples_note(all_ran); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
      all_ran = false;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      o.pass = false;
      o.detail += " (exceeded " + std::to_string(static_cast<int>(c.limit_seconds)) + " s)";
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %2d: %s [%.3f s] %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
