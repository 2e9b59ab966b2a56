#include "doctest.h"
#include "orbigraph/enumerate.hpp"
#include "orbigraph/error.hpp"
#include "orbigraph/goodness.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace orbigraph;

TEST_CASE("two-vertex 3-orbigraphs") {
  const auto labeled = enumerate_orbigraphs({2, 3, true, false});
  CHECK(labeled.size() == 9);
  const auto classes = enumerate_orbigraphs({2, 3, true, true});
  CHECK(classes.size() == 6);
}

TEST_CASE("enumeration counts agree with exhaustive matrix search") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (Weight k = 1; k <= 3; ++k)
      for (bool conn : {false, true}) {
        CAPTURE(n);
        CAPTURE(k);
        CHECK(enumerate_orbigraphs({n, k, conn, false}).size() == oracle::count_orbigraphs(n, k, conn));
      }
  CHECK(enumerate_orbigraphs({4, 1, false, false}).size() == oracle::count_orbigraphs(4, 1, false));
}

TEST_CASE("labeled enumeration is lexicographic and duplicate-free") {
  const auto all = enumerate_orbigraphs({3, 2, false, false});
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].rows() < all[i].rows());
}

TEST_CASE("up-to-isomorphism enumeration picks one per class") {
  const auto labeled = enumerate_orbigraphs({3, 2, true, false});
  const auto reps = enumerate_orbigraphs({3, 2, true, true});
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(oracle::isomorphic(reps[i].rows(), reps[j].rows()));
  for (const auto& g : labeled) {
    int hits = 0;
    for (const auto& r : reps) hits += oracle::isomorphic(g.rows(), r.rows());
    CHECK(hits == 1);
  }
}

TEST_CASE("canonical form is an isomorphism invariant") {
  const auto g = fixtures::cospectral_good();
  const IntMatrix relabeled = {{1, 1, 0, 1}, {1, 1, 1, 0}, {0, 2, 0, 1}, {2, 0, 1, 0}};
  REQUIRE(oracle::isomorphic(g.rows(), relabeled));
  CHECK(canonical_form(g) == canonical_form(Orbigraph::validate(relabeled)));
  CHECK_FALSE(canonical_form(g) == canonical_form(fixtures::cospectral_bad()));
}

TEST_CASE("streaming stops when the sink declines") {
  std::size_t seen = 0;
  enumerate_orbigraphs({3, 3, true, false}, [&](const Orbigraph&) { return ++seen < 4; });
  CHECK(seen == 4);
}

TEST_CASE("budget is enforced") {
  EnumerationSpec spec{4, 3, true, false};
  spec.budget = 10;
  CHECK_THROWS_AS(enumerate_orbigraphs(spec), OrbigraphError);
}

TEST_CASE("the cospectral search finds the bad/good pair on 4 vertices") {
  const auto classes = find_cospectral_classes({4, 3, true, true});
  const auto target = char_poly(fixtures::cospectral_good());
  bool found = false;
  for (const auto& cls : classes) {
    if (!(cls.poly == target)) continue;
    bool has_left = false, has_center = false;
    for (const auto& m : cls.members) {
      if (oracle::isomorphic(m.graph.rows(), fixtures::kCospectralBad)) {
        has_left = true;
        CHECK(m.verdict == Verdict::Bad);
      }
      if (oracle::isomorphic(m.graph.rows(), fixtures::kCospectralGood)) {
        has_center = true;
        CHECK(m.verdict == Verdict::Good);
      }
    }
    found = has_left && has_center;
  }
  CHECK(found);
}
