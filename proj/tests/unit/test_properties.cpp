#include "doctest.h"
#include "support/corpus.hpp"
#include "support/properties.hpp"

namespace {

const std::vector<orbigraph::Orbigraph>& graphs() {
  static const auto all = corpus::small();
  return all;
}

void check_all(std::string (*property)(const orbigraph::Orbigraph&)) {
  REQUIRE(graphs().size() > 100);
  for (const auto& g : graphs()) {
    const auto failure = property(g);
    INFO(props::describe(g));
    CHECK_MESSAGE(failure.empty(), failure);
  }
}

}  // namespace

TEST_CASE("property: goodness criteria agree") { check_all(props::goodness_equivalence); }
TEST_CASE("property: stationary minimum bound") { check_all(props::min_entry_bound); }
TEST_CASE("property: Cheeger lower bound") { check_all(props::cheeger_bound); }
TEST_CASE("property: singular vertex bounds") { check_all(props::singular_sandwich); }
TEST_CASE("property: spectral identities") { check_all(props::spectral_facts); }
TEST_CASE("property: quotient closure and composition") { check_all(props::quotient_closure); }
TEST_CASE("property: cover cell proportions") { check_all(props::cover_proportions); }
