#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "orbigraph/cli.hpp"
#include "support/fixtures.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = orbigraph::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  return fixtures::read_file(std::string(ORBIGRAPH_TEST_GOLDEN) + "/" + name);
}

using fixtures::data_path;

}  // namespace

TEST_CASE("cli exit codes") {
  CHECK(run({"validate", data_path("k4_quotient.obg")}).code == 0);
  CHECK(run({"validate", data_path("asym.obg")}).code == 1);
  CHECK(run({"validate", data_path("syntax.obg")}).code == 2);
  CHECK(run({"validate", data_path("missing.obg")}).code == 2);
  CHECK(run({"goodness", data_path("seven_bad.obg")}).code == 3);
  CHECK(run({"quotient", data_path("cospectral_cover.obg"), data_path("cospectral_cover_bad.part")}).code == 4);
  CHECK(run({"frobnicate"}).code == 2);
  // Several files: the worst outcome wins.
  CHECK(run({"goodness", data_path("k4_quotient.obg"), data_path("seven_bad.obg")}).code == 3);
}

TEST_CASE("goodness text names the witness cycle") {
  const auto r = run({"goodness", data_path("seven_bad.obg")});
  CHECK(r.out.find("bad; cycle 0 1 2 3 4 5 6 0 forward 2 reverse 4") != std::string::npos);
}

TEST_CASE("quotient prints the quotient orbigraph") {
  const auto r = run({"quotient", data_path("k4.obg"), data_path("k4.part")});
  CHECK(r.code == 0);
  CHECK(orbigraph::parse_orbigraph(r.out) == fixtures::k4_quotient());
}

TEST_CASE("errors in json mode are structured") {
  const auto r = run({"validate", "--json", data_path("rowsum.obg")});
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["ok"] == false);
  CHECK(j["error"]["kind"] == "RowSumMismatch");
  CHECK(j["error"]["line"] == 3);
}

TEST_CASE("certificate files for good and bad orbigraphs") {
  const auto dir = std::filesystem::temp_directory_path() / "orbigraph_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  CHECK(run({"goodness", data_path("k4_quotient.obg"), "--certificate", dir.string()}).code == 0);
  const auto cover = orbigraph::parse_orbigraph(fixtures::read_file((dir / "k4_quotient.cover.obg").string()));
  const auto part = orbigraph::parse_partition(fixtures::read_file((dir / "k4_quotient.cover.part").string()), cover.size());
  CHECK(orbigraph::verify_cover(cover.graph(), part, fixtures::k4_quotient()).ok);
  CHECK(run({"goodness", data_path("seven_bad.obg"), "--certificate", dir.string()}).code == 3);
  CHECK(std::filesystem::exists(dir / "seven_bad.witness.txt"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("golden json outputs") {
  std::filesystem::current_path(ORBIGRAPH_TEST_DATA);
  CHECK(run({"goodness", "--json", "seven_bad.obg"}).out == golden("goodness_seven_bad.json"));
  CHECK(run({"spectrum", "--json", "cospectral_bad.obg"}).out == golden("spectrum_cospectral_bad.json"));
  CHECK(run({"info", "--json", "k4_quotient.obg"}).out == golden("info_k4_quotient.json"));
  CHECK(run({"cheeger", "--json", "k4_quotient.obg"}).out == golden("cheeger_k4_quotient.json"));
  CHECK(run({"enumerate", "--json", "-n", "2", "-k", "3", "--connected", "--canonical"}).out ==
        golden("enumerate_2_3.json"));
}
