#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "dioph/errors.hpp"
#include "dioph/verify.hpp"

using namespace dioph;
using namespace dioph::verify;

TEST_CASE("the shipped golden file loads and has every fitted entry") {
  const auto g = GoldenFile::load(DIOPH_GOLDEN_FILE);
  for (const char* key : {"recip_sweep.ratio_band", "erdos_turan.C", "norm_drift.C", "watson.c",
                          "weyl_quadratic.scaled_band", "erdos.recipj_ratio_m1e4"})
    CHECK(g.contains(key));
  const auto& c = g.at("erdos_turan.C");
  CHECK(c.provenance == "fit");
  CHECK(c.value > 0);
  CHECK_THROWS_AS(g.at("no.such.key"), Error);
}

TEST_CASE("save and load round trip") {
  GoldenFile g;
  g.set("a.b", {1.5, 0.25, "oracle", "note"});
  const auto path = std::filesystem::temp_directory_path() / "dioph_golden_roundtrip.json";
  g.save(path.string());
  const auto back = GoldenFile::load(path.string());
  std::filesystem::remove(path);
  REQUIRE(back.contains("a.b"));
  CHECK(back.at("a.b").value == 1.5);
  CHECK(back.at("a.b").accepts(1.7));
  CHECK_FALSE(back.at("a.b").accepts(1.8));
}

TEST_CASE("a missing file is an error") { CHECK_THROWS_AS(GoldenFile::load("/nonexistent/golden.json"), Error); }

TEST_CASE("printed-digit matching") {
  const HPFloat v(mpq_class(4477593932160221, 1000000000000), 128);
  CHECK(matches_printed(v, "4477.593932"));
  CHECK_FALSE(matches_printed(v, "4477.593933"));
  CHECK(matches_printed(HPFloat(mpq_class(9417990497, 10000000000), 128), "0.941799"));
}

TEST_CASE("suite names round trip") {
  for (Suite s : kAllSuites) CHECK(parse_suite(to_string(s)) == s);
  CHECK_THROWS_AS(parse_suite("bogus"), Error);
}
