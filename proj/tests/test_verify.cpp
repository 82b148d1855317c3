#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "rdx/verify.hpp"

using namespace rdx;

TEST_CASE("suite registry lists eight suites plus the combined run") {
  std::vector<std::string> names = verify_suite_names();
  CHECK(names.size() == 9);
  CHECK(names.back() == "all");
  for (const std::string& name : names) CHECK(is_verify_suite(name));
  CHECK_FALSE(is_verify_suite(""));
  CHECK_FALSE(is_verify_suite("oracles"));
  CHECK_THROWS_AS((void)run_verify_suite("oracles", VerifyOptions{}), std::invalid_argument);
}

TEST_CASE("csv serialization is fixed-format") {
  CHECK(claim_csv_header() == "suite,claim,n,instances,failures,seconds");
  ClaimResult r;
  r.suite = "demo";
  r.claim = "row";
  r.max_n = 9;
  r.instances = 120;
  r.failures = 3;
  r.seconds = 0.25;
  CHECK(claim_csv_row(r) == "demo,row,9,120,3,0.250");
}

TEST_CASE("claim json carries the full payload in a fixed key order") {
  ClaimResult r;
  r.suite = "demo";
  r.claim = "row";
  r.notes.push_back("a note");
  Json j = claim_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"suite", "claim", "max_n", "instances", "failures",
                                         "seconds", "notes", "counterexamples"});
  CHECK(j["notes"][0] == "a note");
}

TEST_CASE("a capped oracle run and the cycle suite come back clean") {
  VerifyOptions small;
  small.max_n = 8;
  for (const ClaimResult& r : run_verify_suite("oracle", small)) {
    CHECK(r.suite == "oracle");
    CHECK(r.instances > 0);
    CHECK(r.failures == 0);
    CHECK(r.counterexamples.empty());
  }
  std::vector<ClaimResult> cycles = run_verify_suite("mincycle", VerifyOptions{});
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0].claim == "cycle_minimality");
  CHECK(cycles[1].claim == "bipartite_minus_edge");
  for (const ClaimResult& r : cycles) CHECK(r.failures == 0);
}
