#include "doctest.h"

#include "bsdw/suites.hpp"

using namespace bsdw;

TEST_CASE("clifford suite passes clean and names an injected fault") {
  SuiteOptions o;
  const auto clean = check_clifford(o);
  REQUIRE(clean.size() == 1);
  CHECK(clean[0].pass);
  o.inject_gamma_fault = true;
  const auto bad = check_clifford(o);
  CHECK_FALSE(bad[0].pass);
  CHECK(bad[0].detail.find("d=4") != std::string::npos);
}

TEST_CASE("sampling suites are reproducible under a fixed seed") {
  SuiteOptions o;
  o.seed = 7;
  const auto a = check_extra_properties(o);
  const auto b = check_extra_properties(o);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].name == b[k].name);
    CHECK(a[k].detail == b[k].detail);
    CHECK(a[k].pass == b[k].pass);
  }
}

TEST_CASE("reference reproductions") {
  for (const auto& r : check_epr()) CHECK(r.pass);
  for (const auto& r : check_vertex_detection()) CHECK(r.pass);
  for (const auto& r : check_hs_rest()) CHECK(r.pass);
  for (const auto& r : check_kind1_pt()) CHECK(r.pass);
}
