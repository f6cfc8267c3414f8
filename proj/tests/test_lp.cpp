#include "doctest.h"

#include <random>

#include "bsdw/lp.hpp"

using namespace bsdw;

namespace {

RVec vec(std::initializer_list<double> xs) {
  RVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("simplex on a hand-solved program") {
  // min -x - y  s.t. x + y <= 1.5 inside the unit box: optimum -1.5
  LpProblem p;
  p.c = vec({-1.0, -1.0});
  p.halfspaces.push_back({vec({-1.0, -1.0}), 1.5});
  const LpSolution s = simplex_min(p);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.optimum == doctest::Approx(-1.5).epsilon(1e-12));
  CHECK(s.argmin.sum() == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("simplex reports infeasibility") {
  LpProblem p;
  p.c = vec({1.0});
  p.halfspaces.push_back({vec({1.0}), -2.0});  // x >= 2 with |x| <= 1
  CHECK(simplex_min(p).status == LpStatus::Infeasible);
}

TEST_CASE("kind1 cross-polytope minimum is -max|c|") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (int d : {2, 4, 6}) {
    const Polytope f = feasible_region_kind1(d);
    for (int s = 0; s < 10; ++s) {
      LpProblem p;
      p.c = RVec(d + 1);
      for (int k = 0; k <= d; ++k) p.c(k) = g(rng);
      p.halfspaces = f.halfspaces;
      CHECK(simplex_min(p).optimum == doctest::Approx(-p.c.cwiseAbs().maxCoeff()).epsilon(1e-10));
    }
  }
}

TEST_CASE("double description agrees with subset enumeration") {
  for (RegionFamily f : {RegionFamily::Kind1, RegionFamily::Kind2, RegionFamily::Approx1})
    for (int d : {2, 4}) {
      if (f == RegionFamily::Approx1 && d == 4) continue;
      CAPTURE(region_name(f));
      CAPTURE(d);
      const auto hs = region_halfspaces(f, d);
      const int n = region_dim(f, d);
      CHECK(same_vertex_set(vertex_enumerate(hs, n, true), vertex_enumerate_bruteforce(hs, n, true)));
    }
}

TEST_CASE("kind1 feasible region and its dual") {
  const Polytope f = feasible_region_kind1(4);
  CHECK(f.vertices.size() == 10);
  for (const auto& v : f.vertices) CHECK(v.cwiseAbs().sum() == doctest::Approx(1.0));
  const Polytope s = ssnnev_region(f, 1.0);
  CHECK(s.vertices.size() == 32);
  for (const auto& v : s.vertices) CHECK(v.cwiseAbs().minCoeff() == doctest::Approx(1.0));
  CHECK(contains(f, RVec::Zero(5)));
  CHECK_FALSE(contains(f, vec({0.6, 0.6, 0, 0, 0})));
}

TEST_CASE("kind2 feasible region is a product of octahedra") {
  // d = 2: one triple, the octahedron
  CHECK(feasible_region_kind2(2).vertices.size() == 6);
  // d = 4: triples (1,3,5) and (2,4,6)
  CHECK(feasible_region_kind2(4).vertices.size() == 36);
  for (const auto& v : feasible_region_kind2(4).vertices) {
    CHECK(std::abs(v(0)) + std::abs(v(2)) + std::abs(v(4)) <= 1.0 + 1e-12);
    CHECK(std::abs(v(1)) + std::abs(v(3)) + std::abs(v(5)) <= 1.0 + 1e-12);
  }
}

TEST_CASE("ssnnev needs the origin inside") {
  Polytope p;
  p.dim = 1;
  p.box = true;
  p.halfspaces.push_back({vec({1.0}), -0.5});
  CHECK_THROWS_AS(ssnnev_region(p, 1.0), DomainError);
}

TEST_CASE("min over vertices and vertex set comparison") {
  const std::vector<RVec> vs = {vec({1, 0}), vec({0, 1}), vec({-1, -1})};
  CHECK(min_over_vertices(vs, vec({1, 1}), 0.5) == doctest::Approx(-1.5));
  CHECK(same_vertex_set(vs, {vec({0, 1}), vec({-1, -1}), vec({1, 0})}));
  CHECK_FALSE(same_vertex_set(vs, {vec({0, 1}), vec({1, 0})}));
}

TEST_CASE("region names round trip") {
  for (RegionFamily f : {RegionFamily::Kind1, RegionFamily::Kind2, RegionFamily::Approx1, RegionFamily::Approx2})
    CHECK(parse_region(region_name(f)) == f);
  CHECK_THROWS(region_halfspaces(RegionFamily::Kind1, 3));
}
