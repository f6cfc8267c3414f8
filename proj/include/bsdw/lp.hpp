#pragma once

#include <string>
#include <vector>

#include "bsdw/types.hpp"

namespace bsdw {

// g . P + h >= 0
struct Halfspace {
  RVec g;
  double h = 0.0;
};

struct LpProblem {
  RVec c;  // minimize c0 + c . P
  double c0 = 0.0;
  std::vector<Halfspace> halfspaces;
  // |P_k| <= 1 is always imposed
  int dim() const { return static_cast<int>(c.size()); }
};

enum class LpStatus { Optimal, Unbounded, Infeasible };
std::string status_name(LpStatus s);

struct LpSolution {
  double optimum = 0.0;
  RVec argmin;
  LpStatus status = LpStatus::Infeasible;
};

struct Polytope {
  int dim = 0;
  bool box = true;
  std::vector<Halfspace> halfspaces;  // non-box halfspaces
  std::vector<RVec> vertices;
};

enum class RegionFamily { Kind1, Kind2, Approx1, Approx2 };
std::string region_name(RegionFamily f);
RegionFamily parse_region(const std::string& s);

LpSolution simplex_min(const LpProblem& problem);

Polytope feasible_region_kind1(int d);
Polytope feasible_region_kind2(int d);
Polytope feasible_region_approx1(int d);
Polytope feasible_region_approx2(int d);
Polytope feasible_region(RegionFamily f, int d);
// halfspaces only, without vertex enumeration
std::vector<Halfspace> region_halfspaces(RegionFamily f, int d);
int region_dim(RegionFamily f, int d);

// double-description enumeration; bounded by the box when box is set,
// otherwise the halfspaces themselves must bound the region
std::vector<RVec> vertex_enumerate(const std::vector<Halfspace>& hs, int dim, bool box);
// n-subset enumeration of basic feasible solutions, guarded at ~1e6 subsets
std::vector<RVec> vertex_enumerate_bruteforce(const std::vector<Halfspace>& hs, int dim, bool box);

// coefficient vectors a with a0 + a . v >= 0 at every vertex v of the feasible polytope
Polytope ssnnev_region(const Polytope& feasible, double a0);

bool contains(const Polytope& p, const RVec& x, double tol = 1e-9);
double min_over_vertices(const std::vector<RVec>& vs, const RVec& c, double c0);

// same point set up to 1e-9 after sorting
bool same_vertex_set(std::vector<RVec> a, std::vector<RVec> b, double tol = 1e-9);

}  // namespace bsdw
