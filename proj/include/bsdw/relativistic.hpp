#pragma once

#include <cstdint>
#include <vector>

#include "bsdw/types.hpp"

namespace bsdw {

struct BoostParams {
  double xi = 0.0;  // rapidity
  Eigen::Vector3d p_hat{0.0, 0.0, 1.0};
};

void validate(const BoostParams& p);

// exp(-(xi/2) sigma_z (x) (sigma . p_hat)) in the chiral d = 4 spinor space
CMat boost_matrix(const BoostParams& p);
// L^mu_nu from D^{-1} gamma^mu D = L^mu_nu gamma^nu
Eigen::Matrix4d lorentz_matrix(const BoostParams& p);
// max deviation of D^{-1} gamma^mu D from L^mu_nu gamma^nu
double lorentz_residual(const BoostParams& p);

// (D (x) D) rho (D (x) D)^dagger divided by its trace
CMat boost_state(const CMat& rho, const BoostParams& p);

struct ClosestSeparable {
  CMat rho_s;
  double epsilon = 0.0;  // <rho_s, rho_s - rho_ent>
};

// projects rho_ent onto the trace-one hyperplane Tr(sigma W) = 0
ClosestSeparable closest_separable(const CMat& rho_ent, const CMat& w_raw);
// (Delta - <rho_s, Delta> 1)/||Delta|| with Delta = rho_s - rho_ent
CMat witness_from_pair(const CMat& rho_s, const CMat& rho_ent);
double hs_measure(const CMat& rho_ent, const CMat& w_normalized);

struct HsResult {
  double xi = 0.0;
  double measure = 0.0;   // -Tr(rho_ent W)
  double distance = 0.0;  // ||rho_s - rho_ent||
  double epsilon = 0.0;
  double contact = 0.0;   // Tr(rho_s W)
  CMat rho_ent;
  CMat closest_separable;
  CMat optimal_witness;
};

// rest-frame pair: the kind-1 vertex state with bits 1000 and its projection
// along the 0111 chiral witness
struct RestPair {
  CMat rho_ent;
  CMat rho_s;
  CMat w_raw;
  double epsilon = 0.0;
};
RestPair rest_pair();

HsResult hs_pipeline(const RestPair& rest, const BoostParams& p);

double hs_closed_form_measure(double xi);
double hs_closed_form_epsilon(double xi);

struct SweepRow {
  double xi = 0.0;
  double measure = 0.0;
  double epsilon = 0.0;
  double contact = 0.0;
  double measure_closed = 0.0;
  double epsilon_closed = 0.0;
};

std::vector<SweepRow> boost_sweep(const std::vector<double>& xi_grid, const Eigen::Vector3d& p_hat = {0, 0, 1});

// (D^{-1} (x) D^{-1}) W (D (x) D) == W within tol
bool lorentz_invariance_check(const CMat& w, const BoostParams& p, double tol = 1e-10);

struct ProductMinimum {
  double value = 0.0;
  CVec alpha, beta;
};

// min over unit |alpha>|beta> in C^4 (x) C^4 of <ab|op|ab>; seeded sampling
// followed by alternating exact minimisation on the best seeds
ProductMinimum product_state_minimum(const CMat& op, int samples, std::uint64_t seed, int refine_seeds = 16,
                                     int refine_iters = 200);

}  // namespace bsdw
