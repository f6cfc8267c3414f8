#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bsdw/gamma_algebra.hpp"
#include "bsdw/operator_space.hpp"
#include "bsdw/witness.hpp"

namespace bsdw {

// label sets for the diagonal expansion
//   GammaOnly   gamma_k^{(x)m}, k = 1..d+1 (chiral: gamma^0..gamma^3, gamma^5)
//   Kind2Set    A'_k^{(x)m}, k = 1..3d/2
//   Approx1Set  GammaOnly + (-i gamma_1 gamma_2)^{(x)m}
//   Approx2Set  Kind2Set + (A'_1 A'_2)^{(x)m}
//   Full        every non-identity algebra element (chiral: the fifteen A_mu labels)
enum class StateFamily { GammaOnly, Kind2Set, Approx1Set, Approx2Set, Full };
std::string state_family_name(StateFamily f);
StateFamily parse_state_family(const std::string& s);

struct BsdState {
  StateFamily family = StateFamily::GammaOnly;
  int m = 2;
  int d = 4;
  Rep rep = Rep::Euclidean;
  std::vector<double> coeffs;  // b_0 first, b_0 = 2^{-md/2}
  std::string label;
};

std::size_t state_coeff_count(StateFamily f, int d, Rep rep);
// b_0 is filled in from the trace condition
BsdState make_bsd(StateFamily f, int m, int d, const std::vector<double>& b, Rep rep = Rep::Euclidean);
std::vector<TensorTerm> state_terms(const BsdState& s);
CMat state_matrix(const BsdState& s);

// identity plus the fifteen chiral labels A_0..A_14 (index 0 is the identity)
std::vector<CMat> chiral_labels();
// identity plus the fifteen products sigma_a (x) sigma_b on C^4
std::vector<CMat> pauli_labels();

std::array<CVec, 4> helicity_basis();
// k in 1..16
CVec iso_concurrence_state(int k, double theta);
CVec epr_state();
// local phase rotation e^{i pi/4 I (x) sigma_z} on the first spinor
CMat epr_rotation();
// conjugated kind-1 witness (S (x) I) W (S (x) I)^{-1}, euclidean d = 4
CMat epr_witness(int i4);
// the two-spinor state (|psi_a psi_d> - |psi_d psi_a>)/sqrt 2 with a = 1, d = 4
CVec phi_minus_14();

BsdState bsd_from_mixture(const std::vector<double>& weights, double theta = 0.78539816339744830962);
CMat mixture_matrix(const std::vector<double>& weights, double theta = 0.78539816339744830962);
// c(mu, nu) = Tr(rho L_mu (x) L_nu) / 16
CMat cross_coefficients(const CMat& rho, const std::vector<CMat>& labels);

// PPT vertex states of the kind-1 polytope; chiral d = 4, m = 2 gives the
// sixteen +-1/48 states, euclidean needs d = 0 mod 4
std::vector<BsdState> vertex_ppt_states_kind1(int m, int d, Rep rep = Rep::Euclidean);
BsdState vertex_state_kind1(int m, int d, const std::vector<int>& bits, Rep rep = Rep::Euclidean);
// (I + s1 G1 + s2 G2 - s1 s2 Q)/N over the Approx1Set labels
std::vector<BsdState> approx1_vertex_states(int m, int d);
// (I + s1 G(A'_1) + s2 G(A'_2) + s1 s2 G(A'_1 A'_2))/N over the Approx2Set labels
std::vector<BsdState> approx2_vertex_states(int m, int d);

struct PptReport {
  double min_eig = 0.0;
  std::vector<double> pt_min;  // per subsystem
  std::vector<bool> ppt;
  bool all_ppt() const;
};

bool is_density(const CMat& rho, double tol = 1e-10);
PptReport ppt_check(const CMat& rho, int local_dim, int m);

enum class RegionVerdict { Invalid, Separable, DetectedEntangled };
std::string region_verdict_name(RegionVerdict v);

struct RegionReport {
  RegionVerdict verdict = RegionVerdict::Invalid;
  double min_eig = 0.0;
  int violated = 0;
  std::vector<Detection> values;  // one per optimal witness
  double min_value = 0.0;
};

// GammaOnly states are tested against the 2^d optimal kind-1 witnesses,
// Kind2Set states against the j = 1 optimal kind-2 witnesses
RegionReport region_classify(const BsdState& s, Family witness_family);

double wootters_concurrence(const CMat& rho);

CVec random_local_state(int local_dim, std::mt19937_64& rng);
CVec random_pure_product(int m, int local_dim, std::uint64_t seed);
CVec random_pure_product(int m, int local_dim, std::mt19937_64& rng);

}  // namespace bsdw
