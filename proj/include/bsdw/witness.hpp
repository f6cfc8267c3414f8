#pragma once

#include <string>
#include <vector>

#include "bsdw/gamma_algebra.hpp"
#include "bsdw/lp.hpp"
#include "bsdw/operator_space.hpp"

namespace bsdw {

enum class Family { Kind1, Kind2, Approx1, Approx2, OddM1, OddM2 };
std::string family_name(Family f);
Family parse_family(const std::string& s);

enum class Verdict { PositiveOperator, EW, NotEW };
std::string verdict_name(Verdict v);

enum class Decomp { Decomposable, NonDecomposable, Undetermined, NotApplicable };
std::string decomp_name(Decomp d);

// which commuting set supplies A'_i on the last factor of the odd-m kind-1 form
enum class OddMSet { C1, C2, C3 };

struct WitnessSpec {
  Family family = Family::Kind1;
  int m = 2;
  int d = 4;
  // a_0 first; layout per family:
  //   Kind1   a_0, a_1..a_{d+1}             (gamma_k tensor powers, gamma_{d+1} = gamma_S)
  //   Kind2   a_0, a'_1..a'_{3d/2}          (A'_k tensor powers)
  //   Approx1 Kind1 layout + a_{d+2} on (-i gamma_1 gamma_2)^{(x)m}
  //   Approx2 Kind2 layout + a'_{3d/2+1} on (A'_1 A'_2)^{(x)m}
  //   OddM1   a_0, a_1..a_{d+1}
  //   OddM2   a_0, a'_1..a'_{3d/2}
  std::vector<double> coeffs;
  Rep rep = Rep::Euclidean;  // Chiral4 only for Kind1 with d = 4
  OddMSet odd_set = OddMSet::C1;
};

std::size_t coeff_count(Family f, int d);
// throws DomainError / UnsupportedError for invalid specs
void validate(const WitnessSpec& w);

// non-identity operators in coefficient order (coeffs[k] multiplies terms[k-1])
std::vector<TensorTerm> witness_terms(const WitnessSpec& w);
HermitianOperator witness_matrix(const WitnessSpec& w);

// the LP region whose points (P_k = Tr(rho Q_k)) cover every separable state
RegionFamily region_of(Family f);

WitnessSpec optimal_kind1(int m, int d, const std::vector<int>& bits, Rep rep = Rep::Euclidean);
WitnessSpec optimal_kind2(int m, int d, int i1, int i2, int j);
WitnessSpec optimal_approx1(int m, int d, int i1, int i2);
// bits i_1..i_{d/2+1}
WitnessSpec optimal_approx2(int m, int d, const std::vector<int>& bits);
WitnessSpec build_odd_m_kind1(int m, int d, const std::vector<double>& coeffs, OddMSet set = OddMSet::C1);
WitnessSpec build_odd_m_kind2(int m, int d, const std::vector<double>& coeffs);

struct Detection {
  std::string state;  // label of the state
  double value = 0.0;
};

struct WitnessClass {
  Verdict verdict = Verdict::NotEW;
  double min_eig = 0.0;
  // certified lower bound of Tr(W rho) over separable rho
  double min_over_feasible = 0.0;
  double lp_min = 0.0;
  double support_bound = 0.0;
  bool support_bound_valid = false;
  double closed_form_error = -1.0;  // negative when no closed form applies
  bool optimal = false;
  bool optimality_checked = false;
  Decomp decomposable = Decomp::NotApplicable;
  std::vector<double> pt_min;  // per subsystem
  std::vector<Detection> evidence;
  double tol = 0.0;
};

struct ClassifyOptions {
  bool decomposability = true;
  bool optimality = true;
};

WitnessClass classify(const WitnessSpec& w, const ClassifyOptions& opt = {});

// Kind1 / Kind2 only. A zero-expectation product state sits in the -1 eigenspace
// of some signed block s_k Q_k, so a subtractable P would have to live on the
// joint +1 eigenspace of all supported blocks; optimal iff that space is null
// (plus coefficients on the optimal pattern and a touching LP minimum)
bool check_optimality(const WitnessSpec& w);
// trace of prod_k (I + s_k Q_k)/2 over the supported blocks, s_k = sign(a_k)
double joint_positive_trace(const WitnessSpec& w);

struct DecompResult {
  Decomp verdict = Decomp::Undetermined;
  std::vector<double> pt_min;
  std::vector<Detection> evidence;  // PPT states detected
};

DecompResult decomposability(const WitnessSpec& w);

// largest |a_k| subtracted from a_0, valid when two tensor sites carry pairwise
// anticommuting involutions over the supported terms
bool support_bound(const WitnessSpec& w, double& bound);

}  // namespace bsdw
