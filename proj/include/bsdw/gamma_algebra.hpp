#pragma once

#include <string>
#include <vector>

#include "bsdw/types.hpp"

namespace bsdw {

enum class Rep { Euclidean, Chiral4 };

std::string rep_name(Rep r);
Rep parse_rep(const std::string& s);

struct GammaBasis {
  int d = 0;
  Rep rep = Rep::Euclidean;
  // euclidean even d: gamma_1..gamma_d, gamma_S (d+1 entries)
  // euclidean odd d: the (d-1) set plus its gamma_S (d entries)
  // chiral4: gamma^0, gamma^1, gamma^2, gamma^3, gamma^5
  std::vector<CMat> gammas;

  int local_dim() const { return gammas.empty() ? 0 : static_cast<int>(gammas[0].rows()); }
  int d_eff() const { return (d % 2 == 0) ? d : d - 1; }
};

struct AlgebraElement {
  std::vector<int> index_set;  // ascending, 1-based
  cplx phase{1.0, 0.0};
  CMat matrix;
};

GammaBasis build_euclidean_gammas(int d);
GammaBasis build_chiral4();

// ascending product gamma_{i1}...gamma_{ik}; empty set gives the identity
CMat gamma_product(const GammaBasis& basis, const std::vector<int>& idx);

// smallest q in 0..3 with i^q M hermitian; -1 when none works
int hermitian_phase_power(const CMat& m);

std::vector<AlgebraElement> algebra_elements(const GammaBasis& basis);

struct CommutingSets {
  int d = 0;
  std::vector<AlgebraElement> c1, c2, c3;
  // A'_1..A'_{3d/2}: C1, then C2, then C3
  std::vector<AlgebraElement> flat() const;
};

CommutingSets commuting_sets(int d);

struct VerificationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

VerificationReport verify_clifford(const GammaBasis& basis);

bool exactly_equal(const CMat& a, const CMat& b);

}  // namespace bsdw
