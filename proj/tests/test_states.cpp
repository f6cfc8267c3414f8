#include "doctest.h"

#include <numbers>

#include "bsdw/states.hpp"
#include "helpers.hpp"

using namespace bsdw;
using testing_util::maxabs;
using testing_util::pauli;

TEST_CASE("helicity basis") {
  const auto psi = helicity_basis();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(std::abs(psi[i].dot(psi[j]) - (i == j ? 1.0 : 0.0)) < 1e-15);
  CHECK(maxabs(kron(pauli(3), pauli(0)) * psi[0] - psi[2]) < 1e-15);
  // Hadamard on the first qubit gives |00>, |11>, |10>, |01>
  CMat H(2, 2);
  H << 1, 1, 1, -1;
  H /= std::sqrt(2.0);
  const int comp[4] = {0, 3, 2, 1};
  for (int i = 0; i < 4; ++i) {
    const CVec v = kron(H, pauli(0)) * psi[i];
    CHECK(std::abs(std::abs(v(comp[i])) - 1.0) < 1e-14);
  }
}

TEST_CASE("iso-concurrence states are orthonormal at any angle") {
  for (double theta : {0.3, std::numbers::pi / 4, 1.1}) {
    CMat G(16, 16);
    std::vector<CVec> v;
    for (int k = 1; k <= 16; ++k) v.push_back(iso_concurrence_state(k, theta));
    for (int i = 0; i < 16; ++i)
      for (int j = 0; j < 16; ++j) G(i, j) = v[i].dot(v[j]);
    CHECK(maxabs(G - CMat::Identity(16, 16)) < 1e-12);
  }
  CHECK_THROWS_AS(iso_concurrence_state(0, 0.1), DomainError);
  CHECK_THROWS_AS(iso_concurrence_state(17, 0.1), DomainError);
}

TEST_CASE("EPR state") {
  const CVec e = epr_state();
  CHECK(e.norm() == doctest::Approx(1.0));
  for (int i4 = 0; i4 < 2; ++i4) {
    CHECK(expectation_vec(epr_witness(i4), e) == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(expectation_vec(witness_matrix(optimal_kind1(2, 4, {0, 0, 0, i4})).matrix, phi_minus_14()) ==
          doctest::Approx(-2.0).epsilon(1e-12));
  }
  // equals the rotated phi- up to a global phase
  const CVec r = kron(epr_rotation(), CMat::Identity(4, 4)) * phi_minus_14();
  CHECK(std::abs(std::abs(r.dot(e)) - 1.0) < 1e-12);
}

TEST_CASE("mixtures and Bell-diagonal expansion") {
  std::vector<double> uni(16, 1.0 / 16);
  const BsdState s = bsd_from_mixture(uni);
  for (std::size_t k = 1; k < s.coeffs.size(); ++k) CHECK(std::abs(s.coeffs[k]) < 1e-15);
  CHECK(maxabs(mixture_matrix(uni) - CMat::Identity(16, 16) / 16.0) < 1e-15);

  for (int k = 0; k < 16; ++k) {
    std::vector<double> w(16, 0.0);
    w[k] = 1.0;
    const CVec v = iso_concurrence_state(k + 1, std::numbers::pi / 4);
    CHECK(maxabs(state_matrix(bsd_from_mixture(w)) - v * v.adjoint()) < 1e-12);
  }
  CHECK_THROWS_AS(mixture_matrix(std::vector<double>(16, 0.1)), DomainError);
  std::vector<double> neg(16, 0.0);
  neg[0] = 1.5;
  neg[1] = -0.5;
  CHECK_THROWS_AS(mixture_matrix(neg), DomainError);
}

TEST_CASE("label sets") {
  const auto c = chiral_labels();
  const auto p = pauli_labels();
  REQUIRE(c.size() == 16);
  REQUIRE(p.size() == 16);
  for (const auto* set : {&c, &p})
    for (std::size_t i = 0; i < set->size(); ++i)
      for (std::size_t j = 0; j < set->size(); ++j) {
        const cplx t = ((*set)[i].adjoint() * (*set)[j]).trace();
        CHECK(std::abs(t - (i == j ? 4.0 : 0.0)) < 1e-13);
      }
}

TEST_CASE("vertex states") {
  const auto vs = vertex_ppt_states_kind1(2, 4, Rep::Chiral4);
  REQUIRE(vs.size() == 16);
  for (const auto& s : vs) {
    const PptReport r = ppt_check(state_matrix(s), 4, 2);
    CHECK(r.min_eig >= -1e-12);
    CHECK(r.all_ppt());
    for (std::size_t k = 1; k < s.coeffs.size(); ++k) CHECK(std::abs(std::abs(s.coeffs[k]) - 1.0 / 48) < 1e-15);
  }
  const BsdState v = vertex_state_kind1(2, 4, {1, 0, 0, 0}, Rep::Chiral4);
  CHECK(expectation(witness_matrix(optimal_kind1(2, 4, {0, 1, 1, 1}, Rep::Chiral4)).matrix, state_matrix(v)) ==
        doctest::Approx(-2.0 / 3.0).epsilon(1e-12));
  CHECK(expectation(witness_matrix(optimal_kind1(2, 4, {1, 0, 0, 0}, Rep::Chiral4)).matrix, state_matrix(v)) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS(vertex_state_kind1(2, 6, {0, 0, 0, 0, 0, 0}));
  for (const auto& s : vertex_ppt_states_kind1(2, 4)) CHECK(ppt_check(state_matrix(s), 4, 2).all_ppt());
}

TEST_CASE("approx vertex states") {
  for (const auto& s : approx1_vertex_states(2, 4)) {
    const PptReport r = ppt_check(state_matrix(s), 4, 2);
    CHECK(r.min_eig >= -1e-12);
    CHECK_FALSE(r.all_ppt());
  }
  for (const auto& s : approx2_vertex_states(2, 4)) CHECK(is_density(state_matrix(s)));
}

TEST_CASE("ppt check") {
  CHECK(ppt_check(CMat::Identity(4, 4) / 4.0, 2, 2).all_ppt());
  CVec phi = CVec::Zero(4);
  phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
  CHECK_FALSE(ppt_check(phi * phi.adjoint(), 2, 2).all_ppt());
  CHECK_THROWS_AS(ppt_check(CMat::Identity(4, 4), 2, 2), DomainError);
  CHECK_THROWS_AS(ppt_check(CMat::Identity(4, 4) / 4.0 + 0.5 * kron(pauli(3), pauli(0)), 2, 2), DomainError);
}

TEST_CASE("state construction") {
  const BsdState s = make_bsd(StateFamily::GammaOnly, 2, 4, {0.01, 0.0, 0.0, 0.0, 0.0});
  CHECK(s.coeffs[0] == doctest::Approx(1.0 / 16));
  const CMat r = state_matrix(s);
  CHECK(r.trace().real() == doctest::Approx(1.0));
  CHECK(is_hermitian(r));
  CHECK_THROWS_AS(make_bsd(StateFamily::GammaOnly, 2, 4, {0.0, 0.0}), DomainError);
  for (StateFamily f : {StateFamily::GammaOnly, StateFamily::Kind2Set, StateFamily::Approx1Set, StateFamily::Approx2Set,
                        StateFamily::Full})
    CHECK(parse_state_family(state_family_name(f)) == f);
}

TEST_CASE("region classification d=m=2") {
  const RegionReport zero = region_classify(make_bsd(StateFamily::GammaOnly, 2, 2, {0, 0, 0}), Family::Kind1);
  CHECK(zero.verdict == RegionVerdict::Separable);
  const BsdState s = make_bsd(StateFamily::GammaOnly, 2, 2, {0.2, 0.2, -0.2});
  const RegionReport r = region_classify(s, Family::Kind1);
  CHECK(r.verdict == RegionVerdict::DetectedEntangled);
  CHECK(r.violated == 1);
  CHECK(wootters_concurrence(state_matrix(s)) == doctest::Approx(0.7).epsilon(1e-10));
  CHECK(region_classify(make_bsd(StateFamily::GammaOnly, 2, 2, {0.25, 0.25, 0.25}), Family::Kind1).verdict ==
        RegionVerdict::Invalid);
  CHECK_THROWS_AS(region_classify(s, Family::Kind2), DomainError);
}

TEST_CASE("kind2 region") {
  const BsdState s = make_bsd(StateFamily::Kind2Set, 2, 4, std::vector<double>(6, 0.0));
  CHECK(region_classify(s, Family::Kind2).verdict == RegionVerdict::Separable);
}

TEST_CASE("concurrence") {
  CVec phi = CVec::Zero(4);
  phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
  CHECK(wootters_concurrence(phi * phi.adjoint()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(wootters_concurrence(CMat::Identity(4, 4) / 4.0) == doctest::Approx(0.0));
  // Werner family p|phi><phi| + (1-p) I/4 is entangled iff p > 1/3
  for (double p : {0.2, 0.3, 0.34, 0.6}) {
    const CMat w = p * phi * phi.adjoint() + (1 - p) * CMat::Identity(4, 4) / 4.0;
    CHECK(wootters_concurrence(w) == doctest::Approx(std::max(0.0, (3 * p - 1) / 2)).epsilon(1e-10));
  }
  CHECK_THROWS_AS(wootters_concurrence(CMat::Identity(16, 16)), DomainError);
}

TEST_CASE("random product states") {
  const CVec a = random_pure_product(2, 4, 7), b = random_pure_product(2, 4, 7);
  CHECK(a.norm() == doctest::Approx(1.0));
  CHECK(maxabs(a - b) == 0.0);
  CHECK(maxabs(a - random_pure_product(2, 4, 8)) > 0.0);
}
