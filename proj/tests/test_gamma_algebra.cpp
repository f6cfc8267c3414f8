#include "doctest.h"

#include "bsdw/gamma_algebra.hpp"
#include "bsdw/operator_space.hpp"
#include "helpers.hpp"

using namespace bsdw;
using testing_util::maxabs;
using testing_util::pauli;

namespace {

// numerical anticommutator check, independent of verify_clifford
double clifford_defect(const std::vector<CMat>& g, double sq) {
  const int D = static_cast<int>(g[0].rows());
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      const CMat ac = g[i] * g[j] + g[j] * g[i];
      const CMat want = (i == j) ? CMat(2.0 * sq * CMat::Identity(D, D)) : CMat(CMat::Zero(D, D));
      worst = std::max(worst, maxabs(ac - want));
    }
  return worst;
}

}  // namespace

TEST_CASE("d=2 basis is the Pauli triple") {
  const GammaBasis b = build_euclidean_gammas(2);
  REQUIRE(b.gammas.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(exactly_equal(b.gammas[k], pauli(k + 1)));
}

TEST_CASE("euclidean gammas anticommute and are hermitian") {
  for (int d = 2; d <= 10; ++d) {
    const GammaBasis b = build_euclidean_gammas(d);
    CAPTURE(d);
    CHECK(b.local_dim() == (1 << (b.d_eff() / 2)));
    CHECK(clifford_defect(b.gammas, 1.0) == 0.0);
    for (const auto& g : b.gammas) CHECK(exactly_equal(g, g.adjoint()));
    CHECK(verify_clifford(b).ok());
  }
}

TEST_CASE("gamma_S is the phased product of the generators") {
  for (int d : {2, 4, 6, 8}) {
    const GammaBasis b = build_euclidean_gammas(d);
    CMat p = CMat::Identity(b.local_dim(), b.local_dim());
    for (int k = 0; k < d; ++k) p = p * b.gammas[k];
    CHECK(maxabs(ipow(-d / 2) * p - b.gammas[d]) < 1e-14);
  }
}

TEST_CASE("odd dimension reuses the even basis") {
  const GammaBasis b5 = build_euclidean_gammas(5);
  const GammaBasis b4 = build_euclidean_gammas(4);
  REQUIRE(b5.gammas.size() == b4.gammas.size());
  for (std::size_t k = 0; k < b4.gammas.size(); ++k) CHECK(exactly_equal(b5.gammas[k], b4.gammas[k]));
}

TEST_CASE("chiral set") {
  const GammaBasis c = build_chiral4();
  REQUIRE(c.gammas.size() == 5);
  const CMat I = CMat::Identity(4, 4);
  CHECK(maxabs(c.gammas[0] * c.gammas[0] - I) == 0.0);
  for (int k = 1; k <= 3; ++k) CHECK(maxabs(c.gammas[k] * c.gammas[k] + I) == 0.0);
  CHECK(maxabs(c.gammas[4] * c.gammas[4] - I) == 0.0);
  const CMat g5 = I_UNIT * c.gammas[0] * c.gammas[1] * c.gammas[2] * c.gammas[3];
  CHECK(maxabs(g5 - c.gammas[4]) < 1e-15);
  // gamma^0 = sigma_x (x) I
  CHECK(maxabs(c.gammas[0] - kron(pauli(1), pauli(0))) == 0.0);
  CHECK(verify_clifford(c).ok());
}

TEST_CASE("fault injection is reported") {
  GammaBasis b = build_euclidean_gammas(4);
  // negate one nonzero entry of gamma_2
  CMat& g = b.gammas[1];
  for (Eigen::Index k = 0; k < g.size(); ++k)
    if (g(k) != cplx(0.0, 0.0)) {
      g(k) = -g(k);
      break;
    }
  const auto r = verify_clifford(b);
  CHECK_FALSE(r.ok());
}

TEST_CASE("gamma_product and hermitian phases") {
  const GammaBasis b = build_euclidean_gammas(4);
  CHECK(exactly_equal(gamma_product(b, {}), CMat::Identity(4, 4)));
  const CMat p = gamma_product(b, {1, 2});
  CHECK(maxabs(p - b.gammas[0] * b.gammas[1]) == 0.0);
  const int q = hermitian_phase_power(p);
  REQUIRE(q >= 0);
  const CMat h = ipow(q) * p;
  CHECK(maxabs(h - h.adjoint()) < 1e-15);
}

TEST_CASE("algebra elements") {
  for (int d : {2, 4, 6}) {
    const auto els = algebra_elements(build_euclidean_gammas(d));
    CHECK(els.size() == (std::size_t{1} << d));
    for (const auto& e : els) {
      CHECK(maxabs(e.matrix - e.matrix.adjoint()) < 1e-14);
      const CMat sq = e.matrix * e.matrix;
      CHECK(maxabs(sq - CMat::Identity(sq.rows(), sq.cols())) < 1e-14);
    }
  }
  CHECK(algebra_elements(build_euclidean_gammas(5)).size() == 16);
}

TEST_CASE("commuting sets") {
  for (int d : {2, 4, 6}) {
    const CommutingSets cs = commuting_sets(d);
    const auto flat = cs.flat();
    REQUIRE(flat.size() == static_cast<std::size_t>(3 * d / 2));
    for (const auto* set : {&cs.c1, &cs.c2, &cs.c3})
      for (const auto& a : *set)
        for (const auto& b : *set) CHECK(maxabs(a.matrix * b.matrix - b.matrix * a.matrix) < 1e-14);
    for (const auto& a : flat) {
      CHECK(maxabs(a.matrix - a.matrix.adjoint()) < 1e-14);
      CHECK(maxabs(a.matrix * a.matrix - CMat::Identity(a.matrix.rows(), a.matrix.cols())) < 1e-14);
    }
  }
}

TEST_CASE("invalid dimensions") {
  CHECK_THROWS_AS(build_euclidean_gammas(1), DomainError);
  CHECK_THROWS_AS(parse_rep("minkowski"), DomainError);
}
