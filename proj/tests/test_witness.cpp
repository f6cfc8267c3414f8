#include "doctest.h"

#include <random>

#include "bsdw/states.hpp"
#include "bsdw/witness.hpp"

using namespace bsdw;

namespace {

// empirical lower bound over random pure product states
double sampled_product_min(const WitnessSpec& w, int samples, std::uint64_t seed) {
  const HermitianOperator W = witness_matrix(w);
  std::mt19937_64 rng(seed);
  double best = 1e300;
  for (int s = 0; s < samples; ++s)
    best = std::min(best, expectation_vec(W.matrix, random_pure_product(W.m, W.local_dim, rng)));
  return best;
}

ClassifyOptions quick() {
  ClassifyOptions o;
  o.decomposability = false;
  return o;
}

}  // namespace

TEST_CASE("family names round trip") {
  for (Family f : {Family::Kind1, Family::Kind2, Family::Approx1, Family::Approx2, Family::OddM1, Family::OddM2})
    CHECK(parse_family(family_name(f)) == f);
  CHECK_THROWS_AS(parse_family("kind3"), DomainError);
}

TEST_CASE("spec validation") {
  WitnessSpec w = optimal_kind1(2, 4, {0, 0, 0, 0});
  w.coeffs[0] = -1.0;
  CHECK_THROWS_AS(validate(w), DomainError);
  w = optimal_kind1(2, 4, {0, 0, 0, 0});
  w.coeffs.pop_back();
  CHECK_THROWS_AS(validate(w), DomainError);
  CHECK_THROWS_AS(optimal_kind1(2, 3, {0, 0, 0}), DomainError);
  CHECK_THROWS(optimal_approx2(2, 2, {0, 0}));
  CHECK_THROWS(optimal_kind1(2, 6, {0, 0, 0, 0, 0, 0}, Rep::Chiral4));
}

TEST_CASE("optimal kind1 coefficients") {
  const WitnessSpec w = optimal_kind1(2, 4, {0, 1, 1, 0});
  REQUIRE(w.coeffs.size() == 6);
  CHECK(w.coeffs[0] == 1.0);
  CHECK(w.coeffs[1] == 1.0);
  CHECK(w.coeffs[2] == -1.0);
  CHECK(w.coeffs[3] == -1.0);
  CHECK(w.coeffs[4] == 1.0);
  CHECK(std::abs(w.coeffs[5]) == 1.0);
}

TEST_CASE("optimal kind1 witnesses are optimal non-decomposable EWs at d=4") {
  for (unsigned mask : {0u, 5u, 15u}) {
    std::vector<int> bits(4);
    for (int k = 0; k < 4; ++k) bits[k] = (mask >> k) & 1u;
    const WitnessSpec w = optimal_kind1(2, 4, bits);
    const WitnessClass c = classify(w);
    CHECK(c.verdict == Verdict::EW);
    CHECK(c.min_eig == doctest::Approx(-4.0).epsilon(1e-12));
    CHECK(c.closed_form_error < 1e-10);
    CHECK(c.optimal);
    CHECK(c.decomposable == Decomp::NonDecomposable);
    REQUIRE_FALSE(c.evidence.empty());
    CHECK(c.evidence.front().value == doctest::Approx(-2.0 / 3.0).epsilon(1e-10));
    CHECK(sampled_product_min(w, 3000, 10 + mask) >= -1e-12);
    CHECK(joint_positive_trace(w) < 0.5);
  }
}

TEST_CASE("chiral kind1 witness") {
  const WitnessClass c = classify(optimal_kind1(2, 4, {0, 1, 1, 1}, Rep::Chiral4));
  CHECK(c.verdict == Verdict::EW);
  CHECK(c.optimal);
  CHECK(c.decomposable == Decomp::NonDecomposable);
}

TEST_CASE("kind1 at d=2 is decomposable and d=6 stays undetermined") {
  const WitnessClass c2 = classify(optimal_kind1(2, 2, {1, 0}));
  CHECK(c2.verdict == Verdict::EW);
  CHECK(c2.decomposable == Decomp::Decomposable);
  const WitnessClass c6 = classify(optimal_kind1(2, 6, {0, 0, 0, 0, 0, 0}));
  CHECK(c6.verdict == Verdict::EW);
  CHECK(c6.decomposable == Decomp::Undetermined);
  REQUIRE(c6.pt_min.size() == 2);
  CHECK(c6.pt_min[0] == doctest::Approx(-4.0).epsilon(1e-10));
}

TEST_CASE("verdicts: positive, not a witness") {
  WitnessSpec pos = optimal_kind1(2, 4, {0, 0, 0, 0});
  for (std::size_t k = 1; k < pos.coeffs.size(); ++k) pos.coeffs[k] *= 0.1;
  CHECK(classify(pos, quick()).verdict == Verdict::PositiveOperator);

  WitnessSpec bad;
  bad.family = Family::Kind1;
  bad.m = 2;
  bad.d = 4;
  bad.coeffs = {1.0, 1.5, 0, 0, 0, 0};
  const WitnessClass c = classify(bad, quick());
  CHECK(c.verdict == Verdict::NotEW);
  CHECK(c.min_over_feasible == doctest::Approx(-0.5).epsilon(1e-10));
  // the product of opposite gamma_1 eigenvectors reaches -1/2
  Eigen::SelfAdjointEigenSolver<CMat> es(build_euclidean_gammas(4).gammas[0]);
  const CVec lo = es.eigenvectors().col(0), hi = es.eigenvectors().col(3);
  CHECK(expectation_vec(witness_matrix(bad).matrix, kron(lo, hi)) == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("interior scaling loses optimality") {
  WitnessSpec w = optimal_kind1(2, 4, {1, 1, 1, 1});
  for (std::size_t k = 1; k < w.coeffs.size(); ++k) w.coeffs[k] *= 0.5;
  const WitnessClass c = classify(w, quick());
  CHECK(c.verdict == Verdict::EW);
  CHECK_FALSE(c.optimal);
}

TEST_CASE("kind2 j=1 witnesses") {
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2) {
      const WitnessSpec w = optimal_kind2(2, 4, i1, i2, 1);
      const WitnessClass c = classify(w);
      CHECK(c.verdict == Verdict::EW);
      CHECK(c.closed_form_error < 1e-10);
      CHECK(c.optimal);
      CHECK(c.decomposable == Decomp::Decomposable);
      CHECK(sampled_product_min(w, 2000, 20 + 2 * i1 + i2) >= -1e-12);
    }
}

TEST_CASE("kind2 j=2 has a negative partial transpose") {
  const WitnessSpec w = optimal_kind2(2, 4, 0, 0, 2);
  const DecompResult d = decomposability(w);
  REQUIRE(d.pt_min.size() == 2);
  CHECK(d.pt_min[0] == doctest::Approx(-2.0).epsilon(1e-10));
  CHECK(joint_positive_trace(w) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("approx1 optimal witness") {
  const WitnessSpec w = optimal_approx1(2, 4, 0, 0);
  const WitnessClass c = classify(w);
  CHECK(c.verdict == Verdict::EW);
  CHECK(c.support_bound_valid);
  CHECK(c.support_bound == doctest::Approx(0.0));
  CHECK(sampled_product_min(w, 3000, 30) >= -1e-12);
  // the expectation-space bound alone cannot certify it
  CHECK(c.lp_min < -0.4);
}

TEST_CASE("approx2 optimal operators are positive") {
  const WitnessClass c = classify(optimal_approx2(2, 4, {0, 0, 0}), quick());
  CHECK(c.verdict == Verdict::PositiveOperator);
}

TEST_CASE("odd m witnesses") {
  const WitnessSpec w = build_odd_m_kind1(3, 4, {1, 0.5, -0.5, 0.5, -0.5, 0.2});
  const HermitianOperator W = witness_matrix(w);
  CHECK(W.dim() == 64);
  CHECK(is_hermitian(W.matrix));
  const WitnessSpec w2 = build_odd_m_kind2(3, 4, {1, 0.3, 0.3, 0.3, 0.3, 0.3, 0.3});
  CHECK(is_hermitian(witness_matrix(w2).matrix));
  CHECK_THROWS(build_odd_m_kind1(2, 4, {1, 0, 0, 0, 0, 0}));
}

TEST_CASE("support bound") {
  double b = 0.0;
  CHECK(support_bound(optimal_kind1(2, 4, {0, 0, 0, 0}), b));
  CHECK(b == 0.0);
}
