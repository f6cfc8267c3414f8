#include "doctest.h"

#include <random>

#include "bsdw/operator_space.hpp"
#include "helpers.hpp"

using namespace bsdw;
using testing_util::maxabs;
using testing_util::pauli;
using testing_util::random_hermitian;
using testing_util::random_matrix;

namespace {

// entrywise definition: (A^{T_k})_{(i),(j)} = A_{(i with i_k <-> j_k),(j ...)}
CMat pt_reference(const CMat& a, int D, int m, int k) {
  const Eigen::Index n = a.rows();
  CMat out(n, n);
  std::vector<int> ri(m), ci(m);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) {
      Eigen::Index x = r, y = c;
      for (int s = m - 1; s >= 0; --s) {
        ri[s] = static_cast<int>(x % D);
        ci[s] = static_cast<int>(y % D);
        x /= D;
        y /= D;
      }
      std::swap(ri[k - 1], ci[k - 1]);
      Eigen::Index r2 = 0, c2 = 0;
      for (int s = 0; s < m; ++s) {
        r2 = r2 * D + ri[s];
        c2 = c2 * D + ci[s];
      }
      out(r, c) = a(r2, c2);
    }
  return out;
}

}  // namespace

TEST_CASE("kron matches the block definition") {
  std::mt19937_64 rng(1);
  const CMat a = random_matrix(2, rng), b = random_matrix(3, rng);
  const CMat k = kron(a, b);
  REQUIRE(k.rows() == 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(maxabs(k.block(3 * i, 3 * j, 3, 3) - a(i, j) * b) == 0.0);
}

TEST_CASE("tensor power and product") {
  const HermitianOperator z3 = tensor_power(pauli(3), 3);
  CHECK(z3.m == 3);
  CHECK(z3.local_dim == 2);
  CHECK(z3.dim() == 8);
  const HermitianOperator xz = tensor_product({pauli(1), pauli(3)});
  CHECK(maxabs(xz.matrix - kron(pauli(1), pauli(3))) == 0.0);
  CMat acc = CMat::Zero(4, 4);
  add_tensor_term(acc, 2.0, {pauli(1), pauli(3)});
  CHECK(maxabs(acc - 2.0 * xz.matrix) == 0.0);
}

TEST_CASE("assemble") {
  const auto op = assemble_terms({0.5, 1.0, -2.0}, {{pauli(1), pauli(1)}, {pauli(3), pauli(3)}});
  const CMat want = 0.5 * CMat::Identity(4, 4) + kron(pauli(1), pauli(1)) - 2.0 * kron(pauli(3), pauli(3));
  CHECK(maxabs(op.matrix - want) < 1e-15);
  const auto op2 = assemble({0.5, 1.0, -2.0}, {tensor_product({pauli(1), pauli(1)}), tensor_product({pauli(3), pauli(3)})});
  CHECK(maxabs(op2.matrix - want) < 1e-15);
}

TEST_CASE("partial transpose against the index definition") {
  std::mt19937_64 rng(2);
  for (int m : {2, 3})
    for (int D : {2, 3}) {
      int n = 1;
      for (int s = 0; s < m; ++s) n *= D;
      const CMat a = random_matrix(n, rng);
      for (int k = 1; k <= m; ++k) {
        CAPTURE(m);
        CAPTURE(D);
        CAPTURE(k);
        CHECK(maxabs(partial_transpose(a, D, m, k) - pt_reference(a, D, m, k)) == 0.0);
        CHECK(maxabs(partial_transpose(partial_transpose(a, D, m, k), D, m, k) - a) == 0.0);
      }
      CMat full = a;
      for (int k = 1; k <= m; ++k) full = partial_transpose(full, D, m, k);
      CHECK(maxabs(full - a.transpose()) == 0.0);
    }
  CHECK_THROWS(partial_transpose(CMat::Identity(4, 4), 2, 2, 3));
}

TEST_CASE("Bell state partial transpose has eigenvalue -1/2") {
  CVec phi = CVec::Zero(4);
  phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
  const CMat rho = phi * phi.adjoint();
  CHECK(spectrum(partial_transpose(rho, 2, 2, 1)).min_eigenvalue == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("spectrum of a random hermitian matrix") {
  std::mt19937_64 rng(3);
  const CMat h = random_hermitian(12, rng);
  const Spectrum s = spectrum(h);
  REQUIRE(s.eigenvalues.size() == 12);
  CHECK(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
  CHECK(s.min_eigenvalue == s.eigenvalues.front());
  double tr = 0.0;
  for (double e : s.eigenvalues) tr += e;
  CHECK(tr == doctest::Approx(h.trace().real()).epsilon(1e-12));
  CHECK(is_hermitian(h));
  CHECK_FALSE(is_hermitian(random_matrix(4, rng)));
}

TEST_CASE("hilbert-schmidt helpers") {
  std::mt19937_64 rng(4);
  const CMat a = random_matrix(5, rng), b = random_matrix(5, rng);
  CHECK(std::abs(hs_inner(a, b) - (a.adjoint() * b).trace()) < 1e-12);
  CHECK(hs_norm(a) == doctest::Approx(a.norm()).epsilon(1e-14));
  CVec v = CVec::Zero(2);
  v(0) = 1.0;
  CHECK(expectation_vec(pauli(3), v) == 1.0);
  CHECK(expectation(pauli(3), CMat(v * v.adjoint())) == 1.0);
}

TEST_CASE("multiset comparison") {
  CHECK(multiset_equal({1.0, 2.0, 2.0}, {2.0, 1.0, 2.0}, 1e-12));
  CHECK_FALSE(multiset_equal({1.0, 2.0, 2.0}, {1.0, 1.0, 2.0}, 1e-12));
  CHECK_FALSE(multiset_equal({1.0}, {1.0, 1.0}, 1e-12));
  CHECK(multiset_distance({0.0, 1.0}, {1.0, 0.5}) == doctest::Approx(0.5));
}

TEST_CASE("capacity guard") {
  const std::size_t old = max_dim();
  set_max_dim(16);
  CHECK_THROWS_AS(tensor_power(pauli(1), 5), CapacityError);
  CHECK_NOTHROW(tensor_power(pauli(1), 4));
  set_max_dim(old);
}

TEST_CASE("closed-form spectra need even m") {
  CHECK_THROWS_AS(closed_form_spectrum_kind1({1, 0, 0, 0}, 3, 2), DomainError);
  CHECK_THROWS_AS(closed_form_spectrum_kind2({1, 0, 0}, 2, 2), DomainError);
}
