#pragma once

#include <random>

#include "bsdw/types.hpp"

namespace testing_util {

inline bsdw::CMat pauli(int k) {
  bsdw::CMat s = bsdw::CMat::Zero(2, 2);
  if (k == 0) return bsdw::CMat::Identity(2, 2);
  if (k == 1) s << 0, 1, 1, 0;
  if (k == 2) s << 0, bsdw::cplx(0, -1), bsdw::cplx(0, 1), 0;
  if (k == 3) s << 1, 0, 0, -1;
  return s;
}

inline bsdw::CMat random_matrix(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  bsdw::CMat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = bsdw::cplx(g(rng), g(rng));
  return a;
}

inline bsdw::CMat random_hermitian(int n, std::mt19937_64& rng) {
  const bsdw::CMat a = random_matrix(n, rng);
  return (a + a.adjoint()) / 2.0;
}

inline double maxabs(const bsdw::CMat& a) { return a.cwiseAbs().maxCoeff(); }

}  // namespace testing_util
