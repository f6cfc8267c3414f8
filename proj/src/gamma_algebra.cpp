#include "bsdw/gamma_algebra.hpp"

#include <algorithm>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

namespace bsdw {

namespace {

CMat pauli(int k) {
  CMat s = CMat::Zero(2, 2);
  switch (k) {
    case 1: s(0, 1) = 1.0; s(1, 0) = 1.0; break;
    case 2: s(0, 1) = cplx(0, -1); s(1, 0) = cplx(0, 1); break;
    case 3: s(0, 0) = 1.0; s(1, 1) = -1.0; break;
    default: s = CMat::Identity(2, 2);
  }
  return s;
}

CMat kron2(const CMat& a, const CMat& b) { return Eigen::kroneckerProduct(a, b).eval(); }

std::string label(const std::string& what, int i, int j = -1) {
  std::ostringstream os;
  os << what << "(" << i;
  if (j >= 0) os << "," << j;
  os << ")";
  return os.str();
}

bool is_exact_hermitian(const CMat& m) { return exactly_equal(m, m.adjoint()); }

}  // namespace

std::string rep_name(Rep r) { return r == Rep::Euclidean ? "euclidean" : "chiral4"; }

Rep parse_rep(const std::string& s) {
  if (s == "euclidean") return Rep::Euclidean;
  if (s == "chiral4") return Rep::Chiral4;
  throw DomainError("unknown representation: " + s);
}

bool exactly_equal(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

GammaBasis build_euclidean_gammas(int d) {
  if (d < 2) throw DomainError("build_euclidean_gammas: d must be >= 2");
  const int de = (d % 2 == 0) ? d : d - 1;

  // d = 2: sigma_1, sigma_2, gamma_S = i^{-1} sigma_1 sigma_2 = sigma_3
  std::vector<CMat> g{pauli(1), pauli(2), pauli(3)};
  int cur = 2;
  while (cur < de) {
    const Eigen::Index D = g[0].rows();
    std::vector<CMat> next;
    next.reserve(g.size() + 2);
    for (const auto& x : g) next.push_back(kron2(pauli(1), x));
    next.push_back(kron2(pauli(2), CMat::Identity(D, D)));
    cur += 2;
    CMat gs = CMat::Identity(2 * D, 2 * D);
    for (int i = 0; i < cur; ++i) gs = gs * next[i];
    next.push_back(ipow(-cur / 2) * gs);
    g = std::move(next);
  }

  GammaBasis b;
  b.d = d;
  b.rep = Rep::Euclidean;
  b.gammas = std::move(g);
  return b;
}

GammaBasis build_chiral4() {
  const CMat I2 = CMat::Identity(2, 2);
  GammaBasis b;
  b.d = 4;
  b.rep = Rep::Chiral4;
  CMat g0 = kron2(pauli(1), I2);
  CMat g1 = I_UNIT * kron2(pauli(2), pauli(1));
  CMat g2 = I_UNIT * kron2(pauli(2), pauli(2));
  CMat g3 = I_UNIT * kron2(pauli(2), pauli(3));
  CMat g5 = I_UNIT * g0 * g1 * g2 * g3;
  b.gammas = {g0, g1, g2, g3, g5};
  return b;
}

CMat gamma_product(const GammaBasis& basis, const std::vector<int>& idx) {
  const int D = basis.local_dim();
  CMat p = CMat::Identity(D, D);
  for (int i : idx) {
    if (i < 1 || i > static_cast<int>(basis.gammas.size()))
      throw DomainError("gamma_product: index out of range");
    p = p * basis.gammas[i - 1];
  }
  return p;
}

int hermitian_phase_power(const CMat& m) {
  for (int q = 0; q < 4; ++q) {
    CMat x = ipow(q) * m;
    if (is_exact_hermitian(x)) return q;
  }
  return -1;
}

std::vector<AlgebraElement> algebra_elements(const GammaBasis& basis) {
  if (basis.rep != Rep::Euclidean)
    throw UnsupportedError("algebra_elements: only the euclidean representation is supported");
  const int n = basis.d_eff();
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i + 1);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<AlgebraElement> out;
  out.reserve(subsets.size());
  for (auto& s : subsets) {
    CMat raw = gamma_product(basis, s);
    int q = hermitian_phase_power(raw);
    AlgebraElement e;
    e.index_set = s;
    e.phase = ipow(q);
    e.matrix = e.phase * raw;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<AlgebraElement> CommutingSets::flat() const {
  std::vector<AlgebraElement> out;
  out.insert(out.end(), c1.begin(), c1.end());
  out.insert(out.end(), c2.begin(), c2.end());
  out.insert(out.end(), c3.begin(), c3.end());
  return out;
}

namespace {

AlgebraElement make_element(const GammaBasis& g, std::vector<int> idx, const CMat& m) {
  CMat raw = gamma_product(g, idx);
  // raw is monomial, so one nonzero entry fixes the phase
  cplx ph{0.0, 0.0};
  for (Eigen::Index j = 0; j < raw.cols() && ph == cplx(0.0, 0.0); ++j)
    for (Eigen::Index i = 0; i < raw.rows(); ++i)
      if (raw(i, j) != cplx(0.0, 0.0)) {
        ph = m(i, j) / raw(i, j);
        break;
      }
  AlgebraElement e;
  e.index_set = std::move(idx);
  e.phase = ph;
  e.matrix = m;
  return e;
}

}  // namespace

CommutingSets commuting_sets(int d) {
  if (d < 2 || d % 2 != 0) throw DomainError("commuting_sets: d must be even and >= 2");
  const GammaBasis g = build_euclidean_gammas(d);
  const int h = d / 2;
  CommutingSets cs;
  cs.d = d;

  std::vector<CMat> c1(h);
  for (int k = 1; k <= h; ++k) {
    std::vector<int> idx;
    for (int i = 1; i <= 2 * k; ++i) idx.push_back(i);
    c1[k - 1] = ipow(-k) * gamma_product(g, idx);
    cs.c1.push_back(make_element(g, idx, c1[k - 1]));
  }
  const CMat& g1 = g.gammas[0];
  for (int i = 1; i <= h; ++i) {
    CMat m2 = ((i - 1) % 2 == 0 ? 1.0 : -1.0) * (g1 * c1[i - 1] * c1[0]);
    std::vector<int> idx2{1};
    for (int k = 3; k <= 2 * i; ++k) idx2.push_back(k);
    cs.c2.push_back(make_element(g, idx2, m2));

    CMat m3 = I_UNIT * (g1 * c1[i - 1]);
    std::vector<int> idx3;
    for (int k = 2; k <= 2 * i; ++k) idx3.push_back(k);
    cs.c3.push_back(make_element(g, idx3, m3));
  }
  return cs;
}

VerificationReport verify_clifford(const GammaBasis& basis) {
  VerificationReport rep;
  const auto& g = basis.gammas;
  const int n = static_cast<int>(g.size());
  const int D = basis.local_dim();
  const CMat I = CMat::Identity(D, D);

  if (basis.rep == Rep::Euclidean) {
    for (int i = 0; i < n; ++i) {
      if (!is_exact_hermitian(g[i])) rep.violations.push_back(label("hermiticity", i + 1));
      for (int j = i; j < n; ++j) {
        CMat ac = g[i] * g[j] + g[j] * g[i];
        CMat want = (i == j) ? CMat(2.0 * I) : CMat(CMat::Zero(D, D));
        if (!exactly_equal(ac, want))
          rep.violations.push_back(i == j ? label("square", i + 1) : label("anticommutator", i + 1, j + 1));
      }
      // odd index symmetric, even index antisymmetric
      const CMat t = g[i].transpose();
      const bool odd = ((i + 1) % 2) == 1;
      if (!exactly_equal(t, odd ? g[i] : CMat(-g[i]))) rep.violations.push_back(label("symmetry_parity", i + 1));
    }
    const int de = basis.d_eff();
    if (n == de + 1) {
      std::vector<int> idx;
      for (int i = 1; i <= de; ++i) idx.push_back(i);
      CMat gs = ipow(-de / 2) * gamma_product(basis, idx);
      if (!exactly_equal(gs, g[de])) rep.violations.push_back("gamma_S_definition");
    } else {
      rep.violations.push_back("basis_size");
    }
    return rep;
  }

  // chiral4, Minkowski signature (+,-,-,-)
  if (n != 5) {
    rep.violations.push_back("basis_size");
    return rep;
  }
  for (int i = 0; i < 4; ++i) {
    const double sq = (i == 0) ? 1.0 : -1.0;
    if (!exactly_equal(g[i] * g[i], CMat(sq * I))) rep.violations.push_back(label("square", i));
    const CMat adj = g[i].adjoint();
    if (!exactly_equal(adj, i == 0 ? g[i] : CMat(-g[i]))) rep.violations.push_back(label("hermiticity", i));
    for (int j = i + 1; j < 5; ++j) {
      CMat ac = g[i] * g[j] + g[j] * g[i];
      if (!exactly_equal(ac, CMat::Zero(D, D)))
        rep.violations.push_back(label("anticommutator", i, j == 4 ? 5 : j));
    }
  }
  CMat g5 = I_UNIT * g[0] * g[1] * g[2] * g[3];
  if (!exactly_equal(g5, g[4])) rep.violations.push_back("gamma5_definition");
  if (!exactly_equal(g[4] * g[4], I)) rep.violations.push_back(label("square", 5));
  if (!is_exact_hermitian(g[4])) rep.violations.push_back(label("hermiticity", 5));
  return rep;
}

}  // namespace bsdw
