#include "bsdw/operator_space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace bsdw {

namespace {

std::size_t g_max_dim = 4096;

std::size_t ipow_size(std::size_t base, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (std::size_t(1) << 40) / std::max<std::size_t>(base, 1)) return std::size_t(1) << 41;
    r *= base;
  }
  return r;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::size_t max_dim() { return g_max_dim; }
void set_max_dim(std::size_t cap) { g_max_dim = cap; }

void check_capacity(std::size_t dim, const char* who) {
  if (dim > g_max_dim)
    throw CapacityError(std::string(who) + ": dimension " + std::to_string(dim) + " exceeds cap " +
                        std::to_string(g_max_dim));
}

CMat kron(const CMat& a, const CMat& b) {
  check_capacity(static_cast<std::size_t>(a.rows() * b.rows()), "kron");
  return Eigen::kroneckerProduct(a, b).eval();
}

HermitianOperator tensor_power(const CMat& a, int m) {
  if (m < 1) throw DomainError("tensor_power: m must be >= 1");
  if (a.rows() != a.cols()) throw DomainError("tensor_power: matrix must be square");
  return tensor_product(TensorTerm(m, a));
}

HermitianOperator tensor_product(const TensorTerm& factors) {
  if (factors.empty()) throw DomainError("tensor_product: no factors");
  const Eigen::Index D = factors[0].rows();
  for (const auto& f : factors)
    if (f.rows() != D || f.cols() != D) throw DomainError("tensor_product: factor shape mismatch");
  const std::size_t n = ipow_size(static_cast<std::size_t>(D), static_cast<int>(factors.size()));
  check_capacity(n, "tensor_product");
  HermitianOperator op;
  op.m = static_cast<int>(factors.size());
  op.local_dim = static_cast<int>(D);
  op.matrix = CMat::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  add_tensor_term(op.matrix, 1.0, factors);
  return op;
}

void add_tensor_term(CMat& target, cplx c, const TensorTerm& factors) {
  struct Entry {
    Eigen::Index r, c;
    cplx v;
  };
  std::vector<Entry> acc{{0, 0, c}};
  for (const auto& f : factors) {
    std::vector<Entry> loc;
    for (Eigen::Index j = 0; j < f.cols(); ++j)
      for (Eigen::Index i = 0; i < f.rows(); ++i)
        if (f(i, j) != cplx(0.0, 0.0)) loc.push_back({i, j, f(i, j)});
    std::vector<Entry> next;
    next.reserve(acc.size() * loc.size());
    const Eigen::Index D = f.rows();
    for (const auto& a : acc)
      for (const auto& l : loc) next.push_back({a.r * D + l.r, a.c * D + l.c, a.v * l.v});
    acc.swap(next);
  }
  for (const auto& e : acc) {
    if (e.r >= target.rows() || e.c >= target.cols()) throw DomainError("add_tensor_term: dimension mismatch");
    target(e.r, e.c) += e.v;
  }
}

HermitianOperator assemble(const std::vector<double>& coeffs, const std::vector<HermitianOperator>& ops) {
  if (coeffs.size() != ops.size() + 1) throw DomainError("assemble: need one coefficient per operator plus a_0");
  if (ops.empty()) throw DomainError("assemble: no operators to fix the dimension");
  const Eigen::Index n = ops[0].dim();
  for (const auto& o : ops)
    if (o.dim() != n) throw DomainError("assemble: operator dimension mismatch");
  HermitianOperator out;
  out.m = ops[0].m;
  out.local_dim = ops[0].local_dim;
  out.matrix = coeffs[0] * CMat::Identity(n, n);
  for (std::size_t k = 0; k < ops.size(); ++k)
    if (coeffs[k + 1] != 0.0) out.matrix += coeffs[k + 1] * ops[k].matrix;
  return out;
}

HermitianOperator assemble_terms(const std::vector<double>& coeffs, const std::vector<TensorTerm>& terms) {
  if (coeffs.size() != terms.size() + 1) throw DomainError("assemble_terms: coefficient count mismatch");
  if (terms.empty()) throw DomainError("assemble_terms: no terms");
  const int m = static_cast<int>(terms[0].size());
  const Eigen::Index D = terms[0][0].rows();
  const std::size_t n = ipow_size(static_cast<std::size_t>(D), m);
  check_capacity(n, "assemble_terms");
  HermitianOperator out;
  out.m = m;
  out.local_dim = static_cast<int>(D);
  const auto N = static_cast<Eigen::Index>(n);
  out.matrix = coeffs[0] * CMat::Identity(N, N);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (static_cast<int>(terms[k].size()) != m) throw DomainError("assemble_terms: factor count mismatch");
    if (coeffs[k + 1] != 0.0) add_tensor_term(out.matrix, coeffs[k + 1], terms[k]);
  }
  return out;
}

CMat partial_transpose(const CMat& op, int local_dim, int m, int subsystem) {
  if (subsystem < 1 || subsystem > m) throw DomainError("partial_transpose: subsystem index out of range");
  const std::size_t n = ipow_size(static_cast<std::size_t>(local_dim), m);
  if (static_cast<std::size_t>(op.rows()) != n || op.cols() != op.rows())
    throw DomainError("partial_transpose: matrix does not match local_dim^m");
  const Eigen::Index stride = static_cast<Eigen::Index>(ipow_size(static_cast<std::size_t>(local_dim), m - subsystem));
  const Eigen::Index D = local_dim;
  const Eigen::Index N = op.rows();
  CMat out(N, N);
  for (Eigen::Index c = 0; c < N; ++c) {
    const Eigen::Index dc = (c / stride) % D;
    for (Eigen::Index r = 0; r < N; ++r) {
      const Eigen::Index dr = (r / stride) % D;
      out(r + (dc - dr) * stride, c + (dr - dc) * stride) = op(r, c);
    }
  }
  return out;
}

HermitianOperator partial_transpose(const HermitianOperator& op, int subsystem) {
  HermitianOperator out;
  out.m = op.m;
  out.local_dim = op.local_dim;
  out.matrix = partial_transpose(op.matrix, op.local_dim, op.m, subsystem);
  return out;
}

bool is_hermitian(const CMat& a, double rel_tol) {
  if (a.rows() != a.cols()) return false;
  const double na = a.norm();
  if (na == 0.0) return true;
  return (a - a.adjoint()).norm() <= rel_tol * na;
}

Spectrum spectrum(const CMat& a) {
  if (!is_hermitian(a)) throw DomainError("spectrum: operator is not hermitian within tolerance");
  const int n = static_cast<int>(a.rows());
  // block structure from the nonzero pattern; monomial sums split into many small blocks
  UnionFind uf(n);
  for (int c = 0; c < n; ++c)
    for (int r = c + 1; r < n; ++r)
      if (a(r, c) != cplx(0.0, 0.0) || a(c, r) != cplx(0.0, 0.0)) uf.unite(r, c);
  std::vector<std::vector<int>> blocks(n);
  for (int i = 0; i < n; ++i) blocks[uf.find(i)].push_back(i);

  Spectrum s;
  s.eigenvalues.reserve(n);
  for (const auto& b : blocks) {
    if (b.empty()) continue;
    const auto k = static_cast<Eigen::Index>(b.size());
    if (k == 1) {
      s.eigenvalues.push_back(a(b[0], b[0]).real());
      continue;
    }
    CMat sub(k, k);
    for (Eigen::Index j = 0; j < k; ++j)
      for (Eigen::Index i = 0; i < k; ++i) sub(i, j) = a(b[i], b[j]);
    Eigen::SelfAdjointEigenSolver<CMat> es(sub, Eigen::EigenvaluesOnly);
    for (Eigen::Index i = 0; i < k; ++i) s.eigenvalues.push_back(es.eigenvalues()(i));
  }
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  s.min_eigenvalue = s.eigenvalues.empty() ? 0.0 : s.eigenvalues.front();
  return s;
}

Spectrum spectrum(const HermitianOperator& op) { return spectrum(op.matrix); }

std::vector<double> closed_form_spectrum_kind1(const std::vector<double>& a, int m, int d) {
  if (d < 2 || d % 2 != 0 || m < 2 || m % 2 != 0)
    throw DomainError("closed_form_spectrum_kind1: m and d must be even");
  if (static_cast<int>(a.size()) != d + 2) throw DomainError("closed_form_spectrum_kind1: need d+2 coefficients");
  const int k = m * d / 2;
  if (k % 2 != 0) throw DomainError("closed_form_spectrum_kind1: phase i^{-md/2} is not real");
  const double phase = ipow(-k).real();
  const std::size_t mult = std::size_t(1) << (k - d);
  std::vector<double> out;
  out.reserve(mult << d);
  for (unsigned bits = 0; bits < (1u << d); ++bits) {
    double v = a[0];
    int parity = 0;
    for (int i = 0; i < d; ++i) {
      const int b = (bits >> i) & 1;
      parity += b;
      v += sgn_bit(b) * a[i + 1];
    }
    v += phase * sgn_bit(parity) * a[d + 1];
    out.insert(out.end(), mult, v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> closed_form_spectrum_kind2(const std::vector<double>& a, int m, int d) {
  if (d < 2 || d % 2 != 0 || m < 2 || m % 2 != 0)
    throw DomainError("closed_form_spectrum_kind2: m and d must be even");
  const int h = d / 2;
  if (static_cast<int>(a.size()) != 3 * h + 1) throw DomainError("closed_form_spectrum_kind2: need 3d/2+1 coefficients");
  const int k = m * d / 2;
  const std::size_t mult = std::size_t(1) << (k - (h + 1));
  std::vector<double> out;
  out.reserve(mult << (h + 1));
  for (unsigned bits = 0; bits < (1u << (h + 1)); ++bits) {
    auto ib = [&](int idx) { return static_cast<int>((bits >> (idx - 1)) & 1u); };
    double v = a[0];
    for (int q = 1; q <= h + 1; ++q) v += sgn_bit(ib(q)) * a[q];
    for (int q = 2; q <= h; ++q) v += sgn_bit(ib(1) + ib(h + 1) + ib(q)) * a[h + q];
    for (int q = 1; q <= h; ++q) v += sgn_bit(m / 2 + ib(h + 1) + ib(q)) * a[d + q];
    out.insert(out.end(), mult, v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double expectation(const CMat& op, const CMat& rho) {
  if (op.rows() != rho.rows() || op.cols() != rho.cols()) throw DomainError("expectation: dimension mismatch");
  if (std::abs(rho.trace() - cplx(1.0, 0.0)) > 1e-8) throw DomainError("expectation: state is not trace-normalized");
  return op.cwiseProduct(rho.transpose()).sum().real();
}

double expectation(const HermitianOperator& op, const CMat& rho) { return expectation(op.matrix, rho); }

double expectation_vec(const CMat& op, const CVec& psi) {
  if (op.rows() != psi.size()) throw DomainError("expectation_vec: dimension mismatch");
  if (std::abs(psi.norm() - 1.0) > 1e-8) throw DomainError("expectation_vec: vector is not normalized");
  return psi.dot(op * psi).real();
}

cplx hs_inner(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("hs_inner: dimension mismatch");
  return a.conjugate().cwiseProduct(b).sum();
}

double hs_norm(const CMat& a) { return a.norm(); }

bool multiset_equal(std::vector<double> a, std::vector<double> b, double tol) {
  if (a.size() != b.size()) return false;
  return multiset_distance(std::move(a), std::move(b)) <= tol;
}

double multiset_distance(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return INFINITY;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double w = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) w = std::max(w, std::abs(a[i] - b[i]));
  return w;
}

}  // namespace bsdw
