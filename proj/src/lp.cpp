#include "bsdw/lp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

#include <Eigen/QR>

namespace bsdw {

std::string status_name(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Unbounded: return "unbounded";
    default: return "infeasible";
  }
}

std::string region_name(RegionFamily f) {
  switch (f) {
    case RegionFamily::Kind1: return "kind1";
    case RegionFamily::Kind2: return "kind2";
    case RegionFamily::Approx1: return "approx1";
    default: return "approx2";
  }
}

RegionFamily parse_region(const std::string& s) {
  if (s == "kind1") return RegionFamily::Kind1;
  if (s == "kind2") return RegionFamily::Kind2;
  if (s == "approx1") return RegionFamily::Approx1;
  if (s == "approx2") return RegionFamily::Approx2;
  throw DomainError("unknown region family: " + s);
}

// ---------------------------------------------------------------- simplex

namespace {

constexpr double kPivotEps = 1e-11;

struct Tableau {
  Eigen::MatrixXd t;  // rows 0..m-1 constraints, row m objective; last column rhs
  std::vector<int> basis;
  int rows() const { return static_cast<int>(basis.size()); }
  int rhs() const { return static_cast<int>(t.cols()) - 1; }

  void pivot(int p, int q) {
    t.row(p) /= t(p, q);
    for (int i = 0; i < t.rows(); ++i) {
      if (i == p) continue;
      const double f = t(i, q);
      if (f != 0.0) t.row(i) -= f * t.row(p);
    }
    basis[p] = q;
  }

  // Bland's rule; returns false when unbounded
  bool run(const std::vector<bool>& allowed) {
    const int m = rows();
    for (;;) {
      int q = -1;
      for (int j = 0; j < rhs(); ++j)
        if (allowed[j] && t(m, j) < -1e-10) {
          q = j;
          break;
        }
      if (q < 0) return true;
      int p = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i) {
        if (t(i, q) <= kPivotEps) continue;
        const double r = t(i, rhs()) / t(i, q);
        if (r < best - 1e-13 || (std::abs(r - best) <= 1e-13 && p >= 0 && basis[i] < basis[p])) {
          best = r;
          p = i;
        }
      }
      if (p < 0) return false;
      pivot(p, q);
    }
  }
};

}  // namespace

LpSolution simplex_min(const LpProblem& pr) {
  const int n = pr.dim();
  for (const auto& h : pr.halfspaces)
    if (h.g.size() != n) throw DomainError("simplex_min: halfspace dimension mismatch");

  // y = P + 1 in [0, 2]; rows a . y <= b
  std::vector<RVec> A;
  std::vector<double> b;
  for (const auto& h : pr.halfspaces) {
    A.push_back(-h.g);
    b.push_back(h.h - h.g.sum());
  }
  for (int k = 0; k < n; ++k) {
    RVec e = RVec::Zero(n);
    e(k) = 1.0;
    A.push_back(e);
    b.push_back(2.0);
  }
  const int m = static_cast<int>(A.size());
  int n_art = 0;
  for (double v : b)
    if (v < 0) ++n_art;
  const int cols = n + m + n_art;

  Tableau T;
  T.t = Eigen::MatrixXd::Zero(m + 1, cols + 1);
  T.basis.assign(m, -1);
  int art = n + m;
  std::vector<bool> is_art(cols, false);
  for (int i = 0; i < m; ++i) {
    const double s = b[i] < 0 ? -1.0 : 1.0;
    T.t.row(i).head(n) = s * A[i].transpose();
    T.t(i, n + i) = s;
    T.t(i, cols) = s * b[i];
    if (b[i] < 0) {
      T.t(i, art) = 1.0;
      is_art[art] = true;
      T.basis[i] = art++;
    } else {
      T.basis[i] = n + i;
    }
  }

  LpSolution sol;
  std::vector<bool> allowed(cols, true);
  if (n_art > 0) {
    for (int i = 0; i < m; ++i)
      if (is_art[T.basis[i]]) T.t.row(m) -= T.t.row(i);
    for (int j = n + m; j < cols; ++j) T.t(m, j) += 1.0;
    T.run(allowed);
    if (-T.t(m, cols) > 1e-9) {
      sol.status = LpStatus::Infeasible;
      return sol;
    }
    for (int i = 0; i < m; ++i) {
      if (!is_art[T.basis[i]]) continue;
      for (int j = 0; j < n + m; ++j)
        if (std::abs(T.t(i, j)) > 1e-9) {
          T.pivot(i, j);
          break;
        }
    }
    for (int j = n + m; j < cols; ++j) allowed[j] = false;
  }

  // phase 2 objective in y: c . y + (c0 - sum c)
  RVec cost = RVec::Zero(cols);
  cost.head(n) = pr.c;
  T.t.row(m).setZero();
  T.t.row(m).head(cols) = cost.transpose();
  for (int i = 0; i < m; ++i) {
    const double cb = cost(T.basis[i]);
    if (cb != 0.0) T.t.row(m) -= cb * T.t.row(i);
  }
  if (!T.run(allowed)) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }
  RVec y = RVec::Zero(n);
  for (int i = 0; i < m; ++i)
    if (T.basis[i] < n) y(T.basis[i]) = T.t(i, cols);
  sol.argmin = y.array() - 1.0;
  sol.optimum = pr.c0 + pr.c.dot(sol.argmin);
  sol.status = LpStatus::Optimal;
  return sol;
}

// ---------------------------------------------------------------- enumeration

namespace {

struct Bits {
  std::vector<std::uint64_t> w;
  explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
  void set(std::size_t i) { w[i / 64] |= (std::uint64_t(1) << (i % 64)); }
  bool test(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1u; }
  void resize(std::size_t n) { w.resize((n + 63) / 64, 0); }
};

int common_count(const Bits& a, const Bits& b) {
  int c = 0;
  for (std::size_t i = 0; i < a.w.size(); ++i) c += std::popcount(a.w[i] & b.w[i]);
  return c;
}

struct Vtx {
  RVec x;
  Bits tight;
};

void dedupe(std::vector<RVec>& vs, double tol) {
  std::sort(vs.begin(), vs.end(), [](const RVec& a, const RVec& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (a(i) != b(i)) return a(i) < b(i);
    return false;
  });
  std::vector<RVec> out;
  for (auto& v : vs) {
    bool dup = false;
    for (auto it = out.rbegin(); it != out.rend(); ++it)
      if ((*it - v).cwiseAbs().maxCoeff() <= tol) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(v);
  }
  vs.swap(out);
}

}  // namespace

std::vector<RVec> vertex_enumerate(const std::vector<Halfspace>& hs, int n, bool box) {
  if (n < 1) throw DomainError("vertex_enumerate: dimension must be >= 1");
  if (n > 16) throw CapacityError("vertex_enumerate: dimension above 16");
  for (const auto& h : hs)
    if (h.g.size() != n) throw DomainError("vertex_enumerate: halfspace dimension mismatch");

  const double R = box ? 1.0 : 1e3;
  std::vector<Halfspace> all;
  for (int k = 0; k < n; ++k) {
    Halfspace lo{RVec::Zero(n), R}, hi{RVec::Zero(n), R};
    lo.g(k) = 1.0;
    hi.g(k) = -1.0;
    all.push_back(lo);
    all.push_back(hi);
  }
  const std::size_t n_box = all.size();
  all.insert(all.end(), hs.begin(), hs.end());
  const std::size_t total = all.size();

  std::vector<Vtx> V;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Vtx v{RVec(n), Bits(total)};
    for (int k = 0; k < n; ++k) {
      const bool up = (mask >> k) & 1u;
      v.x(k) = up ? R : -R;
      v.tight.set(2 * k + (up ? 1 : 0));
    }
    V.push_back(std::move(v));
  }

  for (std::size_t c = n_box; c < total; ++c) {
    const auto& H = all[c];
    const double tol = 1e-9 * std::max(1.0, H.g.cwiseAbs().sum());
    std::vector<double> val(V.size());
    std::vector<int> plus, minus;
    for (std::size_t i = 0; i < V.size(); ++i) {
      val[i] = H.g.dot(V[i].x) + H.h;
      if (val[i] > tol) plus.push_back(static_cast<int>(i));
      else if (val[i] < -tol) minus.push_back(static_cast<int>(i));
    }
    if (minus.empty()) {
      for (std::size_t i = 0; i < V.size(); ++i)
        if (std::abs(val[i]) <= tol) V[i].tight.set(c);
      continue;
    }
    std::vector<Vtx> next;
    for (std::size_t i = 0; i < V.size(); ++i) {
      if (val[i] > tol) next.push_back(V[i]);
      else if (val[i] >= -tol) {
        next.push_back(V[i]);
        next.back().tight.set(c);
      }
    }
    for (int p : plus)
      for (int q : minus) {
        if (common_count(V[p].tight, V[q].tight) < n - 1) continue;
        std::vector<int> act;
        for (std::size_t k = 0; k < c; ++k)
          if (V[p].tight.test(k) && V[q].tight.test(k)) act.push_back(static_cast<int>(k));
        Eigen::MatrixXd M(act.size(), n);
        for (std::size_t r = 0; r < act.size(); ++r) M.row(r) = all[act[r]].g.transpose();
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(M);
        qr.setThreshold(1e-9);
        if (qr.rank() != n - 1) continue;
        const double t = val[p] / (val[p] - val[q]);
        Vtx nv{V[p].x + t * (V[q].x - V[p].x), Bits(total)};
        for (int k : act) nv.tight.set(k);
        nv.tight.set(c);
        next.push_back(std::move(nv));
      }
    V.swap(next);
  }

  std::vector<RVec> out;
  for (const auto& v : V) {
    if (!box)
      for (std::size_t k = 0; k < n_box; ++k)
        if (v.tight.test(k)) throw DomainError("vertex_enumerate: region is unbounded");
    out.push_back(v.x);
  }
  dedupe(out, 1e-9);
  return out;
}

std::vector<RVec> vertex_enumerate_bruteforce(const std::vector<Halfspace>& hs, int n, bool box) {
  std::vector<Halfspace> all = hs;
  if (box)
    for (int k = 0; k < n; ++k) {
      Halfspace lo{RVec::Zero(n), 1.0}, hi{RVec::Zero(n), 1.0};
      lo.g(k) = 1.0;
      hi.g(k) = -1.0;
      all.push_back(lo);
      all.push_back(hi);
    }
  const int M = static_cast<int>(all.size());
  double count = 1.0;
  for (int i = 0; i < n; ++i) count = count * (M - i) / (i + 1);
  if (count > 1e6) throw CapacityError("vertex_enumerate_bruteforce: more than 1e6 constraint subsets");

  std::vector<RVec> out;
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  if (M < n) return out;
  for (;;) {
    Eigen::MatrixXd A(n, n);
    RVec rhs(n);
    for (int r = 0; r < n; ++r) {
      A.row(r) = all[idx[r]].g.transpose();
      rhs(r) = -all[idx[r]].h;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    lu.setThreshold(1e-10);
    if (lu.rank() == n) {
      RVec x = lu.solve(rhs);
      bool ok = true;
      for (const auto& h : all)
        if (h.g.dot(x) + h.h < -1e-9) {
          ok = false;
          break;
        }
      if (ok) out.push_back(x);
    }
    int k = n - 1;
    while (k >= 0 && idx[k] == M - n + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  dedupe(out, 1e-9);
  return out;
}

// ---------------------------------------------------------------- regions

namespace {

void require_even(int d, const char* who) {
  if (d < 2 || d % 2 != 0) throw DomainError(std::string(who) + ": d must be even and >= 2");
}

Polytope finish(int n, std::vector<Halfspace> hs) {
  Polytope p;
  p.dim = n;
  p.box = true;
  p.halfspaces = std::move(hs);
  p.vertices = vertex_enumerate(p.halfspaces, n, true);
  return p;
}

}  // namespace

std::vector<Halfspace> region_halfspaces(RegionFamily f, int d) {
  require_even(d, "region_halfspaces");
  const int h = d / 2;
  const int n = region_dim(f, d);
  std::vector<Halfspace> hs;
  switch (f) {
    case RegionFamily::Kind1:
    case RegionFamily::Approx1: {
      const double off = (f == RegionFamily::Kind1) ? 1.0 : std::sqrt(2.0);
      for (unsigned s = 0; s < (1u << n); ++s) {
        Halfspace H{RVec(n), off};
        for (int k = 0; k < n; ++k) H.g(k) = sgn_bit((s >> k) & 1u);
        hs.push_back(H);
      }
      break;
    }
    case RegionFamily::Kind2:
      for (int j = 1; j <= h; ++j)
        for (unsigned s = 0; s < 8u; ++s) {
          Halfspace H{RVec::Zero(n), 1.0};
          H.g(j - 1) = sgn_bit(s & 1u);
          H.g(j + h - 1) = sgn_bit((s >> 1) & 1u);
          H.g(j + d - 1) = sgn_bit((s >> 2) & 1u);
          hs.push_back(H);
        }
      break;
    case RegionFamily::Approx2:
      for (int j = 1; j <= h; ++j)
        for (unsigned s = 0; s < 16u; ++s) {
          Halfspace H{RVec::Zero(n), 2.0};
          H.g(j - 1) = sgn_bit(s & 1u);
          H.g(j + h - 1) = sgn_bit((s >> 1) & 1u);
          H.g(j + d - 1) = sgn_bit((s >> 2) & 1u);
          H.g(n - 1) = sgn_bit((s >> 3) & 1u);
          hs.push_back(H);
        }
      break;
  }
  return hs;
}

int region_dim(RegionFamily f, int d) {
  switch (f) {
    case RegionFamily::Kind1: return d + 1;
    case RegionFamily::Kind2: return 3 * d / 2;
    case RegionFamily::Approx1: return d + 2;
    default: return 3 * d / 2 + 1;
  }
}

Polytope feasible_region(RegionFamily f, int d) {
  auto hs = region_halfspaces(f, d);
  return finish(region_dim(f, d), std::move(hs));
}

Polytope feasible_region_kind1(int d) { return feasible_region(RegionFamily::Kind1, d); }
Polytope feasible_region_kind2(int d) { return feasible_region(RegionFamily::Kind2, d); }
Polytope feasible_region_approx1(int d) { return feasible_region(RegionFamily::Approx1, d); }
Polytope feasible_region_approx2(int d) { return feasible_region(RegionFamily::Approx2, d); }

Polytope ssnnev_region(const Polytope& feasible, double a0) {
  if (!contains(feasible, RVec::Zero(feasible.dim)))
    throw DomainError("ssnnev_region: feasible region must contain the origin");
  std::vector<RVec> vs = feasible.vertices;
  if (vs.empty()) vs = vertex_enumerate(feasible.halfspaces, feasible.dim, feasible.box);
  Polytope s;
  s.dim = feasible.dim;
  s.box = false;
  for (const auto& v : vs) s.halfspaces.push_back({v, a0});
  s.vertices = vertex_enumerate(s.halfspaces, s.dim, false);
  return s;
}

bool contains(const Polytope& p, const RVec& x, double tol) {
  if (x.size() != p.dim) return false;
  if (p.box && x.cwiseAbs().maxCoeff() > 1.0 + tol) return false;
  for (const auto& h : p.halfspaces)
    if (h.g.dot(x) + h.h < -tol) return false;
  return true;
}

double min_over_vertices(const std::vector<RVec>& vs, const RVec& c, double c0) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& v : vs) best = std::min(best, c0 + c.dot(v));
  return best;
}

bool same_vertex_set(std::vector<RVec> a, std::vector<RVec> b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool hit = false;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!used[j] && x.size() == b[j].size() && (x - b[j]).cwiseAbs().maxCoeff() <= tol) {
        used[j] = true;
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

}  // namespace bsdw
