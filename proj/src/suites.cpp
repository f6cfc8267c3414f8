#include "bsdw/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "bsdw/gamma_algebra.hpp"
#include "bsdw/lp.hpp"
#include "bsdw/operator_space.hpp"
#include "bsdw/relativistic.hpp"
#include "bsdw/states.hpp"
#include "bsdw/witness.hpp"

namespace bsdw {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

template <class... T>
std::string cat(const T&... xs) {
  std::ostringstream os;
  os.precision(12);
  (os << ... << xs);
  return os.str();
}

std::vector<int> bits_of(unsigned mask, int n) {
  std::vector<int> b(n);
  for (int k = 0; k < n; ++k) b[k] = (mask >> (n - 1 - k)) & 1u;
  return b;
}

std::string bit_string(const std::vector<int>& b) {
  std::string s;
  for (int x : b) s += x ? '1' : '0';
  return s;
}

double local_expect(const CMat& x, const CVec& v) { return (v.adjoint() * x * v)(0, 0).real(); }

// <psi_1 ... psi_m| X_1 (x) ... (x) X_m |psi_1 ... psi_m>
double product_expect(const TensorTerm& t, const std::vector<CVec>& sites) {
  cplx v = 1.0;
  for (std::size_t s = 0; s < t.size(); ++s) v *= (sites[s].adjoint() * t[s] * sites[s])(0, 0);
  return v.real();
}

// Kind1 d=4 rest-frame state expansion (5 I - X)/80
CMat expected_rest_separable() {
  const GammaBasis g = build_chiral4();
  CMat out = CMat::Identity(16, 16) / 16.0;
  const double c[5] = {-1.0, 1.0, 1.0, 1.0, 1.0};
  for (int k = 0; k < 5; ++k) out += (c[k] / 80.0) * kron(g.gammas[k], g.gammas[k]);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- 1

std::vector<CheckResult> check_clifford(const SuiteOptions& o) {
  const auto t0 = Clock::now();
  CheckResult r{1, "clifford exactness d=2..12", true, "", 0.0};
  std::size_t total = 0;
  for (int d = 2; d <= 12; ++d) {
    GammaBasis b = build_euclidean_gammas(d);
    if (o.inject_gamma_fault && d == 4) {
      CMat& g = b.gammas[0];
      Eigen::Index row = 0, col = 0;
      g.cwiseAbs().maxCoeff(&row, &col);
      g(row, col) = -g(row, col);
    }
    const VerificationReport rep = verify_clifford(b);
    total += rep.violations.size();
    if (!rep.ok()) {
      r.pass = false;
      r.detail += cat("d=", d, ": ", rep.violations.front(), " (", rep.violations.size(), " violations); ");
    }
  }
  r.seconds = since(t0);
  if (r.seconds >= 5.0) {
    r.pass = false;
    r.detail += "runtime over 5 s; ";
  }
  r.detail += cat("violations=", total);
  return {r};
}

// ---------------------------------------------------------------- 2

std::vector<CheckResult> check_spectra(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int cfg[4][2] = {{2, 2}, {2, 4}, {4, 2}, {2, 6}};
  const auto t_all = Clock::now();
  for (Family f : {Family::Kind1, Family::Kind2}) {
    for (const auto& md : cfg) {
      const auto t0 = Clock::now();
      const int m = md[0], d = md[1];
      double worst = 0.0;
      for (int s = 0; s < 50; ++s) {
        WitnessSpec w;
        w.family = f;
        w.m = m;
        w.d = d;
        w.coeffs.resize(coeff_count(f, d));
        for (auto& c : w.coeffs) c = u(rng);
        w.coeffs[0] = std::abs(w.coeffs[0]);
        const auto num = spectrum(witness_matrix(w)).eigenvalues;
        const auto cf = (f == Family::Kind1) ? closed_form_spectrum_kind1(w.coeffs, m, d)
                                             : closed_form_spectrum_kind2(w.coeffs, m, d);
        worst = std::max(worst, multiset_distance(num, cf));
      }
      CheckResult r{2, cat("spectrum closed form ", family_name(f), " m=", m, " d=", d), worst <= 1e-10,
                    cat("max multiset distance ", fmt("%.3e", worst), " over 50 samples"), since(t0)};
      out.push_back(r);
    }
  }
  const double tot = since(t_all);
  out.push_back({2, "spectrum oracle runtime", tot < 60.0, cat(fmt("%.2f", tot), " s (limit 60 s)"), tot});
  return out;
}

// ---------------------------------------------------------------- 3

namespace {

std::vector<Halfspace> cube(int n, double r) {
  std::vector<Halfspace> hs;
  for (int k = 0; k < n; ++k)
    for (double s : {1.0, -1.0}) {
      Halfspace h{RVec::Zero(n), r};
      h.g(k) = -s;
      hs.push_back(h);
    }
  return hs;
}

// |sum_k +-a'_{gh+k}| <= a0 for each group g
std::vector<Halfspace> grouped_l1(int d) {
  const int h = d / 2;
  const int n = 3 * h;
  std::vector<Halfspace> hs;
  for (int g = 0; g < 3; ++g)
    for (unsigned s = 0; s < (1u << h); ++s) {
      Halfspace H{RVec::Zero(n), 1.0};
      for (int k = 0; k < h; ++k) H.g(g * h + k) = -sgn_bit((s >> k) & 1u);
      hs.push_back(H);
    }
  return hs;
}

}  // namespace

std::vector<CheckResult> check_lp(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(o.seed + 3);
  std::normal_distribution<double> g(0.0, 1.0);
  for (RegionFamily f : {RegionFamily::Kind1, RegionFamily::Kind2, RegionFamily::Approx1, RegionFamily::Approx2}) {
    for (int d : {2, 4}) {
      const auto t0 = Clock::now();
      CheckResult r{3, cat("simplex vs vertex enumeration ", region_name(f), " d=", d), true, "", 0.0};
      if (f == RegionFamily::Approx2 && d == 2) {
        // A'_1 A'_2 is anti-hermitian at d = 2; the family starts at d = 4
        r.detail = "not defined at d=2 (family requires d>=4); skipped";
        r.seconds = since(t0);
        out.push_back(r);
        continue;
      }
      const Polytope p = feasible_region(f, d);
      double worst = 0.0;
      int bad = 0;
      for (int s = 0; s < 50; ++s) {
        LpProblem pr;
        pr.c = RVec(p.dim);
        for (int k = 0; k < p.dim; ++k) pr.c(k) = g(rng);
        pr.c0 = g(rng);
        pr.halfspaces = p.halfspaces;
        const LpSolution sol = simplex_min(pr);
        if (sol.status != LpStatus::Optimal) {
          ++bad;
          continue;
        }
        worst = std::max(worst, std::abs(sol.optimum - min_over_vertices(p.vertices, pr.c, pr.c0)));
      }
      r.pass = bad == 0 && worst <= 1e-9;
      r.detail = cat("vertices=", p.vertices.size(), " max |simplex - vertex min|=", fmt("%.3e", worst),
                     " non-optimal=", bad);
      r.seconds = since(t0);
      out.push_back(r);
    }
  }

  // dual polytopes against the closed-form coefficient regions
  const double r2 = 1.0 / std::sqrt(2.0);
  struct Target {
    RegionFamily f;
    const char* label;
  };
  for (const Target& t : {Target{RegionFamily::Kind1, "|a_i| <= a_0"}, Target{RegionFamily::Kind2, "grouped l1 bound"},
                          Target{RegionFamily::Approx1, "|a_i| <= a_0/sqrt2"},
                          Target{RegionFamily::Approx2, "|a'_i| <= a'_0/2"}}) {
    for (int d : {2, 4}) {
      if (t.f == RegionFamily::Approx2 && d == 2) continue;
      const auto t0 = Clock::now();
      const Polytope feas = feasible_region(t.f, d);
      const Polytope dual = ssnnev_region(feas, 1.0);
      const int n = feas.dim;
      std::vector<Halfspace> target;
      switch (t.f) {
        case RegionFamily::Kind1: target = cube(n, 1.0); break;
        case RegionFamily::Kind2: target = grouped_l1(d); break;
        case RegionFamily::Approx1: target = cube(n, r2); break;
        default: target = cube(n, 0.5); break;
      }
      const auto tv = vertex_enumerate(target, n, false);
      const bool same = same_vertex_set(dual.vertices, tv);
      std::string detail = cat("dual vertices=", dual.vertices.size(), " target vertices=", tv.size());
      if (!same) {
        // locate the discrepancy: target points outside the dual and the reverse
        int tout = 0, dout = 0;
        for (const auto& v : tv)
          if (!contains(dual, v)) ++tout;
        Polytope tp;
        tp.dim = n;
        tp.box = false;
        tp.halfspaces = target;
        for (const auto& v : dual.vertices)
          if (!contains(tp, v)) ++dout;
        detail += cat("; target vertices outside dual=", tout, ", dual vertices outside target=", dout);
        if (t.f == RegionFamily::Approx1) {
          Polytope nb;
          nb.dim = n;
          nb.box = false;
          nb.halfspaces = feas.halfspaces;
          nb.vertices = vertex_enumerate(feas.halfspaces, n, false);
          const bool nb_same = same_vertex_set(ssnnev_region(nb, 1.0).vertices, tv);
          detail += cat("; without the |P_k|<=1 box the dual ", nb_same ? "matches" : "still differs");
        }
      }
      out.push_back({3, cat("SSNNEV dual ", region_name(t.f), " d=", d, " equals ", t.label), same, detail, since(t0)});
    }
  }
  return out;
}

// ---------------------------------------------------------------- 4

std::vector<CheckResult> check_epr() {
  std::vector<CheckResult> out;
  [[maybe_unused]] constexpr double tol = 1e-8;
  {
    const auto t0 = Clock::now();
    const CVec psi = epr_state();
    double worst = 0.0;
    std::string det;
    for (int i4 = 0; i4 < 2; ++i4) {
      const double v = expectation_vec(epr_witness(i4), psi);
      const double v2 = expectation_vec(witness_matrix(optimal_kind1(2, 4, {0, 0, 0, i4})).matrix, phi_minus_14());
      worst = std::max({worst, std::abs(v + 2.0), std::abs(v2 + 2.0)});
      det += cat("i4=", i4, ": EPR ", fmt("%.12f", v), ", phi-(1,4) ", fmt("%.12f", v2), "; ");
    }
    out.push_back({4, "EPR detection value -2", worst <= tol, det, since(t0)});
  }
  return out;
}

std::vector<CheckResult> check_vertex_detection() {
  std::vector<CheckResult> out;
  [[maybe_unused]] constexpr double tol = 1e-8;
  {
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (unsigned mask = 0; mask < 16; ++mask) {
      const auto j = bits_of(mask, 4);
      std::vector<int> flip(4);
      for (int k = 0; k < 4; ++k) flip[k] = 1 - j[k];
      const double v = expectation(witness_matrix(optimal_kind1(2, 4, flip, Rep::Chiral4)).matrix,
                                   state_matrix(vertex_state_kind1(2, 4, j, Rep::Chiral4)));
      worst = std::max(worst, std::abs(v + 2.0 / 3.0));
    }
    out.push_back({4, "vertex-state detection -2/3 for all 16 patterns", worst <= tol,
                   cat("max |value + 2/3| = ", fmt("%.3e", worst)), since(t0)});
  }
  return out;
}

std::vector<CheckResult> check_hs_rest() {
  std::vector<CheckResult> out;
  [[maybe_unused]] constexpr double tol = 1e-8;
  const RestPair rest = rest_pair();
  BoostParams p0;
  const double d0 = hs_pipeline(rest, p0).measure;
  {
    const auto t0 = Clock::now();
    const double de = std::abs(rest.epsilon + 1.0 / 120.0);
    const CMat rs = rest.rho_s / rest.rho_s.trace().real();
    const double dr = (rs - expected_rest_separable()).cwiseAbs().maxCoeff();
    out.push_back({4, "rest epsilon -1/120 and closest separable state (5I - X)/80", de <= tol && dr <= tol,
                   cat("epsilon=", fmt("%.15f", rest.epsilon), " |d eps|=", fmt("%.2e", de),
                       " max|rho_s - target|=", fmt("%.2e", dr)),
                   since(t0)});
  }
  {
    const double target = std::sqrt(5.0) / 30.0;
    out.push_back({4, "rest Hilbert-Schmidt measure sqrt5/30", std::abs(d0 - target) <= tol,
                   cat("computed ", fmt("%.15f", d0), " expected ", fmt("%.15f", target)), 0.0});
  }
  return out;
}

std::vector<CheckResult> check_hs_boost(const std::vector<double>& xis) {
  std::vector<CheckResult> out;
  [[maybe_unused]] constexpr double tol = 1e-8;
  const RestPair rest = rest_pair();
  BoostParams p0;
  const double d0 = hs_pipeline(rest, p0).measure;
  {
    const auto t0 = Clock::now();
    double worst = 0.0;
    std::string det;
    for (double xi : xis) {
      BoostParams p;
      p.xi = xi;
      const double v = hs_pipeline(rest, p).measure;
      const double c = hs_closed_form_measure(xi);
      worst = std::max(worst, std::abs(v - c));
      det += cat("xi=", xi, ": ", fmt("%.10f", v), " vs ", fmt("%.10f", c), "; ");
    }
    out.push_back({4, "boosted measure equals closed form", worst <= 1e-7, det + cat("max diff ", fmt("%.2e", worst)),
                   since(t0)});
  }

  {
    const auto t0 = Clock::now();
    double lowest = 1e300, at = 0.0;
    for (int k = -60; k <= 60; ++k) {
      BoostParams p;
      p.xi = 0.05 * k;
      const double v = hs_pipeline(rest, p).measure;
      if (v - d0 < lowest) {
        lowest = v - d0;
        at = p.xi;
      }
    }
    out.push_back({4, "boosted measure >= rest measure on [-3,3] step 0.05", lowest >= -1e-12,
                   cat("min D(xi) - D(0) = ", fmt("%.3e", lowest), " at xi=", at), since(t0)});
  }
  return out;
}

std::vector<CheckResult> check_kind1_pt() {
  std::vector<CheckResult> out;
  [[maybe_unused]] constexpr double tol = 1e-8;
  for (int d : {4, 6}) {
    const auto t0 = Clock::now();
    const auto W = witness_matrix(optimal_kind1(2, d, std::vector<int>(d, 0)));
    const double pt = spectrum(partial_transpose(W.matrix, W.local_dim, 2, 1)).min_eigenvalue;
    const double expect = 1.0 - d - ((d / 2) % 2 == 0 ? 1.0 : -1.0);
    out.push_back({4, cat("kind1 PT minimum eigenvalue d=", d), std::abs(pt - expect) <= tol,
                   cat("computed ", fmt("%.12f", pt), " expected ", expect), since(t0)});
  }
  return out;
}

std::vector<CheckResult> check_kind2_decomposable(const std::vector<int>& ms, const std::vector<int>& ds) {
  std::vector<CheckResult> out;
  [[maybe_unused]] constexpr double tol = 1e-8;
  for (int m : ms)
    for (int d : ds) {
      const auto t0 = Clock::now();
      const int h = d / 2;
      int nonpsd = 0, total = 0;
      double worst = 0.0;
      std::string worst_at;
      for (int j = 1; j <= h; ++j)
        for (int i1 = 0; i1 < 2; ++i1)
          for (int i2 = 0; i2 < 2; ++i2) {
            const auto W = witness_matrix(optimal_kind2(m, d, i1, i2, j));
            double mn = 0.0;
            for (int k = 1; k <= m; ++k)
              mn = std::min(mn, spectrum(partial_transpose(W.matrix, W.local_dim, m, k)).min_eigenvalue);
            ++total;
            if (mn < -1e-10) ++nonpsd;
            if (mn < worst) {
              worst = mn;
              worst_at = cat("(i1,i2,j)=(", i1, ",", i2, ",", j, ")");
            }
          }
      std::string det = cat(total - nonpsd, "/", total, " optimal witnesses Decomposable (all PTs PSD)");
      if (nonpsd) det += cat("; most negative PT eigenvalue ", fmt("%.6f", worst), " at ", worst_at);
      out.push_back({4, cat("kind2 optimal witnesses decomposable m=", m, " d=", d), nonpsd == 0, det, since(t0)});
    }

  // minimise Tr(W rho) over the coefficient cube for each vertex state; the
  return out;
}

std::vector<CheckResult> check_approx_detection() {
  std::vector<CheckResult> out;
  [[maybe_unused]] constexpr double tol = 1e-8;
  for (Family f : {Family::Approx1, Family::Approx2}) {
    const auto t0 = Clock::now();
    const int m = 2, d = 4;
    const auto states = (f == Family::Approx1) ? approx1_vertex_states(m, d) : approx2_vertex_states(m, d);
    double worst = 0.0;
    bool all_ew = true;
    std::string det;
    for (const auto& s : states) {
      WitnessSpec w;
      w.family = f;
      w.m = m;
      w.d = d;
      w.coeffs.assign(coeff_count(f, d), 0.0);
      w.coeffs[0] = 1.0;
      const auto terms = witness_terms(w);
      const CMat rho = state_matrix(s);
      LpProblem pr;
      pr.c = RVec(static_cast<Eigen::Index>(terms.size()));
      for (std::size_t k = 0; k < terms.size(); ++k) pr.c(k) = expectation(tensor_product(terms[k]).matrix, rho);
      pr.c0 = 1.0;
      const LpSolution sol = simplex_min(pr);
      // coordinates the state does not see are left at zero
      for (std::size_t k = 0; k < terms.size(); ++k)
        w.coeffs[k + 1] = std::abs(pr.c(k)) > 1e-12 ? sol.argmin(k) : 0.0;
      const double direct = expectation(witness_matrix(w).matrix, rho);
      ClassifyOptions co;
      co.decomposability = false;
      co.optimality = false;
      const WitnessClass wc = classify(w, co);
      worst = std::max(worst, std::abs(direct + 2.0));
      if (wc.verdict != Verdict::EW) all_ew = false;
      det += cat(s.label, ": min ", fmt("%.10f", direct), " minimiser ", verdict_name(wc.verdict), " (min eig ",
                 fmt("%.3f", wc.min_eig), ", separable lower bound ", fmt("%.3f", wc.min_over_feasible), "); ");
    }
    out.push_back({4, cat(family_name(f), " vertex-state detection minimum -2"), worst <= tol && all_ew, det, since(t0)});
  }
  return out;
}

std::vector<CheckResult> check_reference_numbers(const SuiteOptions&) {
  std::vector<CheckResult> out;
  for (auto&& r : {check_epr(), check_vertex_detection(), check_hs_rest(), check_hs_boost({0.25, 0.5, 1.0, 2.0}),
                   check_kind1_pt(), check_kind2_decomposable({2, 4}, {2, 4, 6}), check_approx_detection()})
    out.insert(out.end(), r.begin(), r.end());
  return out;
}


// ---------------------------------------------------------------- 5

std::vector<CheckResult> check_properties(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  constexpr int samples = 10000;
  constexpr double slack = 1e-9;

  for (int d : {2, 4, 6}) {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(o.seed + 100 + d);
    const GammaBasis g = build_euclidean_gammas(d);
    int viol = 0;
    double worst = -1e300;
    for (int s = 0; s < samples; ++s) {
      const CVec a = random_local_state(g.local_dim(), rng);
      double sum = 0.0;
      for (const auto& x : g.gammas) sum += std::pow(local_expect(x, a), 2);
      worst = std::max(worst, sum);
      if (sum > 1.0 + slack) ++viol;
    }
    out.push_back({5, cat("local gamma expectation bound sum b_i^2 <= 1, d=", d), viol == 0,
                   cat(samples, " samples, violations=", viol, ", max=", fmt("%.12f", worst)), since(t0)});
  }

  {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(o.seed + 200);
    const GammaBasis g = build_euclidean_gammas(4);
    const CMat q = -I_UNIT * g.gammas[0] * g.gammas[1];
    int viol = 0;
    double worst = -1e300;
    for (int s = 0; s < samples; ++s) {
      const CVec a = random_local_state(4, rng);
      const double l2 = std::pow(local_expect(g.gammas[0], a), 2) + std::pow(local_expect(g.gammas[1], a), 2) +
                        std::pow(local_expect(q, a), 2);
      worst = std::max(worst, l2);
      if (l2 > 2.0 + slack) ++viol;
    }
    out.push_back({5, "approx1 local bound b_1^2 + b_2^2 + b_{d+2}^2 <= 2, d=4", viol == 0,
                   cat(samples, " samples, violations=", viol, ", max=", fmt("%.12f", worst)), since(t0)});
  }

  {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(o.seed + 300);
    const int d = 4, h = 2;
    const auto A = commuting_sets(d).flat();
    const CMat q[4] = {A[0].matrix, A[h].matrix, A[d].matrix, A[0].matrix * A[1].matrix};
    int viol = 0;
    double worst = -1e300;
    for (int s = 0; s < samples; ++s) {
      const CVec a = random_local_state(4, rng);
      double b[4];
      for (int k = 0; k < 4; ++k) b[k] = local_expect(q[k], a);
      const double lam = b[0] * b[0] + b[1] * b[1] + b[2] * b[2] + b[3] * b[3] + 2.0 * std::abs(b[0] * b[3]);
      worst = std::max(worst, lam);
      if (lam > 4.0 + slack) ++viol;
    }
    out.push_back({5, "approx2 quartet bound lambda' <= 4, d=4", viol == 0,
                   cat(samples, " samples, violations=", viol, ", max=", fmt("%.12f", worst)), since(t0)});
  }

  {
    const auto t0 = Clock::now();
    CVec psi = CVec::Zero(16);
    for (int i = 0; i < 4; ++i) psi(i * 4 + i) = 0.5;
    const CMat rho = psi * psi.adjoint();
    double cross = 0.0, diag = 0.0;
    for (const auto& labels : {pauli_labels(), chiral_labels()}) {
      const CMat c = cross_coefficients(rho, labels);
      for (Eigen::Index i = 0; i < c.rows(); ++i)
        for (Eigen::Index j = 0; j < c.cols(); ++j) {
          if (i == j)
            diag = std::max(diag, std::abs(std::abs(c(i, j)) - 1.0 / 16.0));
          else
            cross = std::max(cross, std::abs(c(i, j)));
        }
    }
    std::mt19937_64 rng(o.seed + 400);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int s = 0; s < 20; ++s) {
      std::vector<double> w(16);
      double tot = 0.0;
      for (auto& x : w) tot += (x = u(rng));
      for (auto& x : w) x /= tot;
      const CMat c = cross_coefficients(mixture_matrix(w), chiral_labels());
      for (Eigen::Index i = 0; i < c.rows(); ++i)
        for (Eigen::Index j = 0; j < c.cols(); ++j)
          if (i != j) cross = std::max(cross, std::abs(c(i, j)));
    }
    out.push_back({5, "Bell-diagonal cross coefficients vanish", cross < 1e-12 && diag < 1e-12,
                   cat("max off-diagonal ", fmt("%.2e", cross), ", max ||diag| - 1/16| ", fmt("%.2e", diag),
                       " (Psi00 with Pauli and chiral labels, 20 random mixtures)"),
                   since(t0)});
  }

  {
    const auto t0 = Clock::now();
    int points = 0, valid = 0, disagree = 0, detected = 0;
    std::string first;
    for (int i = 0; i <= 25; ++i)
      for (int j = 0; j <= 25; ++j)
        for (int k = 0; k <= 25; ++k) {
          const std::vector<double> b = {-0.25 + 0.02 * i, -0.25 + 0.02 * j, -0.25 + 0.02 * k};
          ++points;
          const BsdState s = make_bsd(StateFamily::GammaOnly, 2, 2, b);
          const RegionReport rr = region_classify(s, Family::Kind1);
          if (rr.verdict == RegionVerdict::Invalid) continue;
          ++valid;
          const bool det = rr.verdict == RegionVerdict::DetectedEntangled;
          const bool ent = wootters_concurrence(state_matrix(s)) > 1e-9;
          detected += det;
          if (det != ent) {
            if (!disagree) first = cat(" first at b=(", b[0], ",", b[1], ",", b[2], ")");
            ++disagree;
          }
        }
    out.push_back({5, "d=m=2 witness detection iff concurrence > 0 (grid 0.02)", disagree == 0,
                   cat(points, " grid points, ", valid, " valid states, ", detected, " detected, disagreements=",
                       disagree, first),
                   since(t0)});
  }

  {
    const RestPair rest = rest_pair();
    for (double xi : {0.0, 0.5, 1.0, 2.0}) {
      const auto t0 = Clock::now();
      BoostParams p;
      p.xi = xi;
      const HsResult hr = hs_pipeline(rest, p);
      const CMat op = hr.closest_separable - hr.rho_ent - hr.epsilon * CMat::Identity(16, 16);
      const ProductMinimum pm = product_state_minimum(op, 100000, o.seed + 500);
      const bool control = xi == 0.0;
      out.push_back({5,
                     control ? "boosted witness product minimum >= -1e-6 at xi=0 (control)"
                             : cat("boosted witness product minimum >= -1e-6 at xi=", xi),
                     pm.value >= -1e-6,
                     cat("min over 1e5 product samples + refinement of <g|rho_s - rho_ent|g> - eps = ",
                         fmt("%.8f", pm.value), ", eps=", fmt("%.8f", hr.epsilon)),
                     since(t0)});
    }
  }
  return out;
}

// ---------------------------------------------------------------- 6

std::vector<CheckResult> check_optimality_suite(const SuiteOptions&) {
  std::vector<CheckResult> out;
  for (int d : {4, 6}) {
    const auto t0 = Clock::now();
    int ok = 0, n = 0;
    std::string fails;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      const auto b = bits_of(mask, d);
      ++n;
      if (check_optimality(optimal_kind1(2, d, b)))
        ++ok;
      else
        fails += bit_string(b) + " ";
    }
    out.push_back({6, cat("kind1 optimal instances m=2 d=", d), ok == n,
                   cat(ok, "/", n, " report optimal", fails.empty() ? "" : "; not optimal: " + fails), since(t0)});
  }
  for (int d : {4, 6}) {
    const auto t0 = Clock::now();
    int ok = 0, n = 0;
    std::string fails;
    for (int j = 1; j <= d / 2; ++j)
      for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2) {
          const WitnessSpec w = optimal_kind2(2, d, i1, i2, j);
          ++n;
          if (check_optimality(w))
            ++ok;
          else
            fails += cat("(", i1, i2, ",j=", j, ", joint +1 trace ", joint_positive_trace(w), ") ");
        }
    out.push_back({6, cat("kind2 optimal instances m=2 d=", d), ok == n,
                   cat(ok, "/", n, " report optimal", fails.empty() ? "" : "; not optimal: " + fails), since(t0)});
  }
  {
    const auto t0 = Clock::now();
    WitnessSpec w = optimal_kind1(2, 4, {1, 1, 1, 1});
    for (std::size_t k = 1; k < w.coeffs.size(); ++k) w.coeffs[k] *= 0.5;
    const bool opt = check_optimality(w);
    out.push_back({6, "interior-scaled witness is not optimal", !opt, cat("check_optimality returned ", opt), since(t0)});
  }
  return out;
}

// ---------------------------------------------------------------- extra

std::vector<CheckResult> check_extra_properties(const SuiteOptions& o) {
  std::vector<CheckResult> out;

  for (RegionFamily f : {RegionFamily::Kind1, RegionFamily::Kind2})
    for (int d : {2, 4}) {
      const auto t0 = Clock::now();
      const Polytope feas = feasible_region(f, d);
      const Polytope dual = ssnnev_region(feas, 1.0);
      // facet normals g/h of the feasible region, scaled to the a0 = 1 slice
      std::vector<RVec> normals;
      for (const auto& h : feas.halfspaces) normals.push_back(h.g / h.h);
      const bool ok = same_vertex_set(dual.vertices, normals);
      out.push_back({0, cat("duality round-trip ", region_name(f), " d=", d), ok,
                     cat(dual.vertices.size(), " dual vertices vs ", normals.size(), " feasible halfspaces"),
                     since(t0)});
    }

  const int cfg[3][2] = {{2, 4}, {3, 4}, {2, 6}};
  for (Family f : {Family::Kind1, Family::Kind2, Family::Approx1, Family::Approx2}) {
    for (const auto& md : cfg) {
      const int m = md[0], d = md[1];
      if (m % 2 != 0 && f != Family::Kind1) continue;
      const auto t0 = Clock::now();
      WitnessSpec w;
      w.family = f;
      w.m = m;
      w.d = d;
      w.coeffs.assign(coeff_count(f, d), 0.0);
      w.coeffs[0] = 1.0;
      std::vector<TensorTerm> terms;
      if (f == Family::Kind1) {
        // gamma_k^{(x)m} for any m
        for (const auto& g : build_euclidean_gammas(d).gammas) terms.push_back(TensorTerm(m, g));
      } else {
        terms = witness_terms(w);
      }
      const auto hs = region_halfspaces(region_of(f), d);
      std::mt19937_64 rng(o.seed + 600 + 10 * m + d);
      const int D = 1 << (d / 2);
      double worst = 1e300;
      for (int s = 0; s < 10000; ++s) {
        std::vector<CVec> sites;
        for (int q = 0; q < m; ++q) sites.push_back(random_local_state(D, rng));
        RVec P(static_cast<Eigen::Index>(terms.size()));
        for (std::size_t k = 0; k < terms.size(); ++k) P(k) = product_expect(terms[k], sites);
        worst = std::min(worst, P.cwiseAbs().maxCoeff() <= 1.0 + 1e-12 ? worst : -1.0);
        for (const auto& h : hs) worst = std::min(worst, h.g.dot(P) + h.h);
      }
      if (f == Family::Approx1) {
        // joint +1 eigenvector of gamma_3 and -i gamma_1 gamma_2 on every site
        const auto g3 = build_euclidean_gammas(d).gammas;
        const CMat q = -I_UNIT * g3[0] * g3[1];
        Eigen::SelfAdjointEigenSolver<CMat> es(g3[2] + q);
        const CVec v = es.eigenvectors().col(D - 1);
        const std::vector<CVec> sites(static_cast<std::size_t>(m), v);
        RVec P(static_cast<Eigen::Index>(terms.size()));
        for (std::size_t k = 0; k < terms.size(); ++k) P(k) = product_expect(terms[k], sites);
        double joint = 1e300;
        for (const auto& h : hs) joint = std::min(joint, h.g.dot(P) + h.h);
        worst = std::min(worst, joint);
      }
      out.push_back({0, cat("product states land in the ", family_name(f), " region m=", m, " d=", d), worst >= -1e-9,
                     cat("1e4 samples, minimum slack ", fmt("%.3e", worst)), since(t0)});
    }
  }

  {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(o.seed + 700);
    std::normal_distribution<double> g(0.0, 1.0);
    double worst = 0.0;
    for (int s = 0; s < 20; ++s) {
      CMat a(16, 16);
      for (Eigen::Index i = 0; i < 16; ++i)
        for (Eigen::Index j = 0; j < 16; ++j) a(i, j) = cplx(g(rng), g(rng));
      for (int k = 1; k <= 2; ++k)
        worst = std::max(worst, (partial_transpose(partial_transpose(a, 4, 2, k), 4, 2, k) - a).cwiseAbs().maxCoeff());
    }
    out.push_back({0, "partial transpose is an involution", worst == 0.0, cat("max deviation ", worst), since(t0)});
  }

  {
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (unsigned mi = 0; mi < 16; ++mi)
      for (unsigned mj = 0; mj < 16; ++mj) {
        const auto i = bits_of(mi, 4), j = bits_of(mj, 4);
        int sum = 0, par = 0;
        for (int k = 0; k < 4; ++k) {
          sum += sgn_bit(i[k] + j[k]);
          par += i[k] + j[k];
        }
        const double closed = 1.0 + (sum - sgn_bit(par)) / 3.0;
        const double v = expectation(witness_matrix(optimal_kind1(2, 4, i, Rep::Chiral4)).matrix,
                                     state_matrix(vertex_state_kind1(2, 4, j, Rep::Chiral4)));
        worst = std::max(worst, std::abs(v - closed));
      }
    out.push_back({0, "vertex detection closed form over 256 witness/state pairs", worst <= 1e-10,
                   cat("max deviation ", fmt("%.2e", worst)), since(t0)});
  }

  {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(o.seed + 800);
    double worst = 0.0;
    for (int s = 0; s < 100; ++s) {
      BoostParams p;
      p.xi = std::uniform_real_distribution<double>(-3.0, 3.0)(rng);
      Eigen::Vector3d n(std::normal_distribution<double>()(rng), std::normal_distribution<double>()(rng),
                        std::normal_distribution<double>()(rng));
      p.p_hat = n.normalized();
      const CMat D = boost_matrix(p);
      const CVec a = random_local_state(4, rng), b = random_local_state(4, rng);
      const CVec ba = D * a, bb = D * b;
      worst = std::max(worst, (kron(D, D) * kron(a, b) - kron(ba, bb)).cwiseAbs().maxCoeff());
      worst = std::max(worst, lorentz_residual(p));
    }
    out.push_back({0, "boost keeps products and realises a Lorentz map", worst <= 1e-10,
                   cat("max deviation ", fmt("%.2e", worst)), since(t0)});
  }
  return out;
}

namespace {

void run_guarded(std::vector<CheckResult> (*fn)(const SuiteOptions&), const SuiteOptions& o,
                 std::vector<CheckResult>& out) {
  try {
    auto r = fn(o);
    out.insert(out.end(), r.begin(), r.end());
  } catch (const std::exception& e) {
    out.push_back({0, "suite aborted", false, e.what(), 0.0});
  }
}

}  // namespace

std::vector<CheckResult> acceptance_checks(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  for (auto* fn : {&check_clifford, &check_spectra, &check_lp, &check_reference_numbers, &check_properties,
                   &check_optimality_suite}) {
    run_guarded(*fn, o, out);
  }
  return out;
}

std::vector<CheckResult> all_checks(const SuiteOptions& o) {
  auto out = acceptance_checks(o);
  run_guarded(check_extra_properties, o, out);
  return out;
}

}  // namespace bsdw
