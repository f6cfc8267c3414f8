#include "bsdw/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bsdw/states.hpp"

namespace bsdw {

std::string family_name(Family f) {
  switch (f) {
    case Family::Kind1: return "kind1";
    case Family::Kind2: return "kind2";
    case Family::Approx1: return "approx1";
    case Family::Approx2: return "approx2";
    case Family::OddM1: return "oddm1";
    default: return "oddm2";
  }
}

Family parse_family(const std::string& s) {
  if (s == "kind1") return Family::Kind1;
  if (s == "kind2") return Family::Kind2;
  if (s == "approx1") return Family::Approx1;
  if (s == "approx2") return Family::Approx2;
  if (s == "oddm1") return Family::OddM1;
  if (s == "oddm2") return Family::OddM2;
  throw DomainError("unknown witness family: " + s);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::PositiveOperator: return "PositiveOperator";
    case Verdict::EW: return "EW";
    default: return "NotEW";
  }
}

std::string decomp_name(Decomp d) {
  switch (d) {
    case Decomp::Decomposable: return "Decomposable";
    case Decomp::NonDecomposable: return "NonDecomposable";
    case Decomp::Undetermined: return "Undetermined";
    default: return "NotApplicable";
  }
}

std::size_t coeff_count(Family f, int d) {
  const std::size_t h = static_cast<std::size_t>(d / 2);
  switch (f) {
    case Family::Kind1:
    case Family::OddM1: return static_cast<std::size_t>(d) + 2;
    case Family::Kind2:
    case Family::OddM2: return 3 * h + 1;
    case Family::Approx1: return static_cast<std::size_t>(d) + 3;
    default: return 3 * h + 2;
  }
}

RegionFamily region_of(Family f) {
  switch (f) {
    case Family::Kind1:
    case Family::OddM1: return RegionFamily::Kind1;
    case Family::Kind2:
    case Family::OddM2: return RegionFamily::Kind2;
    case Family::Approx1: return RegionFamily::Approx1;
    default: return RegionFamily::Approx2;
  }
}

void validate(const WitnessSpec& w) {
  if (w.d < 2 || w.d % 2 != 0) throw DomainError("witness: d must be even and >= 2");
  const bool odd = (w.family == Family::OddM1 || w.family == Family::OddM2);
  if (odd) {
    if (w.m < 3 || w.m % 2 == 0) throw DomainError("witness: odd-m families need odd m >= 3");
  } else if (w.m < 2 || w.m % 2 != 0) {
    throw DomainError("witness: even-m families need even m >= 2");
  }
  if (w.rep == Rep::Chiral4 && !(w.family == Family::Kind1 && w.d == 4))
    throw UnsupportedError("witness: chiral representation only for kind1 with d = 4");
  if (w.family == Family::Approx2 && w.d < 4)
    throw DomainError("witness: approx2 needs d >= 4 (A'_1 A'_2 is not hermitian at d = 2)");
  if (w.coeffs.size() != coeff_count(w.family, w.d))
    throw DomainError("witness: expected " + std::to_string(coeff_count(w.family, w.d)) + " coefficients for " +
                      family_name(w.family) + ", got " + std::to_string(w.coeffs.size()));
  if (w.coeffs[0] < 0.0) throw DomainError("witness: a_0 must be nonnegative");
  for (double c : w.coeffs)
    if (!std::isfinite(c)) throw DomainError("witness: non-finite coefficient");
}

namespace {

TensorTerm power_term(const CMat& a, int m) { return TensorTerm(static_cast<std::size_t>(m), a); }

TensorTerm odd_term(const CMat& head, int m, const CMat& last) {
  TensorTerm t(static_cast<std::size_t>(m - 1), head);
  t.push_back(last);
  return t;
}

std::vector<CMat> kind1_locals(int d, Rep rep) {
  GammaBasis b = (rep == Rep::Chiral4) ? build_chiral4() : build_euclidean_gammas(d);
  return b.gammas;
}

std::vector<CMat> kind2_locals(int d) {
  std::vector<CMat> out;
  for (const auto& e : commuting_sets(d).flat()) out.push_back(e.matrix);
  return out;
}

int hamming(const std::vector<int>& bits) {
  int s = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw DomainError("witness: bits must be 0 or 1");
    s += b;
  }
  return s;
}

}  // namespace

std::vector<TensorTerm> witness_terms(const WitnessSpec& w) {
  validate(w);
  const int m = w.m;
  const int d = w.d;
  const int h = d / 2;
  std::vector<TensorTerm> terms;
  switch (w.family) {
    case Family::Kind1:
      for (const auto& g : kind1_locals(d, w.rep)) terms.push_back(power_term(g, m));
      break;
    case Family::Kind2:
      for (const auto& a : kind2_locals(d)) terms.push_back(power_term(a, m));
      break;
    case Family::Approx1: {
      auto g = kind1_locals(d, Rep::Euclidean);
      for (const auto& x : g) terms.push_back(power_term(x, m));
      CMat q = -I_UNIT * g[0] * g[1];
      terms.push_back(power_term(q, m));
      break;
    }
    case Family::Approx2: {
      auto a = kind2_locals(d);
      for (const auto& x : a) terms.push_back(power_term(x, m));
      terms.push_back(power_term(a[0] * a[1], m));
      break;
    }
    case Family::OddM1: {
      auto g = kind1_locals(d, Rep::Euclidean);
      CommutingSets cs = commuting_sets(d);
      const auto& set = (w.odd_set == OddMSet::C1) ? cs.c1 : (w.odd_set == OddMSet::C2) ? cs.c2 : cs.c3;
      for (int i = 0; i < h; ++i) terms.push_back(odd_term(g[i], m, set[i].matrix));
      for (int i = 0; i < h; ++i) terms.push_back(odd_term(g[h + i], m, set[i].matrix));
      const CMat id = CMat::Identity(g[0].rows(), g[0].cols());
      terms.push_back(odd_term(g[d], m, id));
      break;
    }
    case Family::OddM2: {
      auto a = kind2_locals(d);
      const CMat id = CMat::Identity(a[0].rows(), a[0].cols());
      for (int i = 0; i < h; ++i) terms.push_back(odd_term(a[i], m, a[i]));
      for (int i = 0; i < h; ++i) terms.push_back(odd_term(a[h + i], m, a[i]));
      for (int i = 0; i < h; ++i) terms.push_back(odd_term(a[d + i], m, id));
      break;
    }
  }
  return terms;
}

HermitianOperator witness_matrix(const WitnessSpec& w) { return assemble_terms(w.coeffs, witness_terms(w)); }

WitnessSpec optimal_kind1(int m, int d, const std::vector<int>& bits, Rep rep) {
  if (m < 2 || m % 2 != 0 || d < 2 || d % 2 != 0) throw DomainError("optimal_kind1: m and d must be even");
  if (static_cast<int>(bits.size()) != d) throw DomainError("optimal_kind1: need d bits");
  if (rep == Rep::Chiral4 && d != 4) throw UnsupportedError("optimal_kind1: chiral needs d = 4");
  const int s = hamming(bits);
  WitnessSpec w;
  w.family = Family::Kind1;
  w.m = m;
  w.d = d;
  w.rep = rep;
  w.coeffs.assign(static_cast<std::size_t>(d) + 2, 0.0);
  w.coeffs[0] = 1.0;
  for (int k = 0; k < d; ++k) w.coeffs[k + 1] = sgn_bit(bits[k]);
  // gamma^5 (x) gamma^5 eigenvalue phase is i^m in the chiral set, (-i)^{md/2} in the euclidean one
  const cplx ph = (rep == Rep::Chiral4) ? ipow(m) : ipow(-(m * d / 2));
  if (std::abs(ph.imag()) > 0.5) throw DomainError("optimal_kind1: md/2 odd gives a non-real phase");
  w.coeffs[d + 1] = -ph.real() * sgn_bit(s);
  return w;
}

WitnessSpec optimal_kind2(int m, int d, int i1, int i2, int j) {
  if (m < 2 || m % 2 != 0 || d < 2 || d % 2 != 0) throw DomainError("optimal_kind2: m and d must be even");
  const int h = d / 2;
  if (j < 1 || j > h) throw DomainError("optimal_kind2: j out of range 1..d/2");
  hamming({i1, i2});
  WitnessSpec w;
  w.family = Family::Kind2;
  w.m = m;
  w.d = d;
  w.coeffs.assign(coeff_count(Family::Kind2, d), 0.0);
  w.coeffs[0] = 1.0;
  w.coeffs[j] = sgn_bit(i1);
  w.coeffs[j + h] = sgn_bit(i2);
  w.coeffs[j + d] = -sgn_bit(m / 2 + i1 + i2);
  return w;
}

WitnessSpec optimal_approx1(int m, int d, int i1, int i2) {
  if (m < 2 || m % 2 != 0 || d < 2 || d % 2 != 0) throw DomainError("optimal_approx1: m and d must be even");
  hamming({i1, i2});
  WitnessSpec w;
  w.family = Family::Approx1;
  w.m = m;
  w.d = d;
  w.coeffs.assign(coeff_count(Family::Approx1, d), 0.0);
  w.coeffs[0] = 1.0;
  w.coeffs[1] = sgn_bit(i1);
  w.coeffs[2] = sgn_bit(i2);
  // on (-i gamma_1 gamma_2)^{(x)m}; equals (-1)^{m/2+i1+i2} on the raw product
  w.coeffs[d + 2] = sgn_bit(i1 + i2);
  return w;
}

WitnessSpec optimal_approx2(int m, int d, const std::vector<int>& bits) {
  if (m < 2 || m % 2 != 0 || d < 4 || d % 2 != 0) throw DomainError("optimal_approx2: m even, d even >= 4");
  const int h = d / 2;
  if (static_cast<int>(bits.size()) != h + 1) throw DomainError("optimal_approx2: need d/2 + 1 bits");
  hamming(bits);
  auto bit = [&](int k) { return bits[static_cast<std::size_t>(k - 1)]; };
  WitnessSpec w;
  w.family = Family::Approx2;
  w.m = m;
  w.d = d;
  w.coeffs.assign(coeff_count(Family::Approx2, d), 0.0);
  w.coeffs[0] = 1.0;
  for (int k = 1; k <= h + 1; ++k) w.coeffs[k] = sgn_bit(bit(k));
  for (int k = 2; k <= h; ++k) w.coeffs[h + k] = sgn_bit(bit(1) + bit(h + 1) + bit(k));
  for (int k = 1; k <= h; ++k) w.coeffs[d + k] = sgn_bit(m / 2 + bit(h + 1) + bit(k));
  w.coeffs[3 * h + 1] = sgn_bit(bit(1) + bit(2));
  return w;
}

WitnessSpec build_odd_m_kind1(int m, int d, const std::vector<double>& coeffs, OddMSet set) {
  WitnessSpec w;
  w.family = Family::OddM1;
  w.m = m;
  w.d = d;
  w.coeffs = coeffs;
  w.odd_set = set;
  validate(w);
  return w;
}

WitnessSpec build_odd_m_kind2(int m, int d, const std::vector<double>& coeffs) {
  WitnessSpec w;
  w.family = Family::OddM2;
  w.m = m;
  w.d = d;
  w.coeffs = coeffs;
  validate(w);
  return w;
}

// ---------------------------------------------------------------- classify

namespace {

bool near_zero(const CMat& a, double tol) { return a.cwiseAbs().maxCoeff() <= tol; }

// unitary involution up to a phase: X^2 = +-I and X = +-X^dagger
bool involution_like(const CMat& x) {
  const CMat id = CMat::Identity(x.rows(), x.cols());
  const CMat sq = x * x;
  const bool inv = near_zero(sq - id, 1e-12) || near_zero(sq + id, 1e-12);
  const CMat xa = x.adjoint();
  return inv && (near_zero(x - xa, 1e-12) || near_zero(x + xa, 1e-12));
}

// min c . P over sum |P_k| <= r, |P_k| <= 1
double l1_box_min(const RVec& c, double r) {
  std::vector<double> a(c.size());
  for (Eigen::Index k = 0; k < c.size(); ++k) a[k] = std::abs(c(k));
  std::sort(a.begin(), a.end(), std::greater<>());
  double left = r;
  double v = 0.0;
  for (double x : a) {
    if (left <= 0.0) break;
    const double t = std::min(1.0, left);
    v -= t * x;
    left -= t;
  }
  return v;
}

constexpr std::size_t kSimplexRowCap = 4096;

double region_min(const WitnessSpec& w) {
  const RegionFamily rf = region_of(w.family);
  const int n = static_cast<int>(w.coeffs.size()) - 1;
  RVec c(n);
  for (int k = 0; k < n; ++k) c(k) = w.coeffs[k + 1];
  if (rf == RegionFamily::Kind1 || rf == RegionFamily::Approx1) {
    if (n > 12) return w.coeffs[0] + l1_box_min(c, rf == RegionFamily::Kind1 ? 1.0 : std::sqrt(2.0));
  }
  LpProblem p;
  p.c = c;
  p.c0 = w.coeffs[0];
  p.halfspaces = region_halfspaces(rf, w.d);
  if (p.halfspaces.size() > kSimplexRowCap) throw CapacityError("classify: region too large for the dense simplex");
  LpSolution s = simplex_min(p);
  if (s.status != LpStatus::Optimal) throw std::runtime_error("classify: LP not optimal (" + status_name(s.status) + ")");
  return s.optimum;
}

}  // namespace

bool support_bound(const WitnessSpec& w, double& bound) {
  const auto terms = witness_terms(w);
  std::vector<std::size_t> supp;
  double amax = 0.0;
  for (std::size_t k = 0; k < terms.size(); ++k)
    if (w.coeffs[k + 1] != 0.0) {
      supp.push_back(k);
      amax = std::max(amax, std::abs(w.coeffs[k + 1]));
    }
  bound = w.coeffs[0] - amax;
  if (supp.size() <= 1) return true;
  int good_sites = 0;
  for (int f = 0; f < w.m; ++f) {
    bool ok = true;
    for (std::size_t a = 0; a < supp.size() && ok; ++a) {
      const CMat& x = terms[supp[a]][f];
      if (!involution_like(x)) ok = false;
      for (std::size_t b = a + 1; b < supp.size() && ok; ++b) {
        const CMat& y = terms[supp[b]][f];
        if (!near_zero(x * y + y * x, 1e-12)) ok = false;
      }
    }
    if (ok) ++good_sites;
  }
  return good_sites >= 2;
}

WitnessClass classify(const WitnessSpec& w, const ClassifyOptions& opt) {
  validate(w);
  WitnessClass out;
  double scale = 0.0;
  for (double c : w.coeffs) scale = std::max(scale, std::abs(c));
  out.tol = 1e-9 * std::max(scale, 1e-300);

  const HermitianOperator W = witness_matrix(w);
  const Spectrum sp = spectrum(W);
  out.min_eig = sp.min_eigenvalue;

  if (w.rep == Rep::Euclidean && (w.family == Family::Kind1 || w.family == Family::Kind2) &&
      (w.family == Family::Kind2 || (w.m * w.d / 2) % 2 == 0)) {
    const auto cf = (w.family == Family::Kind1) ? closed_form_spectrum_kind1(w.coeffs, w.m, w.d)
                                                : closed_form_spectrum_kind2(w.coeffs, w.m, w.d);
    out.closed_form_error = multiset_distance(cf, sp.eigenvalues);
  }

  out.lp_min = region_min(w);
  out.support_bound_valid = support_bound(w, out.support_bound);
  out.min_over_feasible = out.lp_min;
  if (out.support_bound_valid) out.min_over_feasible = std::max(out.lp_min, out.support_bound);

  if (out.min_eig >= -out.tol)
    out.verdict = Verdict::PositiveOperator;
  else if (out.min_over_feasible >= -out.tol)
    out.verdict = Verdict::EW;
  else
    out.verdict = Verdict::NotEW;

  if (out.verdict == Verdict::EW) {
    if (opt.optimality && (w.family == Family::Kind1 || w.family == Family::Kind2)) {
      out.optimal = check_optimality(w);
      out.optimality_checked = true;
    }
    if (opt.decomposability) {
      DecompResult d = decomposability(w);
      out.decomposable = d.verdict;
      out.pt_min = d.pt_min;
      out.evidence = d.evidence;
    }
  }
  return out;
}

// ---------------------------------------------------------------- optimality

double joint_positive_trace(const WitnessSpec& w) {
  if (w.family != Family::Kind1 && w.family != Family::Kind2)
    throw UnsupportedError("joint_positive_trace: only kind1 and kind2");
  const auto terms = witness_terms(w);
  std::vector<std::size_t> supp;
  for (std::size_t k = 0; k < terms.size(); ++k)
    if (w.coeffs[k + 1] != 0.0) supp.push_back(k);
  const std::size_t n = supp.size();
  if (n > 20) throw CapacityError("joint_positive_trace: too many supported blocks");
  const Eigen::Index D = terms[0][0].rows();
  cplx total{0.0, 0.0};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    double sign = 1.0;
    for (std::size_t a = 0; a < n; ++a)
      if (mask >> a & 1u) sign *= (w.coeffs[supp[a] + 1] > 0.0) ? 1.0 : -1.0;
    cplx tr{1.0, 0.0};
    for (int f = 0; f < w.m; ++f) {
      CMat p = CMat::Identity(D, D);
      for (std::size_t a = 0; a < n; ++a)
        if (mask >> a & 1u) p = p * terms[supp[a]][f];
      tr *= p.trace();
    }
    total += sign * tr;
  }
  return total.real() / std::ldexp(1.0, static_cast<int>(n));
}

bool check_optimality(const WitnessSpec& w) {
  if (w.family != Family::Kind1 && w.family != Family::Kind2)
    throw UnsupportedError("check_optimality: only kind1 and kind2 optimal forms are supported");
  ClassifyOptions o;
  o.decomposability = false;
  o.optimality = false;
  const WitnessClass c = classify(w, o);
  if (c.verdict != Verdict::EW) return false;
  const double a0 = w.coeffs[0];
  for (std::size_t k = 1; k < w.coeffs.size(); ++k) {
    const double a = std::abs(w.coeffs[k]);
    if (a != 0.0 && std::abs(a - a0) > c.tol) return false;
  }
  if (std::abs(c.min_over_feasible) > c.tol) return false;
  return joint_positive_trace(w) < 0.5;
}

// ---------------------------------------------------------------- decomposability

namespace {

std::vector<BsdState> ppt_candidates(const WitnessSpec& w) {
  std::vector<BsdState> out;
  auto add = [&](std::vector<BsdState> v) {
    for (auto& s : v) out.push_back(std::move(s));
  };
  if (w.rep == Rep::Chiral4) {
    add(vertex_ppt_states_kind1(w.m, 4, Rep::Chiral4));
    return out;
  }
  if (w.m % 2 != 0) return out;
  try {
    add(vertex_ppt_states_kind1(w.m, w.d, Rep::Euclidean));
  } catch (const DomainError&) {
  }
  add(approx1_vertex_states(w.m, w.d));
  if (w.d >= 4) add(approx2_vertex_states(w.m, w.d));
  return out;
}

}  // namespace

DecompResult decomposability(const WitnessSpec& w) {
  validate(w);
  DecompResult r;
  double scale = 0.0;
  for (double c : w.coeffs) scale = std::max(scale, std::abs(c));
  const HermitianOperator W = witness_matrix(w);
  bool all_psd = true;
  for (int k = 1; k <= w.m; ++k) {
    const double mn = spectrum(partial_transpose(W.matrix, W.local_dim, W.m, k)).min_eigenvalue;
    r.pt_min.push_back(mn);
    if (mn < -1e-10 * scale) all_psd = false;
  }
  if (all_psd) {
    r.verdict = Decomp::Decomposable;
    return r;
  }
  for (const auto& s : ppt_candidates(w)) {
    const CMat rho = state_matrix(s);
    PptReport pr;
    try {
      pr = ppt_check(rho, W.local_dim, W.m);
    } catch (const DomainError&) {
      continue;
    }
    if (pr.min_eig < -1e-10 || !pr.all_ppt()) continue;
    const double v = expectation(W.matrix, rho);
    if (v < -1e-9 * scale) r.evidence.push_back({s.label, v});
  }
  r.verdict = r.evidence.empty() ? Decomp::Undetermined : Decomp::NonDecomposable;
  return r;
}

}  // namespace bsdw
