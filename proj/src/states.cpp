#include "bsdw/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bsdw {

std::string state_family_name(StateFamily f) {
  switch (f) {
    case StateFamily::GammaOnly: return "gamma";
    case StateFamily::Kind2Set: return "kind2";
    case StateFamily::Approx1Set: return "approx1";
    case StateFamily::Approx2Set: return "approx2";
    default: return "full";
  }
}

StateFamily parse_state_family(const std::string& s) {
  if (s == "gamma") return StateFamily::GammaOnly;
  if (s == "kind2") return StateFamily::Kind2Set;
  if (s == "approx1") return StateFamily::Approx1Set;
  if (s == "approx2") return StateFamily::Approx2Set;
  if (s == "full") return StateFamily::Full;
  throw DomainError("unknown state family: " + s);
}

namespace {

Family witness_family_of(StateFamily f) {
  switch (f) {
    case StateFamily::GammaOnly: return Family::Kind1;
    case StateFamily::Kind2Set: return Family::Kind2;
    case StateFamily::Approx1Set: return Family::Approx1;
    default: return Family::Approx2;
  }
}

std::size_t ipow_sz(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

double inv_dim(int m, int d) { return 1.0 / static_cast<double>(ipow_sz(std::size_t{1} << (d / 2), m)); }

CMat pauli(int k) {
  CMat p = CMat::Zero(2, 2);
  switch (k) {
    case 0: p(0, 0) = p(1, 1) = 1.0; break;
    case 1: p(0, 1) = p(1, 0) = 1.0; break;
    case 2: p(0, 1) = -I_UNIT; p(1, 0) = I_UNIT; break;
    default: p(0, 0) = 1.0; p(1, 1) = -1.0; break;
  }
  return p;
}

void check_even(int m, int d, const char* who) {
  if (m < 2 || m % 2 != 0 || d < 2 || d % 2 != 0) throw DomainError(std::string(who) + ": m and d must be even");
}

}  // namespace

std::size_t state_coeff_count(StateFamily f, int d, Rep rep) {
  if (f == StateFamily::Full) return (rep == Rep::Chiral4) ? 16 : (std::size_t{1} << (d % 2 == 0 ? d : d - 1));
  return coeff_count(witness_family_of(f), d);
}

std::vector<CMat> chiral_labels() {
  const GammaBasis b = build_chiral4();
  const CMat& g0 = b.gammas[0];
  const CMat& g1 = b.gammas[1];
  const CMat& g2 = b.gammas[2];
  const CMat& g3 = b.gammas[3];
  const CMat& g5 = b.gammas[4];
  return {CMat::Identity(4, 4), g0, g1, g2, g3, g5,
          g0 * g1, g0 * g2, -I_UNIT * g0 * g3, I_UNIT * g1 * g2, -I_UNIT * g1 * g3, I_UNIT * g2 * g3,
          -I_UNIT * g0 * g5, g1 * g5, g2 * g5, g3 * g5};
}

std::vector<CMat> pauli_labels() {
  std::vector<CMat> out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) out.push_back(kron(pauli(a), pauli(b)));
  return out;
}

std::vector<TensorTerm> state_terms(const BsdState& s) {
  if (s.family == StateFamily::Full) {
    std::vector<TensorTerm> out;
    if (s.rep == Rep::Chiral4) {
      if (s.d != 4) throw UnsupportedError("state: chiral labels need d = 4");
      auto labels = chiral_labels();
      for (std::size_t k = 1; k < labels.size(); ++k) out.emplace_back(static_cast<std::size_t>(s.m), labels[k]);
    } else {
      const auto els = algebra_elements(build_euclidean_gammas(s.d));
      for (std::size_t k = 1; k < els.size(); ++k) out.emplace_back(static_cast<std::size_t>(s.m), els[k].matrix);
    }
    return out;
  }
  WitnessSpec w;
  w.family = witness_family_of(s.family);
  w.m = s.m;
  w.d = s.d;
  w.rep = s.rep;
  w.coeffs.assign(coeff_count(w.family, s.d), 0.0);
  return witness_terms(w);
}

BsdState make_bsd(StateFamily f, int m, int d, const std::vector<double>& b, Rep rep) {
  check_even(m, d, "make_bsd");
  BsdState s;
  s.family = f;
  s.m = m;
  s.d = d;
  s.rep = rep;
  if (b.size() + 1 != state_coeff_count(f, d, rep))
    throw DomainError("make_bsd: expected " + std::to_string(state_coeff_count(f, d, rep) - 1) + " coefficients for " +
                      state_family_name(f));
  s.coeffs.push_back(inv_dim(m, d));
  s.coeffs.insert(s.coeffs.end(), b.begin(), b.end());
  return s;
}

CMat state_matrix(const BsdState& s) {
  if (s.coeffs.size() != state_coeff_count(s.family, s.d, s.rep)) throw DomainError("state: coefficient count mismatch");
  if (std::abs(s.coeffs[0] - inv_dim(s.m, s.d)) > 1e-12) throw DomainError("state: b_0 must equal 2^{-md/2}");
  return assemble_terms(s.coeffs, state_terms(s)).matrix;
}

// ---------------------------------------------------------------- pure states

std::array<CVec, 4> helicity_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  std::array<CVec, 4> out;
  const double raw[4][4] = {{1, 0, 1, 0}, {0, 1, 0, -1}, {1, 0, -1, 0}, {0, 1, 0, 1}};
  for (int i = 0; i < 4; ++i) {
    out[i] = CVec(4);
    for (int j = 0; j < 4; ++j) out[i](j) = s * raw[i][j];
  }
  return out;
}

namespace {

CVec kv(const CVec& a, const CVec& b) { return kron(a, b); }

CVec pair_state(int a, int b, double sign, bool same) {
  const auto psi = helicity_basis();
  const double s = 1.0 / std::sqrt(2.0);
  if (same) return s * (kv(psi[a], psi[a]) + sign * kv(psi[b], psi[b]));
  return s * (kv(psi[a], psi[b]) + sign * kv(psi[b], psi[a]));
}

}  // namespace

CVec iso_concurrence_state(int k, double theta) {
  if (k < 1 || k > 16) throw DomainError("iso_concurrence_state: k out of range 1..16");
  struct P {
    bool same;
    int a1, b1, a2, b2;
    double sign;
  };
  // psi(1,2)/(3,4), phi(1,2)/(3,4), phi(1,3)/(2,4), phi(1,4)/(2,3), each with + then -
  static const P pairs[8] = {{true, 0, 1, 2, 3, 1},   {true, 0, 1, 2, 3, -1},  {false, 0, 1, 2, 3, 1},
                             {false, 0, 1, 2, 3, -1}, {false, 0, 2, 1, 3, 1},  {false, 0, 2, 1, 3, -1},
                             {false, 0, 3, 1, 2, 1},  {false, 0, 3, 1, 2, -1}};
  const P& p = pairs[(k - 1) / 2];
  const CVec u = pair_state(p.a1, p.b1, p.sign, p.same);
  const CVec v = pair_state(p.a2, p.b2, p.sign, p.same);
  const double c = std::cos(theta), s = std::sin(theta);
  return ((k - 1) % 2 == 0) ? CVec(c * u + s * v) : CVec(-s * u + c * v);
}

CVec epr_state() {
  const auto psi = helicity_basis();
  return (kv(psi[3], psi[0]) - I_UNIT * kv(psi[0], psi[3])) / std::sqrt(2.0);
}

CVec phi_minus_14() {
  const auto psi = helicity_basis();
  return (kv(psi[0], psi[3]) - kv(psi[3], psi[0])) / std::sqrt(2.0);
}

CMat epr_rotation() {
  CMat s = CMat::Zero(2, 2);
  s(0, 0) = std::exp(I_UNIT * (std::numbers::pi / 4));
  s(1, 1) = std::exp(-I_UNIT * (std::numbers::pi / 4));
  return kron(CMat::Identity(2, 2), s);
}

CMat epr_witness(int i4) {
  const CMat S = kron(epr_rotation(), CMat::Identity(4, 4));
  const CMat W = witness_matrix(optimal_kind1(2, 4, {0, 0, 0, i4})).matrix;
  return S * W * S.adjoint();
}

CMat mixture_matrix(const std::vector<double>& weights, double theta) {
  if (weights.size() != 16) throw DomainError("mixture: need 16 weights");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw DomainError("mixture: weights must be nonnegative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw DomainError("mixture: weights must sum to 1");
  CMat rho = CMat::Zero(16, 16);
  for (int k = 0; k < 16; ++k)
    if (weights[k] != 0.0) {
      const CVec v = iso_concurrence_state(k + 1, theta);
      rho += weights[k] * v * v.adjoint();
    }
  return rho;
}

CMat cross_coefficients(const CMat& rho, const std::vector<CMat>& labels) {
  const auto n = static_cast<Eigen::Index>(labels.size());
  CMat c(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) c(a, b) = (rho * kron(labels[a], labels[b])).trace() / 16.0;
  return c;
}

BsdState bsd_from_mixture(const std::vector<double>& weights, double theta) {
  const CMat rho = mixture_matrix(weights, theta);
  const auto labels = chiral_labels();
  std::vector<double> b;
  for (std::size_t k = 1; k < labels.size(); ++k)
    b.push_back((rho * kron(labels[k], labels[k])).trace().real() / 16.0);
  BsdState s = make_bsd(StateFamily::Full, 2, 4, b, Rep::Chiral4);
  s.label = "mixture";
  return s;
}

// ---------------------------------------------------------------- vertex states

BsdState vertex_state_kind1(int m, int d, const std::vector<int>& bits, Rep rep) {
  check_even(m, d, "vertex_state_kind1");
  if (static_cast<int>(bits.size()) != d) throw DomainError("vertex_state_kind1: need d bits");
  if (rep == Rep::Chiral4 && d != 4) throw UnsupportedError("vertex_state_kind1: chiral needs d = 4");
  if (rep == Rep::Euclidean && d % 4 != 0)
    throw DomainError("vertex_state_kind1: for d = 2 mod 4 the vertex operators are not PPT");
  const double N = 1.0 / inv_dim(m, d);
  const double t = 1.0 / ((d - 1) * N);
  const cplx ph = (rep == Rep::Chiral4) ? ipow(m) : ipow(-(m * d / 2));
  std::vector<double> b(static_cast<std::size_t>(d) + 1);
  int sum = 0;
  std::string tag;
  for (int k = 0; k < d; ++k) {
    b[k] = t * sgn_bit(bits[k]);
    sum += bits[k];
    tag += bits[k] ? '1' : '0';
  }
  b[d] = t * ph.real() * sgn_bit(sum);
  BsdState s = make_bsd(StateFamily::GammaOnly, m, d, b, rep);
  s.label = "kind1-vertex-" + tag;
  return s;
}

std::vector<BsdState> vertex_ppt_states_kind1(int m, int d, Rep rep) {
  std::vector<BsdState> out;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    std::vector<int> bits(d);
    for (int k = 0; k < d; ++k) bits[k] = (mask >> (d - 1 - k)) & 1u;
    out.push_back(vertex_state_kind1(m, d, bits, rep));
  }
  return out;
}

std::vector<BsdState> approx1_vertex_states(int m, int d) {
  check_even(m, d, "approx1_vertex_states");
  const double n = inv_dim(m, d);
  std::vector<BsdState> out;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2) {
      std::vector<double> b(static_cast<std::size_t>(d) + 2, 0.0);
      b[0] = n * sgn_bit(i1);
      b[1] = n * sgn_bit(i2);
      b[d + 1] = -n * sgn_bit(i1 + i2);
      BsdState s = make_bsd(StateFamily::Approx1Set, m, d, b);
      s.label = "approx1-vertex-" + std::to_string(i1) + std::to_string(i2);
      out.push_back(s);
    }
  return out;
}

std::vector<BsdState> approx2_vertex_states(int m, int d) {
  check_even(m, d, "approx2_vertex_states");
  if (d < 4) throw DomainError("approx2_vertex_states: d >= 4");
  const double n = inv_dim(m, d);
  const int h = d / 2;
  std::vector<BsdState> out;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2) {
      std::vector<double> b(3 * h + 1, 0.0);
      b[0] = n * sgn_bit(i1);
      b[1] = n * sgn_bit(i2);
      b[3 * h] = n * sgn_bit(i1 + i2);
      BsdState s = make_bsd(StateFamily::Approx2Set, m, d, b);
      s.label = "approx2-vertex-" + std::to_string(i1) + std::to_string(i2);
      out.push_back(s);
    }
  return out;
}

// ---------------------------------------------------------------- checks

bool PptReport::all_ppt() const { return std::all_of(ppt.begin(), ppt.end(), [](bool b) { return b; }); }

bool is_density(const CMat& rho, double tol) {
  if (rho.rows() != rho.cols() || !is_hermitian(rho)) return false;
  if (std::abs(rho.trace().real() - 1.0) > 1e-8) return false;
  return spectrum(rho).min_eigenvalue >= -tol;
}

PptReport ppt_check(const CMat& rho, int local_dim, int m) {
  if (rho.rows() != rho.cols() || !is_hermitian(rho)) throw DomainError("ppt_check: not hermitian");
  if (std::abs(rho.trace().real() - 1.0) > 1e-8) throw DomainError("ppt_check: trace is not 1");
  PptReport r;
  r.min_eig = spectrum(rho).min_eigenvalue;
  if (r.min_eig < -1e-10) throw DomainError("ppt_check: not a positive operator");
  for (int k = 1; k <= m; ++k) {
    const double mn = spectrum(partial_transpose(rho, local_dim, m, k)).min_eigenvalue;
    r.pt_min.push_back(mn);
    r.ppt.push_back(mn >= -1e-10);
  }
  return r;
}

std::string region_verdict_name(RegionVerdict v) {
  switch (v) {
    case RegionVerdict::Invalid: return "Invalid";
    case RegionVerdict::Separable: return "Separable";
    default: return "DetectedEntangled";
  }
}

RegionReport region_classify(const BsdState& s, Family witness_family) {
  std::vector<WitnessSpec> ws;
  if (s.family == StateFamily::GammaOnly && witness_family == Family::Kind1) {
    for (unsigned mask = 0; mask < (1u << s.d); ++mask) {
      std::vector<int> bits(s.d);
      for (int k = 0; k < s.d; ++k) bits[k] = (mask >> (s.d - 1 - k)) & 1u;
      ws.push_back(optimal_kind1(s.m, s.d, bits, s.rep));
    }
  } else if (s.family == StateFamily::Kind2Set && witness_family == Family::Kind2) {
    for (int i1 = 0; i1 < 2; ++i1)
      for (int i2 = 0; i2 < 2; ++i2) ws.push_back(optimal_kind2(s.m, s.d, i1, i2, 1));
  } else {
    throw DomainError("region_classify: state family " + state_family_name(s.family) + " does not match witness family " +
                      family_name(witness_family));
  }
  const CMat rho = state_matrix(s);
  RegionReport r;
  r.min_eig = spectrum(rho).min_eigenvalue;
  r.min_value = 0.0;
  bool first = true;
  for (const auto& w : ws) {
    std::string tag;
    for (std::size_t k = 1; k < w.coeffs.size(); ++k) tag += (w.coeffs[k] < 0) ? '-' : (w.coeffs[k] > 0 ? '+' : '0');
    const double v = expectation(witness_matrix(w).matrix, rho);
    r.values.push_back({tag, v});
    if (first || v < r.min_value) r.min_value = v;
    first = false;
    if (v < -1e-9) ++r.violated;
  }
  if (r.min_eig < -1e-10)
    r.verdict = RegionVerdict::Invalid;
  else
    r.verdict = (r.violated == 0) ? RegionVerdict::Separable : RegionVerdict::DetectedEntangled;
  return r;
}

double wootters_concurrence(const CMat& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) throw DomainError("wootters_concurrence: need a 4x4 density matrix");
  const CMat Y = kron(pauli(2), pauli(2));
  const CMat R = rho * Y * rho.conjugate() * Y;
  Eigen::ComplexEigenSolver<CMat> es(R);
  std::vector<double> l;
  for (int k = 0; k < 4; ++k) l.push_back(std::sqrt(std::max(0.0, es.eigenvalues()(k).real())));
  std::sort(l.begin(), l.end(), std::greater<>());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

CVec random_local_state(int local_dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CVec v(local_dim);
  for (int k = 0; k < local_dim; ++k) v(k) = cplx(g(rng), g(rng));
  return v / v.norm();
}

CVec random_pure_product(int m, int local_dim, std::mt19937_64& rng) {
  if (m < 1 || local_dim < 1) throw DomainError("random_pure_product: m, local_dim >= 1");
  CVec v = random_local_state(local_dim, rng);
  for (int f = 1; f < m; ++f) v = kron(v, random_local_state(local_dim, rng));
  return v;
}

CVec random_pure_product(int m, int local_dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_pure_product(m, local_dim, rng);
}

}  // namespace bsdw
