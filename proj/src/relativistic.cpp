#include "bsdw/relativistic.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "bsdw/gamma_algebra.hpp"
#include "bsdw/operator_space.hpp"
#include "bsdw/states.hpp"
#include "bsdw/witness.hpp"

namespace bsdw {

void validate(const BoostParams& p) {
  if (!std::isfinite(p.xi)) throw DomainError("boost: rapidity must be finite");
  if (std::abs(p.p_hat.norm() - 1.0) > 1e-12) throw DomainError("boost: p_hat must be a unit vector");
}

CMat boost_matrix(const BoostParams& p) {
  validate(p);
  CMat sp = CMat::Zero(2, 2);
  sp(0, 0) = p.p_hat.z();
  sp(1, 1) = -p.p_hat.z();
  sp(0, 1) = cplx(p.p_hat.x(), -p.p_hat.y());
  sp(1, 0) = cplx(p.p_hat.x(), p.p_hat.y());
  CMat sz = CMat::Zero(2, 2);
  sz(0, 0) = 1.0;
  sz(1, 1) = -1.0;
  // K = sigma_z (x) sigma.p squares to the identity
  const CMat K = kron(sz, sp);
  return std::cosh(p.xi / 2) * CMat::Identity(4, 4) - std::sinh(p.xi / 2) * K;
}

Eigen::Matrix4d lorentz_matrix(const BoostParams& p) {
  const CMat D = boost_matrix(p);
  const CMat Di = D.inverse();
  const GammaBasis g = build_chiral4();
  const double metric[4] = {1.0, -1.0, -1.0, -1.0};
  Eigen::Matrix4d L;
  for (int mu = 0; mu < 4; ++mu) {
    const CMat t = Di * g.gammas[mu] * D;
    for (int nu = 0; nu < 4; ++nu) L(mu, nu) = (t * g.gammas[nu]).trace().real() / (4.0 * metric[nu]);
  }
  return L;
}

double lorentz_residual(const BoostParams& p) {
  const CMat D = boost_matrix(p);
  const CMat Di = D.inverse();
  const GammaBasis g = build_chiral4();
  const Eigen::Matrix4d L = lorentz_matrix(p);
  double r = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    CMat rhs = CMat::Zero(4, 4);
    for (int nu = 0; nu < 4; ++nu) rhs += L(mu, nu) * g.gammas[nu];
    r = std::max(r, (Di * g.gammas[mu] * D - rhs).cwiseAbs().maxCoeff());
  }
  return r;
}

CMat boost_state(const CMat& rho, const BoostParams& p) {
  if (rho.rows() != 16 || rho.cols() != 16) throw DomainError("boost_state: need a 16x16 density matrix");
  if (!is_density(rho)) throw DomainError("boost_state: input is not a density matrix");
  const CMat D = boost_matrix(p);
  const CMat DD = kron(D, D);
  CMat out = DD * rho * DD.adjoint();
  return out / out.trace().real();
}

ClosestSeparable closest_separable(const CMat& rho_ent, const CMat& w) {
  const double N = static_cast<double>(rho_ent.rows());
  const double t = (rho_ent * w).trace().real();
  if (t >= 0.0) throw DomainError("closest_separable: witness does not detect the state");
  const double tw = w.trace().real();
  const double tw2 = (w * w).trace().real();
  const double lam = -t / (tw2 - tw * tw / N);
  ClosestSeparable out;
  out.rho_s = rho_ent + lam * w - (lam * tw / N) * CMat::Identity(rho_ent.rows(), rho_ent.cols());
  out.epsilon = hs_inner(out.rho_s, out.rho_s - rho_ent).real();
  return out;
}

CMat witness_from_pair(const CMat& rho_s, const CMat& rho_ent) {
  const CMat delta = rho_s - rho_ent;
  const double n = hs_norm(delta);
  if (n < 1e-14) throw DomainError("witness_from_pair: states coincide");
  const double e = hs_inner(rho_s, delta).real();
  return (delta - e * CMat::Identity(delta.rows(), delta.cols())) / n;
}

double hs_measure(const CMat& rho_ent, const CMat& w) { return -(rho_ent * w).trace().real(); }

RestPair rest_pair() {
  RestPair r;
  r.rho_ent = state_matrix(vertex_state_kind1(2, 4, {1, 0, 0, 0}, Rep::Chiral4));
  r.w_raw = witness_matrix(optimal_kind1(2, 4, {0, 1, 1, 1}, Rep::Chiral4)).matrix;
  const ClosestSeparable cs = closest_separable(r.rho_ent, r.w_raw);
  r.rho_s = cs.rho_s;
  r.epsilon = cs.epsilon;
  return r;
}

HsResult hs_pipeline(const RestPair& rest, const BoostParams& p) {
  HsResult out;
  out.xi = p.xi;
  out.rho_ent = boost_state(rest.rho_ent, p);
  out.closest_separable = boost_state(rest.rho_s, p);
  out.optimal_witness = witness_from_pair(out.closest_separable, out.rho_ent);
  const CMat delta = out.closest_separable - out.rho_ent;
  out.distance = hs_norm(delta);
  out.epsilon = hs_inner(out.closest_separable, delta).real();
  out.measure = hs_measure(out.rho_ent, out.optimal_witness);
  out.contact = (out.closest_separable * out.optimal_witness).trace().real();
  return out;
}

namespace {

double bracket(double xi) {
  const double t = std::tanh(xi / 2);
  const double t2 = t * t, t4 = t2 * t2, t6 = t4 * t2, t8 = t4 * t4;
  return 5.0 * (1.0 + t8) + 28.0 * (t2 + t6) + 126.0 * t4;
}

}  // namespace

double hs_closed_form_measure(double xi) {
  const double c = std::cosh(xi / 2);
  return std::pow(c, 4) / (30.0 * std::pow(std::cosh(xi), 2)) * std::sqrt(bracket(xi));
}

double hs_closed_form_epsilon(double xi) {
  const double c = std::cosh(xi / 2);
  return -std::pow(c, 8) / (600.0 * std::pow(std::cosh(xi), 4)) * bracket(xi);
}

std::vector<SweepRow> boost_sweep(const std::vector<double>& grid, const Eigen::Vector3d& p_hat) {
  const RestPair rest = rest_pair();
  std::vector<SweepRow> rows;
  for (double xi : grid) {
    BoostParams p;
    p.xi = xi;
    p.p_hat = p_hat;
    const HsResult r = hs_pipeline(rest, p);
    SweepRow row;
    row.xi = xi;
    row.measure = r.measure;
    row.epsilon = r.epsilon;
    row.contact = r.contact;
    row.measure_closed = hs_closed_form_measure(xi);
    row.epsilon_closed = hs_closed_form_epsilon(xi);
    rows.push_back(row);
  }
  return rows;
}

bool lorentz_invariance_check(const CMat& w, const BoostParams& p, double tol) {
  if (w.rows() != 16 || w.cols() != 16) throw DomainError("lorentz_invariance_check: need a 16x16 operator");
  const CMat D = boost_matrix(p);
  const CMat DD = kron(D, D);
  const CMat DDi = kron(D.inverse(), D.inverse());
  return (DDi * w * DD - w).cwiseAbs().maxCoeff() <= tol;
}

namespace {

double product_value(const CMat& op, const CVec& a, const CVec& b) {
  const CVec v = kron(a, b);
  return (v.adjoint() * op * v)(0, 0).real();
}

// min over a of <a b|op|a b> for fixed b: lowest eigenvector of the reduced 4x4 operator
CVec best_first(const CMat& op, const CVec& b) {
  const CMat B = kron(CMat::Identity(4, 4), b);
  const CMat red = B.adjoint() * op * B;
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (red + red.adjoint()));
  return es.eigenvectors().col(0);
}

CVec best_second(const CMat& op, const CVec& a) {
  const CMat A = kron(a, CMat::Identity(4, 4));
  const CMat red = A.adjoint() * op * A;
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (red + red.adjoint()));
  return es.eigenvectors().col(0);
}

}  // namespace

ProductMinimum product_state_minimum(const CMat& op, int samples, std::uint64_t seed, int refine_seeds,
                                     int refine_iters) {
  if (op.rows() != 16 || op.cols() != 16) throw DomainError("product_state_minimum: need a 16x16 operator");
  std::mt19937_64 rng(seed);
  struct Cand {
    double v;
    CVec a, b;
  };
  std::vector<Cand> best;
  for (int s = 0; s < samples; ++s) {
    CVec a = random_local_state(4, rng);
    CVec b = random_local_state(4, rng);
    const double v = product_value(op, a, b);
    if (static_cast<int>(best.size()) < refine_seeds || v < best.back().v) {
      best.push_back({v, a, b});
      std::sort(best.begin(), best.end(), [](const Cand& x, const Cand& y) { return x.v < y.v; });
      if (static_cast<int>(best.size()) > refine_seeds) best.pop_back();
    }
  }
  ProductMinimum out;
  out.value = best.empty() ? 0.0 : best.front().v;
  if (!best.empty()) {
    out.alpha = best.front().a;
    out.beta = best.front().b;
  }
  for (auto& c : best) {
    CVec a = c.a, b = c.b;
    double v = c.v;
    for (int it = 0; it < refine_iters; ++it) {
      a = best_first(op, b);
      b = best_second(op, a);
      const double nv = product_value(op, a, b);
      const bool stalled = (v - nv) < 1e-15;
      v = std::min(v, nv);
      if (stalled) break;
    }
    if (v < out.value) {
      out.value = v;
      out.alpha = a;
      out.beta = b;
    }
  }
  return out;
}

}  // namespace bsdw
