#include "twocs/rmatrix.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "twocs/errors.hpp"

namespace twocs {

double DeformationParams::hbar() const { return 2.0 * std::numbers::pi / k; }

double DeformationParams::hbar_vertical() const {
  return 2.0 * std::numbers::pi / k_prime.value_or(k);
}

void DeformationParams::validate() const {
  if (k == 0.0) throw DomainError("coupling k must be nonzero");
  const double kp = k_prime.value_or(k);
  if (kp == 0.0) throw DomainError("coupling k' must be nonzero");
  const double ratio = std::abs(kp / k);
  if (ratio > 10.0 || ratio < 0.1)
    throw DomainError(fmt::format("k' = {} is not of the same order as k = {}", kp, k));
}

Classical2R Classical2R::zero(const Lie2Algebra& l) {
  Classical2R r;
  r.alg = l;
  r.r_gh = Mat::Zero(l.dim_g(), l.dim_h());
  r.r_hg = Mat::Zero(l.dim_h(), l.dim_g());
  return r;
}

Mat standard_sl2_r0_coeffs() {
  // Basis order (e, f, h).
  Mat c = Mat::Zero(3, 3);
  c(0, 1) = 1.0;
  c(2, 2) = 0.25;
  return c;
}

Classical2R Classical2R::standard_inn_sl2() {
  return inn_lift(Lie2Algebra::inn_sl2(), standard_sl2_r0_coeffs());
}

Classical2R Classical2R::inn_lift(const Lie2Algebra& l, const Mat& r0) {
  if (l.t_lin.rows() != l.t_lin.cols() || l.dim_g() == 0)
    throw DomainError("inn_lift needs an invertible t");
  Eigen::FullPivLU<Mat> lu(l.t_lin);
  if (!lu.isInvertible()) throw DomainError("inn_lift needs an invertible t");
  if (r0.rows() != l.dim_g() || r0.cols() != l.dim_g())
    throw DomainError("inn_lift: coefficient matrix has the wrong shape");
  Classical2R r;
  r.alg = l;
  const Mat tinv = lu.inverse();
  r.r_gh = r0 * tinv.transpose();
  r.r_hg = tinv * r0;
  return r;
}

Mat Classical2R::degree0_image() const { return r_gh * alg.t_lin.transpose(); }

Mat Classical2R::dt() const { return alg.t_lin * r_hg - r_gh * alg.t_lin.transpose(); }

Mat tensor_from_coeffs(const MatrixLieAlgebra& l, const Mat& c) {
  const int d = l.matrix_dim();
  Mat out = Mat::Zero(d * d, d * d);
  for (int i = 0; i < l.dim(); ++i)
    for (int j = 0; j < l.dim(); ++j)
      if (c(i, j) != cplx(0)) out += c(i, j) * kron(l.basis()[i], l.basis()[j]);
  return out;
}

Mat leg_swap(const Mat& m, int d) {
  const Mat p = swap_operator(d, d);
  return p * m * p;
}

double cybe_residual(const Mat& r, int d) {
  const std::vector<int> dims{d, d, d};
  const Mat r12 = embed_two_leg(r, dims, 0, 1);
  const Mat r13 = embed_two_leg(r, dims, 0, 2);
  const Mat r23 = embed_two_leg(r, dims, 1, 2);
  return frob(commutator(r12, r13) + commutator(r12, r23) + commutator(r13, r23));
}

double ybe_residual(const Mat& r, int d) {
  const std::vector<int> dims{d, d, d};
  const Mat r12 = embed_two_leg(r, dims, 0, 1);
  const Mat r13 = embed_two_leg(r, dims, 0, 2);
  const Mat r23 = embed_two_leg(r, dims, 1, 2);
  return frob(r12 * r13 * r23 - r23 * r13 * r12);
}

CheckReport check_2cybe(const Classical2R& r, double tol) {
  CheckReport out = make_report("2cybe");
  CheckReport dt = make_report("dt");
  dt.residual = frob(r.dt());
  dt.checked = 1;
  if (dt.residual > tol) dt.fail(fmt::format("|D_t r| = {:.3e}", dt.residual));
  CheckReport cy = make_report("cybe");
  const Mat r0 = tensor_from_coeffs(r.alg.g_alg, r.degree0_image());
  cy.residual = r.alg.dim_g() == 0 ? 0.0 : cybe_residual(r0, r.alg.g_alg.matrix_dim());
  cy.checked = 1;
  if (cy.residual > tol) cy.fail(fmt::format("|CYBE((1⊗t)r)| = {:.3e}", cy.residual));
  out.absorb(dt);
  out.absorb(cy);
  return out;
}

// ---------------------------------------------------------------------------

UqSl2::UqSl2(double q) : q_(q) {
  if (!(q > 0.0)) throw DomainError("U_q(sl2) needs q > 0");
  e_ = Mat::Zero(2, 2);
  f_ = Mat::Zero(2, 2);
  h_ = Mat::Zero(2, 2);
  e_(0, 1) = 1.0;
  f_(1, 0) = 1.0;
  h_(0, 0) = 1.0;
  h_(1, 1) = -1.0;
  k_ = q_power_h(1.0);
  kinv_ = q_power_h(-1.0);
}

double UqSl2::q_from_hbar(double hbar) { return std::exp(hbar / 2.0); }

Mat UqSl2::q_power_h(double s) const {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = std::pow(q_, s);
  m(1, 1) = std::pow(q_, -s);
  return m;
}

namespace {

// q^{D/2} for a diagonal matrix D.
Mat q_half_diag(double q, const Mat& d) {
  Mat out = Mat::Zero(d.rows(), d.cols());
  for (int i = 0; i < d.rows(); ++i) out(i, i) = std::pow(q, d(i, i).real() / 2.0);
  return out;
}

}  // namespace

Mat UqSl2::R() const {
  const Mat id = Mat::Identity(4, 4);
  return q_half_diag(q_, kron(h_, h_)) * (id + (q_ - 1.0 / q_) * kron(e_, f_));
}

Mat UqSl2::coproduct(char g) const {
  const Mat id = Mat::Identity(2, 2);
  switch (g) {
    case 'E': return kron(e_, k_) + kron(id, e_);
    case 'F': return kron(f_, id) + kron(kinv_, f_);
    case 'K': return kron(k_, k_);
    case 'H': return kron(h_, id) + kron(id, h_);
    default: throw DomainError(fmt::format("unknown U_q(sl2) generator '{}'", g));
  }
}

Mat UqSl2::antipode(char g) const {
  switch (g) {
    case 'E': return -e_ * kinv_;
    case 'F': return -k_ * f_;
    case 'K': return kinv_;
    case 'H': return -h_;
    default: throw DomainError(fmt::format("unknown U_q(sl2) generator '{}'", g));
  }
}

double UqSl2::ybe_residual() const { return twocs::ybe_residual(R(), 2); }

double UqSl2::intertwining_residual() const {
  const Mat r = R();
  const Mat p = swap_operator(2, 2);
  double res = 0;
  for (char g : {'E', 'F', 'K'}) {
    const Mat d = coproduct(g);
    res = std::max(res, frob(r * d - p * d * p * r));
  }
  return res;
}

double UqSl2::quasi1_residual() const {
  // F² = 0 on V, so the series of R truncates at the linear term.
  const Mat id8 = Mat::Identity(8, 8);
  const Mat lhs = q_half_diag(q_, kron(coproduct('H'), h_)) *
                  (id8 + (q_ - 1.0 / q_) * kron(coproduct('E'), f_));
  const std::vector<int> dims{2, 2, 2};
  const Mat r = R();
  return frob(lhs - embed_two_leg(r, dims, 0, 2) * embed_two_leg(r, dims, 1, 2));
}

double UqSl2::quasi2_residual() const {
  const Mat id8 = Mat::Identity(8, 8);
  const Mat lhs = q_half_diag(q_, kron(h_, coproduct('H'))) *
                  (id8 + (q_ - 1.0 / q_) * kron(e_, coproduct('F')));
  const std::vector<int> dims{2, 2, 2};
  const Mat r = R();
  return frob(lhs - embed_two_leg(r, dims, 0, 2) * embed_two_leg(r, dims, 0, 1));
}

std::vector<UqSl2::Component> UqSl2::components() const {
  return {{1, 0, 1.0}, {-1, 0, 1.0}, {1, 1, q_ - 1.0 / q_}, {-1, 1, q_ - 1.0 / q_}};
}

double UqSl2::antipode_residual() const {
  Mat proj_plus = Mat::Zero(2, 2), proj_minus = Mat::Zero(2, 2);
  proj_plus(0, 0) = 1.0;
  proj_minus(1, 1) = 1.0;
  const Mat id = Mat::Identity(2, 2);
  const Mat se = antipode('E');
  Mat sr = Mat::Zero(4, 4);
  for (const auto& c : components()) {
    // S is an anti-homomorphism: S(q^{σH/2} E^n) = S(E)^n q^{−σH/2}.
    const Mat first = (c.n == 0 ? id : se) * q_power_h(-0.5 * c.sigma);
    const Mat second = (c.sigma > 0 ? proj_plus : proj_minus) * (c.n == 0 ? id : f_);
    sr += c.coef * kron(first, second);
  }
  return frob(sr * R() - Mat::Identity(4, 4));
}

// ---------------------------------------------------------------------------

Mat Quantum2R::tau_identity(int d) { return Mat::Identity(d * d, d * d); }

Mat Quantum2R::tau_trivial(int dg) {
  Mat t = Mat::Zero(dg * dg, 1);
  for (int i = 0; i < dg; ++i) t(i * dg + i, 0) = 1.0;
  return t;
}

const Mat& Quantum2R::block(int a, int b) const {
  if (a == 0) return b == 0 ? R0 : Rl;
  return b == 0 ? Rr : Rhh;
}

namespace {

Mat pinv(const Mat& m) {
  Eigen::CompleteOrthogonalDecomposition<Mat> cod(m);
  return cod.pseudoInverse();
}

void check_tau(int dg, const Mat& tau, int dh) {
  if (tau.rows() != dg * dg || tau.cols() != dh * dh)
    throw DomainError(fmt::format("t* map must be {}x{}", dg * dg, dh * dh));
}

}  // namespace

Quantum2R bootstrap_quantum_2R(const Mat& R0, int dg, const Mat& tau, int dh, double tol) {
  check_tau(dg, tau, dh);
  if (R0.rows() != dg * dg || R0.cols() != dg * dg)
    throw DomainError("R0 does not act on V_G ⊗ V_G");
  const double ybe = ybe_residual(R0, dg);
  if (ybe > tol) throw DomainError(fmt::format("R0 fails the YBE: residual {:.3e}", ybe));
  Quantum2R q;
  q.dg = dg;
  q.dh = dh;
  q.tau = tau;
  q.sigma = pinv(tau);
  q.R0 = R0;
  q.Rl = apply_leg_map(R0, dg, dg, 1, q.sigma, dh);
  q.Rr = apply_leg_map(R0, dg, dg, 0, q.sigma, dh);
  q.Rhh = apply_leg_map(q.Rr, dh, dg, 1, q.sigma, dh);
  return q;
}

Quantum2R unit_quantum_2R(int dg, const Mat& tau, int dh) {
  check_tau(dg, tau, dh);
  Quantum2R q;
  q.dg = dg;
  q.dh = dh;
  q.tau = tau;
  q.sigma = pinv(tau);
  q.R0 = Mat::Identity(dg * dg, dg * dg);
  q.Rl = Mat::Identity(dg * dh, dg * dh);
  q.Rr = Mat::Identity(dg * dh, dg * dh);
  q.Rhh = Mat::Identity(dh * dh, dh * dh);
  return q;
}

Quantum2R uq_sl2_inn_2R(double q) {
  Quantum2R r = bootstrap_quantum_2R(UqSl2(q).R(), 2, Quantum2R::tau_identity(2), 2);
  r.uq_q = q;
  return r;
}

CheckReport check_equivariance(const Quantum2R& r, double tol) {
  CheckReport rep = make_report("equivariance");
  const Mat a = apply_leg_map(r.Rl, r.dg, r.dh, 1, r.tau, r.dg);
  const Mat b = apply_leg_map(r.Rr, r.dh, r.dg, 0, r.tau, r.dg);
  rep.residual = frob(a - b);
  rep.checked = 1;
  if (rep.residual > tol) rep.fail(fmt::format("|(1⊗t*)R^l − (t*⊗1)R^r| = {:.3e}", rep.residual));
  return rep;
}

CheckReport check_2ybe(const Quantum2R& r, double tol) {
  CheckReport out = make_report("2ybe");
  CheckReport yb = make_report("2yb");
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        const std::vector<int> dims{r.leg_dim(a), r.leg_dim(b), r.leg_dim(c)};
        const Mat r12 = embed_two_leg(r.block(a, b), dims, 0, 1);
        const Mat r13 = embed_two_leg(r.block(a, c), dims, 0, 2);
        const Mat r23 = embed_two_leg(r.block(b, c), dims, 1, 2);
        const double res = frob(r23 * r13 * r12 - r12 * r13 * r23);
        yb.residual = std::max(yb.residual, res);
        ++yb.checked;
        if (res > tol) yb.fail(fmt::format("degrees ({},{},{}): residual {:.3e}", a, b, c, res));
      }
  out.absorb(yb);
  if (r.uq_q) {
    const UqSl2 u(*r.uq_q);
    auto add = [&](const char* name, double res) {
      CheckReport c = make_report(name);
      c.residual = res;
      c.checked = 1;
      if (res > tol) c.fail(fmt::format("residual {:.3e}", res));
      out.absorb(c);
    };
    add("quasi1", u.quasi1_residual());
    add("quasi2", u.quasi2_residual());
    add("intertwining", u.intertwining_residual());
    add("leftadj", u.antipode_residual());
  }
  return out;
}

// ---------------------------------------------------------------------------

LadderReport semiclassical_limit_check(const std::function<Mat(double)>& family, const Mat& r,
                                       int levels, double h0) {
  LadderReport out;
  out.report = make_report("semiclassical");
  for (int j = 0; j < levels; ++j) {
    const double h = h0 / std::pow(2.0, j);
    const Mat rh = family(h);
    if (rh.rows() != r.rows() || rh.cols() != r.cols())
      throw DomainError("semiclassical family and r have different shapes");
    const double e = frob((rh - Mat::Identity(r.rows(), r.cols())) / h - r);
    if (!std::isfinite(e)) throw DomainError(fmt::format("ladder diverged at hbar = {}", h));
    out.hbar.push_back(h);
    out.error.push_back(e);
  }
  for (std::size_t j = 0; j + 1 < out.error.size(); ++j) {
    const double ratio = out.error[j] > 0 ? out.error[j + 1] / out.error[j] : 0.0;
    out.ratio.push_back(ratio);
    ++out.report.checked;
    if (ratio < 0.4 || ratio > 0.6)
      out.report.fail(fmt::format("e({:.3e})/e({:.3e}) = {:.4f}", out.hbar[j + 1], out.hbar[j], ratio));
  }
  out.plateau = !out.ratio.empty() && out.ratio.back() > 0.9;
  if (out.plateau)
    out.report.fail(fmt::format("plateau at e = {:.4e}", out.error.back()));
  out.report.residual = out.error.empty() ? 0.0 : out.error.back();
  return out;
}

Mat uq_sl2_family(double hbar) { return UqSl2(UqSl2::q_from_hbar(hbar)).R(); }

Mat exp_family(const Mat& r, double hbar) {
  const Mat a = hbar * r;
  return a.exp();
}

}  // namespace twocs
