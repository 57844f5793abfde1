#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "twocs/lie2_algebra.hpp"
#include "twocs/report.hpp"

namespace twocs {

// Couplings. ħ = 2π/k; k′ is the formal vertical coupling and defaults to k.
struct DeformationParams {
  double k = 100.0;
  std::optional<double> k_prime;

  double hbar() const;
  double hbar_vertical() const;
  // Throws DomainError for k = 0 or k′ off by more than a factor 10 from k.
  void validate() const;
};

// Degree-1 classical r-matrix on a Lie 2-algebra, stored as coefficient
// blocks r_gh (dim𝔤 × dim𝔥) for 𝔤⊗𝔥 and r_hg (dim𝔥 × dim𝔤) for 𝔥⊗𝔤.
struct Classical2R {
  Lie2Algebra alg;
  Mat r_gh;
  Mat r_hg;

  static Classical2R zero(const Lie2Algebra& l);
  // Lift of r₀ = e⊗f + h⊗h/4 to inn(sl₂): both blocks carry r₀.
  static Classical2R standard_inn_sl2();
  // Lift of an arbitrary 𝔤⊗𝔤 coefficient matrix along t = id.
  static Classical2R inn_lift(const Lie2Algebra& l, const Mat& r0);

  // (1⊗t)r as a dim𝔤 × dim𝔤 coefficient matrix.
  Mat degree0_image() const;
  // (t⊗1 − 1⊗t)r as a dim𝔤 × dim𝔤 coefficient matrix.
  Mat dt() const;
};

// Σ c_ij B_i ⊗ B_j for a coefficient matrix c over a matrix Lie algebra basis.
Mat tensor_from_coeffs(const MatrixLieAlgebra& l, const Mat& c);
Mat standard_sl2_r0_coeffs();
Mat leg_swap(const Mat& m, int d);  // P m P on C^d ⊗ C^d
double cybe_residual(const Mat& r, int d);
double ybe_residual(const Mat& r, int d);

// Residuals named "dt" and "cybe" absorbed into one report.
CheckReport check_2cybe(const Classical2R& r, double tol = 1e-12);

// U_q(sl₂) in the fundamental representation with K = q^H,
// Δ(E) = E⊗K + 1⊗E, Δ(F) = F⊗1 + K⁻¹⊗F, S(E) = −EK⁻¹, S(F) = −KF,
// and R = q^{H⊗H/2}(1 + (q − q⁻¹) E⊗F). With q = e^{ħ/2},
// R = 1 + ħ r₀ + O(ħ²).
class UqSl2 {
 public:
  explicit UqSl2(double q);

  double q() const { return q_; }
  const Mat& E() const { return e_; }
  const Mat& F() const { return f_; }
  const Mat& H() const { return h_; }
  const Mat& K() const { return k_; }

  Mat R() const;
  Mat coproduct(char generator) const;  // 'E', 'F', 'K' or 'H' on V⊗V
  Mat antipode(char generator) const;

  double ybe_residual() const;
  // max over E, F, K of ‖R Δ(x) − Δᵒᵖ(x) R‖.
  double intertwining_residual() const;
  // (Δ⊗1)R = R₁₃R₂₃ and (1⊗Δ)R = R₁₃R₁₂ on V⊗V⊗V.
  double quasi1_residual() const;
  double quasi2_residual() const;
  // ‖((S⊗1)R)·R − 1‖.
  double antipode_residual() const;

  static double q_from_hbar(double hbar);

 private:
  double q_;
  Mat e_, f_, h_, k_, kinv_;
  // Components q^{σH/2} E^n ⊗ P_σ F^n of R, with coefficients.
  struct Component {
    int sigma;
    int n;
    double coef;
  };
  std::vector<Component> components() const;
  Mat q_power_h(double s) const;  // q^{sH}
};

// Degree-1 quantum R-matrix in represented form. tau is the represented t*
// as a map End(V_H) → End(V_G) on column-major vec, sigma its pseudo-inverse.
struct Quantum2R {
  int dg = 0;
  int dh = 0;
  Mat tau;
  Mat sigma;
  Mat R0;   // V_G ⊗ V_G
  Mat Rl;   // V_G ⊗ V_H
  Mat Rr;   // V_H ⊗ V_G
  Mat Rhh;  // V_H ⊗ V_H
  std::optional<double> uq_q;  // set when R0 comes from U_q(sl₂)

  static Mat tau_identity(int d);
  // t = 0: V_H = C and t*(x) = x·1.
  static Mat tau_trivial(int dg);
  // Block on legs of degrees (a, b), 0 = G and 1 = H.
  const Mat& block(int a, int b) const;
  int leg_dim(int degree) const { return degree == 0 ? dg : dh; }
};

// Builds R^l = (1⊗σ)R₀, R^r = (σ⊗1)R₀, R^{hh} = (σ⊗σ)R₀ and checks
// (1⊗τ)R^l = (τ⊗1)R^r. Throws DomainError carrying the YBE residual when R₀
// fails the ordinary YBE.
Quantum2R bootstrap_quantum_2R(const Mat& R0, int dg, const Mat& tau, int dh,
                               double tol = 1e-10);
Quantum2R unit_quantum_2R(int dg, const Mat& tau, int dh);
Quantum2R uq_sl2_inn_2R(double q);

// (1⊗τ)R^l − (τ⊗1)R^r.
CheckReport check_equivariance(const Quantum2R& r, double tol = 1e-10);
// Graded YBE over all eight degree patterns, plus quasitriangularity,
// intertwining and the antipode contraction when uq_q is set.
CheckReport check_2ybe(const Quantum2R& r, double tol = 1e-10);

struct LadderReport {
  std::vector<double> hbar;
  std::vector<double> error;
  std::vector<double> ratio;  // error[j+1] / error[j]
  bool plateau = false;
  CheckReport report;
};

// e(ħ) = ‖(R(ħ) − 1)/ħ − r‖ on ħ = h0·2^{−j}; passes when every ratio lies
// in [0.4, 0.6]. A final ratio above 0.9 is flagged as a plateau.
LadderReport semiclassical_limit_check(const std::function<Mat(double)>& family, const Mat& r,
                                       int levels = 7, double h0 = 0.1);
Mat uq_sl2_family(double hbar);
Mat exp_family(const Mat& r, double hbar);

}  // namespace twocs
