#pragma once

#include <string>
#include <vector>

#include "twocs/lie_algebra.hpp"
#include "twocs/report.hpp"

namespace twocs {

// Strict Lie 2-algebra (𝔤, 𝔥, t, ▷) with a pairing on 𝔤 ⊕ 𝔥.
// Coordinates: t_lin is dim𝔤 × dim𝔥; act_lin[i] is the matrix of g_i ▷ -
// on 𝔥; pairing is indexed [𝔤 basis..., 𝔥 basis...].
struct Lie2Algebra {
  std::string name;
  MatrixLieAlgebra g_alg;
  MatrixLieAlgebra h_alg;
  Mat t_lin;
  std::vector<Mat> act_lin;
  Mat pairing;

  static Lie2Algebra inn_sl2();
  // 𝔥 = V (abelian) with t = 0 and 𝔤 = sl2 acting by the fundamental representation.
  static Lie2Algebra sl2_zero_v();

  int dim_g() const { return g_alg.dim(); }
  int dim_h() const { return h_alg.dim(); }
  Vec act(const Vec& x, const Vec& y) const;
};

double peiffer1_residual(const Lie2Algebra& l);
double peiffer2_residual(const Lie2Algebra& l);
// Infinitesimal Peiffer identities, action axioms and pairing conditions.
CheckReport check_lie2_algebra(const Lie2Algebra& l, double tol = 1e-12);

}  // namespace twocs
