#include "twocs/lie2_algebra.hpp"

#include <fmt/format.h>

#include "twocs/errors.hpp"

namespace twocs {

Vec Lie2Algebra::act(const Vec& x, const Vec& y) const {
  Vec out = Vec::Zero(dim_h());
  for (int i = 0; i < dim_g(); ++i) out += x(i) * (act_lin[i] * y);
  return out;
}

Lie2Algebra Lie2Algebra::inn_sl2() {
  Lie2Algebra l;
  l.name = "inn_sl2";
  l.g_alg = MatrixLieAlgebra::sl2();
  l.h_alg = MatrixLieAlgebra::sl2();
  const int n = 3;
  l.t_lin = Mat::Identity(n, n);
  for (int i = 0; i < n; ++i) l.act_lin.push_back(l.g_alg.ad(l.g_alg.unit(i)));
  l.pairing = Mat::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const cplx v = (l.g_alg.basis()[i] * l.h_alg.basis()[j]).trace();
      l.pairing(i, n + j) = v;
      l.pairing(n + j, i) = v;
    }
  return l;
}

Lie2Algebra Lie2Algebra::sl2_zero_v() {
  Lie2Algebra l;
  l.name = "sl2_zero_v";
  l.g_alg = MatrixLieAlgebra::sl2();
  l.h_alg = MatrixLieAlgebra::abelian(2);
  l.t_lin = Mat::Zero(3, 2);
  // sl2 acting on V = C^2 in the fundamental representation.
  for (int i = 0; i < 3; ++i) l.act_lin.push_back(l.g_alg.basis()[i]);
  // No invariant pairing between sl2 and V exists; keep the degenerate zero form.
  l.pairing = Mat::Zero(5, 5);
  return l;
}

double peiffer1_residual(const Lie2Algebra& l) {
  double r = 0;
  for (int i = 0; i < l.dim_g(); ++i)
    for (int j = 0; j < l.dim_h(); ++j) {
      const Vec x = l.g_alg.unit(i), y = l.h_alg.unit(j);
      r = std::max(r, (l.t_lin * l.act(x, y) - l.g_alg.bracket(x, l.t_lin * y)).norm());
    }
  return r;
}

double peiffer2_residual(const Lie2Algebra& l) {
  double r = 0;
  for (int i = 0; i < l.dim_h(); ++i)
    for (int j = 0; j < l.dim_h(); ++j) {
      const Vec y = l.h_alg.unit(i), y2 = l.h_alg.unit(j);
      r = std::max(r, (l.act(l.t_lin * y, y2) - l.h_alg.bracket(y, y2)).norm());
    }
  return r;
}

CheckReport check_lie2_algebra(const Lie2Algebra& l, double tol) {
  CheckReport rep = make_report("lie2_algebra:" + l.name);
  const int dg = l.dim_g(), dh = l.dim_h();
  if (l.t_lin.rows() != dg || l.t_lin.cols() != dh || static_cast<int>(l.act_lin.size()) != dg ||
      l.pairing.rows() != dg + dh || l.pairing.cols() != dg + dh)
    throw SchemaError("Lie 2-algebra '" + l.name + "': inconsistent block shapes");
  auto note = [&](const std::string& what, double r) {
    rep.residual = std::max(rep.residual, r);
    ++rep.checked;
    if (r > tol) rep.fail(fmt::format("{} residual {:.3e}", what, r));
  };
  note("Peiffer 1", peiffer1_residual(l));
  note("Peiffer 2", peiffer2_residual(l));
  // ▷ is a Lie algebra action by derivations.
  double act_hom = 0, deriv = 0;
  for (int i = 0; i < dg; ++i)
    for (int j = 0; j < dg; ++j) {
      const Vec xi = l.g_alg.unit(i), xj = l.g_alg.unit(j);
      Mat lhs = Mat::Zero(dh, dh);
      const Vec br = l.g_alg.bracket(xi, xj);
      for (int k = 0; k < dg; ++k) lhs += br(k) * l.act_lin[k];
      act_hom = std::max(act_hom, frob(lhs - commutator(l.act_lin[i], l.act_lin[j])));
    }
  for (int i = 0; i < dg; ++i)
    for (int a = 0; a < dh; ++a)
      for (int b = 0; b < dh; ++b) {
        const Vec x = l.g_alg.unit(i), y = l.h_alg.unit(a), y2 = l.h_alg.unit(b);
        const Vec lhs = l.act(x, l.h_alg.bracket(y, y2));
        const Vec rhs = l.h_alg.bracket(l.act(x, y), y2) + l.h_alg.bracket(y, l.act(x, y2));
        deriv = std::max(deriv, (lhs - rhs).norm());
      }
  note("action homomorphism", act_hom);
  note("action by derivations", deriv);
  // Pairing: supported on the mixed blocks, symmetric, invariant, non-degenerate.
  const double pure = frob(l.pairing.topLeftCorner(dg, dg)) + frob(l.pairing.bottomRightCorner(dh, dh));
  note("pure-degree pairing blocks", pure);
  note("pairing symmetry", frob(l.pairing - l.pairing.transpose()));
  double inv = 0;
  const Mat P = l.pairing.topRightCorner(dg, dh);
  for (int z = 0; z < dg; ++z)
    for (int x = 0; x < dg; ++x)
      for (int y = 0; y < dh; ++y) {
        const Vec zx = l.g_alg.bracket(l.g_alg.unit(z), l.g_alg.unit(x));
        const Vec zy = l.act(l.g_alg.unit(z), l.h_alg.unit(y));
        const cplx s = (zx.transpose() * P.col(y))(0) + (P.row(x) * zy)(0);
        inv = std::max(inv, std::abs(s));
      }
  note("pairing invariance", inv);
  Eigen::FullPivLU<Mat> lu(l.pairing);
  if (dg + dh > 0 && lu.rank() != dg + dh) {
    ++rep.checked;
    rep.fail(fmt::format("pairing is degenerate (rank {} of {})", lu.rank(), dg + dh));
  }
  return rep;
}

}  // namespace twocs
