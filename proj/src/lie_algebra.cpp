#include "twocs/lie_algebra.hpp"

#include <fmt/format.h>

#include "twocs/errors.hpp"

namespace twocs {

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vec kron(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Vec tensor_apply(const Mat& m, const Vec& v) {
  if (m.rows() != m.cols() || m.cols() != v.size())
    throw DomainError(fmt::format("tensor_apply: {}x{} operator on vector of length {}", m.rows(),
                                  m.cols(), v.size()));
  return m * v;
}

Mat swap_operator(int d1, int d2) {
  Mat p = Mat::Zero(d1 * d2, d1 * d2);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j) p(j * d1 + i, i * d2 + j) = 1.0;
  return p;
}

namespace {

std::vector<int> digits(int index, const std::vector<int>& dims) {
  std::vector<int> d(dims.size());
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    d[k] = index % dims[k];
    index /= dims[k];
  }
  return d;
}

int total(const std::vector<int>& dims) {
  int n = 1;
  for (int d : dims) n *= d;
  return n;
}

}  // namespace

Mat embed_two_leg(const Mat& m, const std::vector<int>& dims, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= static_cast<int>(dims.size()) ||
      j >= static_cast<int>(dims.size()))
    throw DomainError("embed_two_leg: bad leg indices");
  const int di = dims[i], dj = dims[j];
  if (m.rows() != di * dj || m.cols() != di * dj)
    throw DomainError("embed_two_leg: operator does not match leg dimensions");
  const int n = total(dims);
  Mat out = Mat::Zero(n, n);
  for (int r = 0; r < n; ++r) {
    const auto rd = digits(r, dims);
    for (int c = 0; c < n; ++c) {
      const auto cd = digits(c, dims);
      bool spectators_match = true;
      for (std::size_t k = 0; k < dims.size() && spectators_match; ++k)
        if (static_cast<int>(k) != i && static_cast<int>(k) != j) spectators_match = rd[k] == cd[k];
      if (!spectators_match) continue;
      out(r, c) = m(rd[i] * dj + rd[j], cd[i] * dj + cd[j]);
    }
  }
  return out;
}

Mat embed_one_leg(const Mat& m, const std::vector<int>& dims, int i) {
  Mat out = Mat::Identity(1, 1);
  for (std::size_t k = 0; k < dims.size(); ++k)
    out = kron(out, static_cast<int>(k) == i ? m : Mat(Mat::Identity(dims[k], dims[k])));
  return out;
}

Mat apply_leg_map(const Mat& m, int d1, int d2, int leg, const Mat& map, int out_dim) {
  if (m.rows() != d1 * d2 || m.cols() != d1 * d2)
    throw DomainError("apply_leg_map: operator does not match leg dimensions");
  const int din = leg == 0 ? d1 : d2;
  if (map.cols() != din * din || map.rows() != out_dim * out_dim)
    throw DomainError("apply_leg_map: leg map has wrong shape");
  const int e1 = leg == 0 ? out_dim : d1;
  const int e2 = leg == 0 ? d2 : out_dim;
  Mat out = Mat::Zero(e1 * e2, e1 * e2);
  const int other = leg == 0 ? d2 : d1;
  // For each spectator index pair (a,b), the leg block is mapped linearly.
  for (int a = 0; a < other; ++a)
    for (int b = 0; b < other; ++b) {
      Vec block(din * din);
      for (int x = 0; x < din; ++x)
        for (int y = 0; y < din; ++y) {
          const int r = leg == 0 ? x * d2 + a : a * d2 + x;
          const int c = leg == 0 ? y * d2 + b : b * d2 + y;
          block(y * din + x) = m(r, c);
        }
      Vec img = map * block;
      for (int x = 0; x < out_dim; ++x)
        for (int y = 0; y < out_dim; ++y) {
          const int r = leg == 0 ? x * e2 + a : a * e2 + x;
          const int c = leg == 0 ? y * e2 + b : b * e2 + y;
          out(r, c) = img(y * out_dim + x);
        }
    }
  return out;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

double frob(const Mat& m) { return m.size() == 0 ? 0.0 : m.norm(); }

MatrixLieAlgebra::MatrixLieAlgebra(std::string name, std::vector<Mat> basis)
    : name_(std::move(name)), basis_(std::move(basis)) {
  mdim_ = basis_.empty() ? 1 : static_cast<int>(basis_.front().rows());
  for (const auto& b : basis_)
    if (b.rows() != mdim_ || b.cols() != mdim_)
      throw SchemaError(fmt::format("Lie algebra '{}': basis matrices of mixed size", name_));
  const int n = dim();
  flat_basis_ = Mat::Zero(mdim_ * mdim_, n);
  for (int i = 0; i < n; ++i)
    flat_basis_.col(i) = Eigen::Map<const Vec>(basis_[i].data(), mdim_ * mdim_);
  if (n > 0) {
    Eigen::CompleteOrthogonalDecomposition<Mat> cod(flat_basis_);
    if (cod.rank() != n)
      throw SchemaError(fmt::format("Lie algebra '{}': basis is linearly dependent", name_));
    gram_pinv_ = cod.pseudoInverse();
  }
  sc_.assign(static_cast<std::size_t>(n) * n * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec c = to_coords(commutator(basis_[i], basis_[j]));
      for (int k = 0; k < n; ++k) sc_[(i * n + j) * n + k] = c(k);
    }
}

MatrixLieAlgebra MatrixLieAlgebra::sl2() {
  Mat e = Mat::Zero(2, 2), f = Mat::Zero(2, 2), h = Mat::Zero(2, 2);
  e(0, 1) = 1.0;
  f(1, 0) = 1.0;
  h(0, 0) = 1.0;
  h(1, 1) = -1.0;
  return MatrixLieAlgebra("sl2", {e, f, h});
}

MatrixLieAlgebra MatrixLieAlgebra::abelian(int dim, int matrix_dim) {
  // Diagonal matrix units commute; needs matrix_dim >= dim.
  if (dim > matrix_dim) matrix_dim = dim;
  std::vector<Mat> basis;
  for (int i = 0; i < dim; ++i) {
    Mat m = Mat::Zero(matrix_dim, matrix_dim);
    m(i, i) = 1.0;
    basis.push_back(m);
  }
  MatrixLieAlgebra l(fmt::format("u1^{}", dim), basis);
  l.mdim_ = matrix_dim;
  return l;
}

Vec MatrixLieAlgebra::unit(int i) const {
  Vec v = Vec::Zero(dim());
  v(i) = 1.0;
  return v;
}

Vec MatrixLieAlgebra::bracket(const Vec& a, const Vec& b) const {
  const int n = dim();
  if (a.size() != n || b.size() != n)
    throw DomainError(fmt::format("lie_bracket: coordinate vectors must have length {}", n));
  Vec out = Vec::Zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const cplx w = a(i) * b(j);
      if (w == cplx(0)) continue;
      for (int k = 0; k < n; ++k) out(k) += w * structure_constant(i, j, k);
    }
  return out;
}

Mat MatrixLieAlgebra::to_matrix(const Vec& coords) const {
  if (coords.size() != dim()) throw DomainError("to_matrix: coordinate length mismatch");
  Mat m = Mat::Zero(mdim_, mdim_);
  for (int i = 0; i < dim(); ++i) m += coords(i) * basis_[i];
  return m;
}

Vec MatrixLieAlgebra::to_coords(const Mat& m) const {
  if (dim() == 0) return Vec::Zero(0);
  if (m.rows() != mdim_ || m.cols() != mdim_) throw DomainError("to_coords: matrix size mismatch");
  Vec flat = Eigen::Map<const Vec>(m.data(), mdim_ * mdim_);
  Vec c = gram_pinv_ * flat;
  if ((flat_basis_ * c - flat).norm() > 1e-9)
    throw DomainError(fmt::format("Lie algebra '{}' is not closed under the given matrix", name_));
  return c;
}

Mat MatrixLieAlgebra::ad(const Vec& x) const {
  Mat m(dim(), dim());
  for (int j = 0; j < dim(); ++j) m.col(j) = bracket(x, unit(j));
  return m;
}

double MatrixLieAlgebra::antisymmetry_residual() const {
  double r = 0;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      for (int k = 0; k < dim(); ++k)
        r = std::max(r, std::abs(structure_constant(i, j, k) + structure_constant(j, i, k)));
  return r;
}

double MatrixLieAlgebra::jacobi_residual() const {
  double r = 0;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      for (int k = 0; k < dim(); ++k) {
        Vec a = unit(i), b = unit(j), c = unit(k);
        Vec s = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
        r = std::max(r, s.norm());
      }
  return r;
}

double MatrixLieAlgebra::commutator_residual() const {
  double r = 0;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      r = std::max(r, frob(to_matrix(bracket(unit(i), unit(j))) -
                           commutator(basis_[i], basis_[j])));
  return r;
}

Vec lie_bracket(const Vec& a, const Vec& b, const MatrixLieAlgebra& l) { return l.bracket(a, b); }

CheckReport check_lie_algebra(const MatrixLieAlgebra& l, double tol) {
  CheckReport rep = make_report("lie_algebra:" + l.name());
  const double a = l.antisymmetry_residual(), j = l.jacobi_residual(), c = l.commutator_residual();
  rep.residual = std::max({a, j, c});
  rep.checked = static_cast<long long>(l.dim()) * l.dim() * l.dim();
  if (a > tol) rep.fail(fmt::format("antisymmetry residual {:.3e}", a));
  if (j > tol) rep.fail(fmt::format("Jacobi residual {:.3e}", j));
  if (c > tol) rep.fail(fmt::format("commutator residual {:.3e}", c));
  return rep;
}

CheckReport check_representation(const FiniteGroup& g, const Representation& rho, double tol) {
  CheckReport rep = make_report("group_rep:" + rho.name);
  if (static_cast<int>(rho.matrices.size()) != g.order()) {
    rep.fail("one matrix per element required");
    return rep;
  }
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      const double r = frob(rho.matrices[g.mul(a, b)] - rho.matrices[a] * rho.matrices[b]);
      rep.residual = std::max(rep.residual, r);
      ++rep.checked;
      if (r > tol) rep.fail(fmt::format("rho({}*{}) residual {:.3e}", a, b, r));
    }
  return rep;
}

CheckReport check_representation(const MatrixLieAlgebra& l, const Representation& rho,
                                 double tol) {
  CheckReport rep = make_report("lie_rep:" + rho.name);
  if (static_cast<int>(rho.matrices.size()) != l.dim()) {
    rep.fail("one matrix per basis element required");
    return rep;
  }
  for (int i = 0; i < l.dim(); ++i)
    for (int j = 0; j < l.dim(); ++j) {
      Mat lhs = Mat::Zero(rho.dim, rho.dim);
      for (int k = 0; k < l.dim(); ++k) lhs += l.structure_constant(i, j, k) * rho.matrices[k];
      const double r = frob(lhs - commutator(rho.matrices[i], rho.matrices[j]));
      rep.residual = std::max(rep.residual, r);
      ++rep.checked;
      if (r > tol) rep.fail(fmt::format("rho([{},{}]) residual {:.3e}", i, j, r));
    }
  return rep;
}

}  // namespace twocs
