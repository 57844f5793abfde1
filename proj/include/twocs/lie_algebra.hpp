#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "twocs/finite_group.hpp"
#include "twocs/report.hpp"

namespace twocs {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Tensor legs: the leftmost factor is the most significant index, so
// (A⊗B)[(i,k),(j,l)] = A[i,j] B[k,l] with row index i*dim(B)+k.
Mat kron(const Mat& a, const Mat& b);
Vec kron(const Vec& a, const Vec& b);
Vec tensor_apply(const Mat& m, const Vec& v);
Mat swap_operator(int d1, int d2);
// Embeds a two-leg operator M on legs (i, j) of a multi-leg space with
// dimensions dims. Handles i > j (legs of M are then taken in order (i, j)).
Mat embed_two_leg(const Mat& m, const std::vector<int>& dims, int i, int j);
Mat embed_one_leg(const Mat& m, const std::vector<int>& dims, int i);
// Applies a linear map to one leg of a two-leg operator. The map acts on
// column-major vec(X) of a leg-sized matrix X.
Mat apply_leg_map(const Mat& m, int d1, int d2, int leg, const Mat& map, int out_dim);
Mat commutator(const Mat& a, const Mat& b);
double frob(const Mat& m);

// A Lie algebra given by a basis of d×d complex matrices closed under the
// commutator. Structure constants c[k](i,j) satisfy [B_i,B_j] = Σ_k c_ij^k B_k.
class MatrixLieAlgebra {
 public:
  MatrixLieAlgebra() = default;
  MatrixLieAlgebra(std::string name, std::vector<Mat> basis);

  static MatrixLieAlgebra sl2();
  static MatrixLieAlgebra abelian(int dim, int matrix_dim = 1);
  static MatrixLieAlgebra zero(int matrix_dim = 1) { return abelian(0, matrix_dim); }

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int matrix_dim() const { return mdim_; }
  const std::vector<Mat>& basis() const { return basis_; }
  cplx structure_constant(int i, int j, int k) const { return sc_[(i * dim() + j) * dim() + k]; }

  Vec bracket(const Vec& a, const Vec& b) const;
  Mat to_matrix(const Vec& coords) const;
  // Least-squares coordinates; throws DomainError if the matrix is outside
  // the span by more than 1e-9.
  Vec to_coords(const Mat& m) const;
  Vec unit(int i) const;
  // Matrix of ad(x) acting on coordinates.
  Mat ad(const Vec& x) const;

  double antisymmetry_residual() const;
  double jacobi_residual() const;
  // Bracket via structure constants against the matrix commutator on all basis pairs.
  double commutator_residual() const;

 private:
  std::string name_;
  std::vector<Mat> basis_;
  int mdim_ = 0;
  std::vector<cplx> sc_;
  Mat gram_pinv_;  // maps flattened matrices to coordinates
  Mat flat_basis_;
};

Vec lie_bracket(const Vec& a, const Vec& b, const MatrixLieAlgebra& l);
CheckReport check_lie_algebra(const MatrixLieAlgebra& l, double tol = 1e-12);

// Matrices of a finite group or of a Lie algebra basis.
struct Representation {
  std::string name;
  int dim = 0;
  std::vector<Mat> matrices;
};

CheckReport check_representation(const FiniteGroup& g, const Representation& rho,
                                 double tol = 1e-10);
CheckReport check_representation(const MatrixLieAlgebra& l, const Representation& rho,
                                 double tol = 1e-10);

}  // namespace twocs
