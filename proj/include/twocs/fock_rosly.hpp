#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twocs/lie2_algebra.hpp"
#include "twocs/report.hpp"
#include "twocs/rmatrix.hpp"
#include "twocs/two_complex.hpp"

namespace twocs {

// Polynomials in matrix-variable entries: sums of products of traces
// tr(c₀ X₁ c₁ X₂ ⋯ Xₙ cₙ).
struct MatWord {
  std::vector<Mat> consts;  // vars.size() + 1 entries
  std::vector<int> vars;
};

struct TraceMonomial {
  cplx coef{1.0, 0.0};
  std::vector<MatWord> traces;
};

using TracePoly = std::vector<TraceMonomial>;

// D(X_var) += coef · word.
struct FieldTerm {
  int var = 0;
  cplx coef{1.0, 0.0};
  MatWord word;
};

struct VectorField {
  std::vector<FieldTerm> terms;
};

// Constant-coefficient bivector: {f,g} = Σ P_uw D_u f · D_w g.
struct Bivector {
  std::vector<VectorField> fields;
  Mat P;
};

// Matrix variables with paired inverses. Derivations given on a base
// variable extend to its inverse by D(X⁻¹) = −X⁻¹ D(X) X⁻¹.
class PolyAlgebra {
 public:
  int add_variable(std::string name, const Mat& value);
  int inverse(int v) const { return inverse_[v]; }
  int num_variables() const { return static_cast<int>(values_.size()); }
  const std::string& name(int v) const { return names_[v]; }
  const Mat& value(int v) const { return values_[v]; }
  void set_value(int v, const Mat& m);

  // Entry (a, b) of the product of `chain` (d × d matrices).
  TracePoly entry(const std::vector<int>& chain, int a, int b, int d) const;

  cplx eval(const TracePoly& p) const;
  TracePoly derive(const VectorField& d, const TracePoly& p) const;
  Vec gradient(const Bivector& b, const TracePoly& f) const;
  cplx bracket(const Bivector& b, const TracePoly& f, const TracePoly& g) const;
  TracePoly bracket_poly(const Bivector& b, const TracePoly& f, const TracePoly& g) const;
  // {f,{g,h}} + {g,{h,f}} + {h,{f,g}}.
  cplx jacobiator(const Bivector& b, const TracePoly& f, const TracePoly& g,
                  const TracePoly& h) const;

 private:
  std::vector<std::string> names_;
  std::vector<Mat> values_;
  std::vector<int> inverse_;
  std::vector<int> base_;  // base variable, or -1 for a base
  std::vector<FieldTerm> expand(const VectorField& d) const;
};

enum class EndSide { kSource, kTarget };

// End of an edge at a vertex. Edge ids ≥ |Γ¹| are the virtual boundary edges
// of faces (id |Γ¹| + f), running parallel to the root.
struct VertexEnd {
  int vertex = 0;
  int edge = 0;
  EndSide side = EndSide::kSource;
};

// Relative position of one end of e and one end of e′ at a common vertex:
// order +1 if e's end comes first, −1 if second, 0 for the same end.
struct EndContact {
  EndSide first = EndSide::kSource;
  EndSide second = EndSide::kSource;
  int order = 1;
};

// Ends sorted per vertex by (edge id, source before target).
std::vector<VertexEnd> vertex_ends(const TwoComplex& c, bool with_virtual);
std::vector<EndContact> end_contacts(const TwoComplex& c, int e, int e2, bool with_virtual);

// Σ over contacts of the vertex-local bilinear form, with coefficient
// matrices m_plus (order +1), m_minus (−1) and m_self (0):
//   source/source  M (T⊗T′)        target/target  (T⊗T′) M
//   source/target −(1⊗T′) M (T⊗1)   target/source −(T⊗1) M (1⊗T′)
Mat contact_form(const Mat& t, const Mat& t2, const std::vector<EndContact>& contacts,
                 const Mat& m_plus, const Mat& m_minus, const Mat& m_self);
// κ·(contact_form with r, −r₂₁, (r − r₂₁)/2): the 1-group lattice bracket
// {T ⊗, T′} with entries [(a,c),(b,d)] = {T_ab, T′_cd}.
Mat heis_bracket(const Mat& t, const Mat& t2, const std::vector<EndContact>& contacts,
                 const Mat& r, double kappa);
// Represented ⋆-commutator: contact_form with R − 1, R₂₁ − 1, (R − R₂₁)/2.
// Throws DomainError when the edges share no vertex.
Mat star_commutator(const Mat& t, const Mat& t2, const std::vector<EndContact>& contacts,
                    const Mat& R);

// Combinatorial Fock–Rosly brackets on a 2-complex for a matrix Lie 2-algebra.
//
// Variables: T_e = ρ(h_e) per edge and, when t ≠ 0, B_f = ρ(t(b_f)) per face.
// Horizontal fields are vertex-end derivations. The face boundary h_e t(b_f)
// is carried by a virtual edge parallel to the root, so the root's target
// end and the virtual ends also act on B_f. Vertical fields are face-end
// derivations on B_f over the face graph whose objects are the source and
// target paths of faces.
class FockRoslyModel {
 public:
  // r0: degree-0 image of r_h (dim𝔤 × dim𝔤); rv: dim𝔥 × dim𝔥.
  FockRoslyModel(const TwoComplex& c, const Lie2Algebra& l, const Mat& r0, const Mat& rv,
                 const DeformationParams& params, std::uint64_t seed = 11);

  const TwoComplex& lattice() const { return lattice_; }
  const Lie2Algebra& lie2() const { return alg_; }
  double kappa() const { return kappa_; }
  const PolyAlgebra& algebra() const { return algebra_; }
  const Bivector& horizontal() const { return horizontal_; }
  const Bivector& vertical() const { return vertical_; }
  int rep_dim() const { return d_; }
  bool has_face_labels() const { return has_faces_; }
  int edge_var(int e) const { return edge_var_[e]; }
  int face_var(int f) const { return has_faces_ ? face_var_[f] : -1; }

  void randomize(std::uint64_t seed);

  // ξ_f = ρ(h_root) ⊕ ρ(h_root t(b_f)), a 2d × 2d block matrix of polynomials
  // (zero off the diagonal blocks).
  std::vector<std::vector<TracePoly>> state(int f) const;
  Mat state_value(int f) const;
  // Entries of ρ(t(b_f)); identity when t = 0.
  TracePoly face_label_entry(int f, int a, int b) const;
  // Nonzero matrix-element functions of ξ_f.
  std::vector<TracePoly> state_functions(int f) const;
  std::vector<TracePoly> face_label_functions(int f) const;

  // [(a,c),(b,d)] = {ξ_ab, ξ′_cd}.
  Mat bracket_matrix(int f, int f2, bool vertical = false) const;
  Mat edge_bracket_matrix(int e, int e2) const;

 private:
  TwoComplex lattice_;
  Lie2Algebra alg_;
  int d_ = 0;
  double kappa_ = 0.0;
  bool has_faces_ = false;
  PolyAlgebra algebra_;
  std::vector<int> edge_var_;
  std::vector<int> face_var_;
  Bivector horizontal_;
  Bivector vertical_;
  void check_face(int f) const;
};

// Antisymmetric slot matrix: κ r at ordered pairs, −κ r₂₁ reversed, κ r_a on
// the diagonal blocks. `groups[i]` is the vertex (or object) of end i and
// ends are assumed listed in their order.
Mat fock_rosly_slot_matrix(const std::vector<int>& groups, const Mat& r, double kappa);

struct BracketSuiteOptions {
  int triples = 200;
  int quadruples = 24;
  std::uint64_t seed = 17;
  double tol = 1e-9;
};

struct BracketSuiteReport {
  CheckReport jacobi_h;
  CheckReport jacobi_v;
  CheckReport compat;
  CheckReport summary() const;
};

// Jacobi of both brackets on random triples drawn from `states`, and
// {{f,g}_h,{k,l}_h}_v − {{f,g}_v,{k,l}_v}_h on random quadruples.
BracketSuiteReport check_bracket_jacobi_compat(const FockRoslyModel& m,
                                               const std::vector<TracePoly>& states,
                                               const BracketSuiteOptions& opts = {});

// Largest deviation of the engine brackets from the closed form heis_bracket,
// over all edge pairs and all face-state pairs (whose blocks all carry the
// root holonomy); requires a model without face labels.
double heis_reduction_residual(const FockRoslyModel& m, const Mat& r0_coeffs);

}  // namespace twocs
