#pragma once

#include <functional>
#include <vector>

#include "twocs/crossed_module.hpp"
#include "twocs/holonomy_gauge.hpp"
#include "twocs/lie_algebra.hpp"
#include "twocs/report.hpp"

namespace twocs {

// Exact functions on the 2-group 𝔾, indexed by CrossedModule::index.
using Function = std::vector<Rational>;
// Functions on 𝔾 × 𝔾 (index i * |𝔾| + j) and 𝔾^3.
using Function2 = std::vector<Rational>;
using Function3 = std::vector<Rational>;

enum class Direction { kHorizontal, kVertical };

Function characteristic(const CrossedModule& cm, TwoGroupElement x);
Function constant(const CrossedModule& cm, Rational value);

// Δ_h F(x, y) = F(x·y); Δ_v F(x, y) = F(x∘y) when composable and 0 otherwise.
Function2 coproduct(const CrossedModule& cm, const Function& f, Direction d);
// ε_h F = F(1, 1); ε_v F is the function g ↦ F(id_g) on objects.
Rational counit_h(const CrossedModule& cm, const Function& f);
std::vector<Rational> counit_v(const CrossedModule& cm, const Function& f);
// S_h F(x) = F(x^{-h}), S_v F(x) = F(x^{-v}).
Function antipode(const CrossedModule& cm, const Function& f, Direction d);
// Convolution (F * F')(x) = Σ_{y·z = x} F(y) F'(z) for the horizontal product.
Function convolution(const CrossedModule& cm, const Function& f, const Function& g);
Function pointwise(const Function& f, const Function& g);

struct SweedlerTerm {
  Function left;
  Function right;
};
// Σ F(x) χ_{x1} ⊗ χ_{x2} over all factorizations x = x1 ⋆ x2.
std::vector<SweedlerTerm> sweedler(const CrossedModule& cm, const Function& f, Direction d);
Function2 evaluate(const CrossedModule& cm, const std::vector<SweedlerTerm>& terms);

CheckReport check_coassociativity(const CrossedModule& cm, const Function& f, Direction d);
CheckReport check_counit(const CrossedModule& cm, const Function& f, Direction d);
CheckReport check_antipode_axioms(const CrossedModule& cm, const Function& f, Direction d);
CheckReport check_antipode_antihomomorphism(const CrossedModule& cm, const Function& f, const Function& g);
CheckReport check_antipodes_commute(const CrossedModule& cm, const Function& f);
// (Δ_h⊗Δ_h)Δ_v F = (1⊗σ⊗1)(Δ_v⊗Δ_v)Δ_h F on composable quadruples.
CheckReport check_cointerchange(const CrossedModule& cm, const Function& f);
// Δ(F F') = Δ(F) Δ(F'), Δ1 = 1⊗1 and multiplicative counits.
CheckReport check_bimonoidality(const CrossedModule& cm, const Function& f, const Function& g, Direction d);
// S_v² = id and S_h² = id.
CheckReport check_involutive_antipodes(const CrossedModule& cm, const Function& f);

// Crossed-comodule axioms of C(G) →t* C(H): t* is a bialgebra map, the
// coaction δψ(x, y) = ψ(x▷y) is coassociative and multiplicative, and
// δ t* = (1⊗t*) Ad*_G, (t*⊗1) δ = Ad*_H, S_H t* = t* S_G.
CheckReport check_hopf2_equivariance(const CrossedModule& cm);

// All single-face identities on every characteristic function plus one
// generic function (pairs for the nonlinear checks).
std::vector<CheckReport> hopf_suite(const CrossedModule& cm);

// Lattice coproduct Δφ = φ ∘ glue on the refined flat configurations.
std::vector<Rational> lattice_coproduct(const SplitDescriptor& sd, const CrossedModule& cm,
                                        const std::vector<FlatConfig>& configs,
                                        const std::vector<FlatConfig>& refined,
                                        const std::vector<Rational>& phi);
// Local 2-group label (h_source, b) of one face of a configuration.
TwoGroupElement local_label(const TwoComplex& c, const CrossedModule& cm, const FlatConfig& cfg, int face);

// On the split of one face: the lattice coproduct equals the 2-group
// coproduct evaluated on the local labels of the two pieces, and every
// refined flat configuration is a composable pair.
CheckReport check_lattice_coproduct(const TwoComplex& c, int face, const CrossedModule& cm, SplitKind kind);
// Quadrant split: gluing vertical-then-horizontal equals
// (x1·x2)∘(x3·x4) on every flat refined configuration.
CheckReport check_lattice_cointerchange(const TwoComplex& c, int face, const CrossedModule& cm, int cut = 1);

// Categorified states with finite stalks: an operator U_ζ(c) for each flat
// configuration and gauge transform, acting between the stalks at c·ζ and c.
struct StalkFamily {
  std::vector<int> dims;  // per configuration index
  std::function<Mat(const FlatConfig&, const GaugeTransform&)> op;
};

struct CocycleReport {
  CheckReport report;
  // c(x; ζ, ζ') keyed by (config index, gauge index, gauge index).
  std::vector<cplx> values;
  bool trivial = true;
};

// Extracts c(x; ζ, ζ') from U_ζ(x) U_ζ'(x·ζ) = c U_{ζζ'}(x) and checks the
// groupoid 2-cocycle identity. Throws DomainError when stalk dimensions vary
// along an orbit or when a product is not proportional to the composite.
CocycleReport stalk_cocycle(const TwoComplex& c, const CrossedModule& cm, const std::vector<FlatConfig>& configs,
                            const std::vector<GaugeTransform>& gauges, const StalkFamily& family,
                            double tol = 1e-12);

}  // namespace twocs
