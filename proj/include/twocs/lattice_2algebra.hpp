#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twocs/crossed_module.hpp"
#include "twocs/holonomy_gauge.hpp"
#include "twocs/report.hpp"
#include "twocs/rmatrix.hpp"

namespace twocs {

using LatticeState = std::vector<cplx>;

// Localized 2-gauge parameter on a single 2-graph (e, f): the gauge action
// reads x ↦ left⁻¹ · x · right on the local label x.
struct LocalGauge {
  TwoGroupElement left;
  TwoGroupElement right;
  auto operator<=>(const LocalGauge&) const = default;
};

enum class StarKind { kFraming, kOrientation };  // *₁, *₂

// Regular representation on a single face whose source and target paths are
// single forward edges (fundamental, bigon). Flat configurations are then in
// bijection with their local labels x = (h_S, b) ∈ 𝔾, and the bimodule is
// pullback along 2-group multiplication: (φ•ζ)(x) = φ(x·right),
// (ζ•φ)(x) = φ(left·x). Requires the right-whiskering convention.
class RegularPiece {
 public:
  // Throws DomainError when the complex is not a regular piece.
  RegularPiece(const TwoComplex& c, const CrossedModule& cm);

  const TwoComplex& lattice() const { return c_; }
  const CrossedModule& crossed_module() const { return cm_; }
  const std::vector<FlatConfig>& configs() const { return configs_; }
  const std::vector<TwoGroupElement>& labels() const { return labels_; }
  int size() const { return static_cast<int>(labels_.size()); }
  int index_of(TwoGroupElement x) const;  // -1 outside the flat set

  LocalGauge local(const GaugeTransform& z) const;
  LocalGauge product(const LocalGauge& a, const LocalGauge& b) const;
  LocalGauge inverse(const LocalGauge& a) const;
  LocalGauge unit() const { return {cm_.unit(), cm_.unit()}; }
  LocalGauge star(const LocalGauge& a, StarKind k) const;

  LatticeState characteristic(int i) const;
  LatticeState constant(cplx v) const { return LatticeState(labels_.size(), v); }

  // Translations throw DomainError when they leave the flat set.
  LatticeState right(const LatticeState& phi, const LocalGauge& z) const;  // φ•ζ
  LatticeState left(const LocalGauge& z, const LatticeState& phi) const;   // ζ•φ
  // φ(left⁻¹ x right).
  LatticeState local_action(const LocalGauge& z, const LatticeState& phi) const;
  // (U_ζ φ)(c) = φ(c·ζ) through gauge_apply.
  LatticeState gauge_action(const GaugeTransform& z, const LatticeState& phi) const;
  // Vertical translations; zero where x∘η (η∘x) is not composable.
  LatticeState right_v(const LatticeState& phi, TwoGroupElement eta) const;
  LatticeState left_v(TwoGroupElement eta, const LatticeState& phi) const;

  // φ*(x) = conj φ(x^{-v}) for *₁ and conj φ(x^{-h}) for *₂.
  LatticeState star(const LatticeState& phi, StarKind k) const;

 private:
  TwoComplex c_;
  CrossedModule cm_;
  int source_edge_ = 0, target_edge_ = 0, u_ = 0, w_ = 0;
  std::vector<FlatConfig> configs_;
  std::vector<TwoGroupElement> labels_;
  std::vector<int> index_;  // by cm.index(x)
  LatticeState pull(const LatticeState& phi, const std::function<TwoGroupElement(TwoGroupElement)>& f,
                    bool partial) const;
};

LatticeState star_product(const LatticeState& a, const LatticeState& b);  // pointwise ⋆

// Σ φ_ζ ζ in right normal form (the semidirect product with ⊗ =
// (φ⋆(φ′•ζ), ζζ′)), or Σ ζ ψ_ζ in left normal form.
using LatticeElement = std::map<LocalGauge, LatticeState>;

LatticeElement lattice_pair(const LatticeState& phi, const LocalGauge& z);
LatticeElement semidirect_tensor(const RegularPiece& p, const LatticeElement& a, const LatticeElement& b);
// (Σ ζ ψ)(Σ η ψ′) = Σ ζη ((η•ψ) ⋆ ψ′).
LatticeElement left_semidirect_tensor(const RegularPiece& p, const LatticeElement& a, const LatticeElement& b);
// *₂ maps right normal form to left normal form with ζ* = (right^{-h}, left^{-h});
// *₁ keeps right normal form with ζ* = (left^{-v}, right^{-v}).
LatticeElement star(const RegularPiece& p, const LatticeElement& a, StarKind k);
bool equal(const LatticeElement& a, const LatticeElement& b);

// Units, gauge-trivial sector and associativity on `samples` triples.
CheckReport check_semidirect(const RegularPiece& p, int samples = 64, unsigned seed = 5);
// Left covariance φ•ζ = ζ•(U_ζφ), the derived U_ζφ = ζ⁻¹•φ•ζ and right
// covariance ζ•φ = U_{ζ⁻¹}(φ•ζ), on every characteristic state and every
// gauge transform, with U from gauge_apply.
CheckReport check_covariance(const RegularPiece& p);
// φ⋆φ′ = φ′⋆φ on all characteristic pairs (unit R̃).
CheckReport check_braid_finite(const RegularPiece& p);
// R₁₂T₁T₂ = T₂T₁R₁₂ for matrix-element states T^{(a)} realized as the blocks
// R^{(a,c)} on an auxiliary leg, over all degree patterns.
double braid_residual(const Quantum2R& r);
CheckReport check_braid_represented(const Quantum2R& r, double tol = 1e-10);
// Involutivity, module anti-/homomorphism, agreement with dagger_config,
// strong commutation, preservation of covariance, and the semidirect
// (anti-)homomorphism on sampled pairs.
CheckReport check_star_ops(const RegularPiece& p, int samples = 64, unsigned seed = 9);

struct ObservableSpace {
  int dimension = 0;
  std::vector<LatticeState> basis;  // orbit indicators
  int orbit_count = 0;
  int projector_rank = -1;
  CheckReport report;
};

// Solves φ•ζ = ζ•φ on a regular piece and φ(c·ζ) = φ(c) elsewhere, over
// elementary generators; compares with gauge_orbits and the projector rank.
ObservableSpace observables(const TwoComplex& c, const CrossedModule& cm, std::int64_t budget = kDefaultBudget);

// For each invariant state and vertex parameter, the pure-gauge edge state
// with h_e = a⁻¹ has cosource φ and cotarget a▷φ = φ.
CheckReport check_homotopy_fixed_points(const RegularPiece& p, const ObservableSpace& obs);

// check ∈ {"covariance", "braid", "star", "observables", "all"}.
std::vector<CheckReport> lattice2_suite(const TwoComplex& c, const CrossedModule& cm,
                                        const std::string& check = "all");

}  // namespace twocs
