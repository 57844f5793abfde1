#pragma once

#include <map>
#include <string>
#include <vector>

#include "twocs/holonomy_gauge.hpp"
#include "twocs/lie_algebra.hpp"
#include "twocs/report.hpp"
#include "twocs/state_hopf.hpp"

namespace twocs {

// Finite formal sum of gauge transforms in the groupoid convolution algebra.
struct GaugeConvolutionElement {
  std::map<GaugeTransform, cplx> terms;

  static GaugeConvolutionElement delta(const GaugeTransform& z) { return {{{z, cplx(1)}}}; }
  void add(const GaugeTransform& z, cplx w);
};

GaugeConvolutionElement convolve(const TwoComplex& c, const CrossedModule& cm, const GaugeConvolutionElement& x,
                                 const GaugeConvolutionElement& y);
// (Λ_x φ)(c) = Σ w φ(c·ζ) on a state indexed like `configs`.
std::vector<cplx> act(const TwoComplex& c, const CrossedModule& cm, const std::vector<FlatConfig>& configs,
                      const GaugeConvolutionElement& x, const std::vector<cplx>& phi);

struct GaugeTerm {
  GaugeTransform left, right;
};

// Δ̃_h ζ: every factorization ζ = ζ1 ζ2 in the gauge group, ζ1 ascending.
std::vector<GaugeTerm> gauge_coproduct_h(const TwoComplex& c, const CrossedModule& cm, const GaugeTransform& z,
                                         std::int64_t budget = kDefaultBudget);

// One factor of the split coproduct: a refined transform gluing back to ζ at
// the given refined configuration, with its restrictions to the two pieces.
struct SplitGaugeTerm {
  GaugeTransform refined, left, right;
};

// Horizontal split: free labels (a_m, γ_c, γ_r1), γ_r2 solved from the glue.
// Vertical split: free label γ_q.
std::vector<SplitGaugeTerm> gauge_coproduct_split(const SplitDescriptor& sd, const CrossedModule& cm,
                                                  const FlatConfig& refined, const GaugeTransform& z);

// Identity outside the root, boundary edges and their endpoints of `face`.
GaugeTransform restrict_gauge(const TwoComplex& c, const CrossedModule& cm, const GaugeTransform& z, int face);

// S̃_h ζ = ζ^-1. S̃_v is defined on one-vertex one-edge complexes, where the
// gauge group is the 2-group itself with the left-whiskered product:
// (a, γ) ↦ (t(γ) a, γ^-1). Throws DomainError elsewhere.
GaugeTransform gauge_antipode(const TwoComplex& c, const CrossedModule& cm, const GaugeTransform& z, Direction d);

struct GaugeCheckOptions {
  int max_gauges = 64;    // ζ sampled deterministically above this
  int max_configs = 48;   // refined configurations sampled above this
  unsigned seed = 7;
};

CheckReport check_sec_h(const TwoComplex& c, const CrossedModule& cm, const GaugeCheckOptions& opt = {});
CheckReport check_gauge_coassociativity(const TwoComplex& c, const CrossedModule& cm, const GaugeCheckOptions& opt = {});
// compat1 for a horizontal split, compat2 for a vertical split.
CheckReport check_split_covariance(const TwoComplex& c, int face, const CrossedModule& cm, SplitKind kind,
                                   const GaugeCheckOptions& opt = {}, int cut = 1);
// Transforms supported away from one piece leave its local label unchanged.
CheckReport check_sides(const TwoComplex& c, int face, const CrossedModule& cm, SplitKind kind,
                        const GaugeCheckOptions& opt = {}, int cut = 1);
// glue(c', ζ1 ζ2) = glue(c', ζ1) · glue(c'·ζ1, ζ2), so factorizations of a
// product are products of factorizations.
CheckReport check_gauge_bimonoidality(const TwoComplex& c, int face, const CrossedModule& cm, SplitKind kind,
                                      const GaugeCheckOptions& opt = {}, int cut = 1);
// The same identity with both factors glued at c'. Fails for non-abelian data.
CheckReport check_gauge_bimonoidality_fixed_point(const TwoComplex& c, int face, const CrossedModule& cm,
                                                  SplitKind kind, const GaugeCheckOptions& opt = {}, int cut = 1);
CheckReport check_gauge_antipode_h(const TwoComplex& c, const CrossedModule& cm, const GaugeCheckOptions& opt = {});
// S̃_v on the fundamental face: involutive, algebroid antipode axioms, and
// commutation with S̃_h.
CheckReport check_gauge_antipode_v(const CrossedModule& cm);

// suite ∈ {"sec", "covariance", "antipode", "bimonoid", "all"}.
std::vector<CheckReport> gauge_hopf_suite(const CrossedModule& cm, const std::string& suite = "all");

}  // namespace twocs
