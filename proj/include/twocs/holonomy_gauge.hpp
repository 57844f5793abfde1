#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "twocs/crossed_module.hpp"
#include "twocs/report.hpp"
#include "twocs/two_complex.hpp"

namespace twocs {

// Edge labels h_e ∈ G and face labels b_f ∈ H. Holonomies compose left to
// right along paths and faces satisfy h_T = h_S t(b) for their source and
// target paths S, T (right-whiskering convention).
struct FlatConfig {
  std::vector<int> h;
  std::vector<int> b;
  auto operator<=>(const FlatConfig&) const = default;
};

struct GaugeTransform {
  std::vector<int> a;      // per vertex, in G
  std::vector<int> gamma;  // per edge, in H
  auto operator<=>(const GaugeTransform&) const = default;
};

struct SecondaryGauge {
  std::vector<int> m;  // per vertex, in H
};

inline constexpr std::int64_t kDefaultBudget = 100'000'000;

int path_holonomy(const TwoComplex& c, const CrossedModule& cm, const std::vector<int>& h, const Path& p);

struct FlatnessReport {
  bool flat = true;
  std::vector<bool> face_ok;
  std::vector<int> face_defect;  // (h_S t(b))^-1 h_T, identity when flat
  std::vector<bool> cell_ok;
  std::vector<int> cell_product;  // ordered product of whiskered labels
};

// Throws SchemaError when labels do not cover the complex.
FlatnessReport check_flat(const TwoComplex& c, const CrossedModule& cm, const FlatConfig& cfg);
bool is_flat(const TwoComplex& c, const CrossedModule& cm, const FlatConfig& cfg);
// Whiskered label of one rewrite of path p (see Cell3).
int rewrite_label(const TwoComplex& c, const CrossedModule& cm, const FlatConfig& cfg, const Path& p,
                  const Rewrite& r);

// |G|^E |H|^F, saturating at INT64_MAX.
std::int64_t raw_decoration_count(const TwoComplex& c, const CrossedModule& cm);
// All flat configurations in lexicographic (h, b) order. Throws BudgetExceeded
// when the raw decoration count exceeds the budget.
std::vector<FlatConfig> enumerate_flat(const TwoComplex& c, const CrossedModule& cm,
                                       std::int64_t budget = kDefaultBudget);

// Mixed-radix code of a decoration (edges first, then faces).
std::int64_t encode(const CrossedModule& cm, const FlatConfig& cfg);

GaugeTransform identity_gauge(const TwoComplex& c, const CrossedModule& cm);
// Right action: h'_e = a_s^-1 h_e t(γ_e) a_t, b' = a_w^-1 ▷ (Γ_S^-1 b Γ_T),
// where Γ_P is the H-part accumulated along path P and w the end vertex.
FlatConfig gauge_apply(const TwoComplex& c, const CrossedModule& cm, const FlatConfig& cfg,
                       const GaugeTransform& z);
// H-part of the transformed path holonomy: h'_P = a_u^-1 h_P t(Γ_P) a_w.
int path_gauge(const TwoComplex& c, const CrossedModule& cm, const FlatConfig& cfg,
               const GaugeTransform& z, const Path& p);
// ζ then ζ': (a a', γ (a_t ▷ γ')).
GaugeTransform compose(const TwoComplex& c, const CrossedModule& cm, const GaugeTransform& z,
                       const GaugeTransform& z2);
GaugeTransform inverse(const TwoComplex& c, const CrossedModule& cm, const GaugeTransform& z);
// a' = a t(m), γ'_e = (h_e^-1 a_s ▷ m_s) γ_e (a_t ▷ m_t)^-1. Depends on the
// configuration so that the two transforms agree on it.
GaugeTransform secondary_apply(const TwoComplex& c, const CrossedModule& cm, const FlatConfig& cfg,
                               const GaugeTransform& z, const SecondaryGauge& m);
// Every gauge transform in lexicographic order (small complexes only).
std::vector<GaugeTransform> all_gauges(const TwoComplex& c, const CrossedModule& cm,
                                       std::int64_t budget = kDefaultBudget);
std::int64_t gauge_group_order(const TwoComplex& c, const CrossedModule& cm);

struct OrbitPartition {
  std::vector<FlatConfig> configs;
  std::vector<int> orbit_of;                 // config index -> orbit index
  std::vector<std::vector<int>> orbits;      // ascending config indices
  std::vector<int> representatives;          // smallest member of each orbit
  int num_orbits() const { return static_cast<int>(orbits.size()); }
};

OrbitPartition gauge_orbits(const TwoComplex& c, const CrossedModule& cm,
                            std::int64_t budget = kDefaultBudget);

using SparseState = std::map<int, Rational>;  // config index -> amplitude

// Exact group averaging ∏_v A_v ∏_e B_e of a state on flat configurations.
class InvariantProjector {
 public:
  InvariantProjector(const TwoComplex& c, const CrossedModule& cm, const std::vector<FlatConfig>& configs);
  SparseState apply(const SparseState& state) const;
  int size() const { return static_cast<int>(configs_.size()); }
  int index_of(const FlatConfig& cfg) const;  // -1 if not a listed configuration
  const std::vector<FlatConfig>& configs() const { return configs_; }
  // P δ_i as integer numerators over denominator(), ascending by index.
  std::vector<std::pair<int, std::int64_t>> column(int i) const;
  std::int64_t denominator() const { return denominator_; }

 private:
  TwoComplex c_;
  CrossedModule cm_;
  std::vector<FlatConfig> configs_;
  std::unordered_map<std::int64_t, int> index_;
  // moves_[g][i]: index of configs_[i] acted on by elementary generator g.
  std::vector<std::vector<int>> moves_;
  std::vector<int> vertex_gen_, edge_gen_;  // first generator of each vertex / edge
  std::int64_t denominator_ = 1;
};

struct ProjectorSummary {
  Rational trace;
  int rank_mod_p = -1;  // -1 when skipped
  bool idempotent = true;
  int columns_checked = 0;
};

// Builds all columns P δ_c; the modular rank is computed when N <= dense_limit
// and idempotence is checked on every column up to N = 400, sampled above.
ProjectorSummary summarize_projector(const InvariantProjector& p, int dense_limit = 1500);

// dim of { f : f(c·g) = f(c) for all generators g } via elimination mod 2^31-1.
int observable_dimension(const TwoComplex& c, const CrossedModule& cm, const std::vector<FlatConfig>& configs);

// Rank over Z/p of a sparse system given as rows of (column, value).
int sparse_rank_mod_p(std::vector<std::map<int, std::int64_t>> rows);

// Config maps along a split: glue(refined) = original.
FlatConfig glue_config(const SplitDescriptor& sd, const CrossedModule& cm, const FlatConfig& refined);
// Flat refined configurations gluing to cfg (deterministic order).
std::vector<FlatConfig> split_fibre(const SplitDescriptor& sd, const CrossedModule& cm,
                                    const FlatConfig& cfg);
// Gauge transform on the original complex induced by one on the refined
// complex (depends on the refined configuration for horizontal splits).
GaugeTransform glue_gauge(const SplitDescriptor& sd, const CrossedModule& cm, const FlatConfig& refined,
                          const GaugeTransform& z);

FlatConfig dagger_config(const TwoComplex& c, const CrossedModule& cm, DaggerKind kind,
                         const FlatConfig& cfg);
GaugeTransform dagger_gauge(const TwoComplex& c, const CrossedModule& cm, DaggerKind kind,
                            const FlatConfig& cfg, const GaugeTransform& z);

std::string to_string(const CrossedModule& cm, const FlatConfig& cfg);

}  // namespace twocs
