#pragma once

#include <boost/rational.hpp>
#include <compare>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "twocs/finite_group.hpp"
#include "twocs/report.hpp"

namespace twocs {

using Rational = boost::rational<std::int64_t>;

// How 2-group elements (g, h) compose.
//
// kRightWhisker (default): tgt = g t(h); (g,h)(g',h') = (gg', (g'^-1 ▷ h) h');
//   (g,h)∘(g t(h), h') = (g, h h'). Horizontal inverse (g^-1, g ▷ h^-1),
//   vertical inverse (g t(h), h^-1).
// kLeftWhisker: tgt = t(h) g; (g,h)(g',h') = (gg', h (g ▷ h'));
//   (g,h)∘(t(h) g, h') = (g, h' h).
// kLiteral: tgt = g t(h) with (gg', (g' ▷ h) h'). Kept for regression only:
//   it breaks the interchange law for non-abelian data.
enum class ProductConvention { kRightWhisker, kLeftWhisker, kLiteral };

std::string to_string(ProductConvention c);
ProductConvention convention_from_string(const std::string& s);

struct TwoGroupElement {
  int g = 0;  // source (G)
  int h = 0;  // face label (H)
  auto operator<=>(const TwoGroupElement&) const = default;
};

class CrossedModule {
 public:
  CrossedModule() = default;
  // Validates table shapes only. act[x][y] = x ▷ y.
  CrossedModule(std::string name, FiniteGroup G, FiniteGroup H, std::vector<int> t,
                std::vector<std::vector<int>> act,
                ProductConvention conv = ProductConvention::kRightWhisker);

  // Library.
  static CrossedModule trivial();
  static CrossedModule z2_id_z2();
  static CrossedModule z2_zero_z2();
  static CrossedModule z4_x2_z4();
  static CrossedModule inn_s3();
  static CrossedModule inn_z3();
  // Z3 included in S3 with trivial action: not a crossed module.
  static CrossedModule z3_in_s3_trivial();
  static std::vector<CrossedModule> library();

  const std::string& name() const { return name_; }
  const FiniteGroup& G() const { return G_; }
  const FiniteGroup& H() const { return H_; }
  int t(int y) const { return t_[y]; }
  int act(int x, int y) const { return act_[x * H_.order() + y]; }
  const std::vector<int>& t_map() const { return t_; }
  std::vector<std::vector<int>> act_table() const;
  ProductConvention convention() const { return conv_; }
  CrossedModule with_convention(ProductConvention c) const;
  // Copy with one action entry replaced (mutation tests).
  CrossedModule with_act_entry(int x, int y, int value) const;
  CrossedModule with_t_entry(int y, int value) const;

  // 2-group elements flattened as g * |H| + h.
  int size() const { return G_.order() * H_.order(); }
  int index(TwoGroupElement a) const { return a.g * H_.order() + a.h; }
  TwoGroupElement element(int i) const { return {i / H_.order(), i % H_.order()}; }
  TwoGroupElement unit() const { return {G_.identity(), H_.identity()}; }
  std::string label(TwoGroupElement a) const;

  int target(TwoGroupElement a) const;
  bool composable(TwoGroupElement a, TwoGroupElement b) const { return b.g == target(a); }
  // Preimage t^-1(x), ascending.
  const std::vector<int>& t_preimage(int x) const { return preimage_[x]; }

 private:
  std::string name_;
  FiniteGroup G_, H_;
  std::vector<int> t_;
  std::vector<int> act_;
  ProductConvention conv_ = ProductConvention::kRightWhisker;
  std::vector<std::vector<int>> preimage_;
};

TwoGroupElement horizontal_product(const CrossedModule& cm, TwoGroupElement a, TwoGroupElement b);
// Throws DomainError for non-composable pairs.
TwoGroupElement vertical_product(const CrossedModule& cm, TwoGroupElement a, TwoGroupElement b);
// (horizontal inverse, vertical inverse)
std::pair<TwoGroupElement, TwoGroupElement> inversions(const CrossedModule& cm, TwoGroupElement a);
TwoGroupElement identity_at(const CrossedModule& cm, int g);

// t is a homomorphism and ▷ an action by automorphisms.
CheckReport check_structure_maps(const CrossedModule& cm);
CheckReport check_peiffer(const CrossedModule& cm);
CheckReport check_interchange(const CrossedModule& cm);
CheckReport check_inversions(const CrossedModule& cm);
// Everything above plus the group axioms of G and H.
CheckReport validate_crossed_module(const CrossedModule& cm);

// Normalized counting measure: 1/|G| on G and 1/|H| on every source fibre.
struct HaarSystem {
  std::vector<Rational> g_weight;
  std::vector<Rational> fibre_weight;
  Rational total_volume;
};

HaarSystem haar(const CrossedModule& cm);
Rational haar_integral(const CrossedModule& cm, const std::vector<Rational>& f);
// Left-invariance under horizontal multiplication by every 2-group element,
// checked as an exact finite-sum identity for the given test function.
CheckReport check_haar_invariance(const CrossedModule& cm, const std::vector<Rational>& f);

using StateVector = std::vector<std::complex<double>>;
// Value of a single-face state at the unit (1, 1).
std::complex<double> delta_evaluate(const CrossedModule& cm, const StateVector& phi);
// δ paired against left translates: Σ_x δ(x) φ(a·x) |𝔾| μ(x) = φ(a).
std::complex<double> translated_delta_pairing(const CrossedModule& cm, const StateVector& phi,
                                              TwoGroupElement a);

}  // namespace twocs
