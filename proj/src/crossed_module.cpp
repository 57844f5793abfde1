#include "twocs/crossed_module.hpp"

#include <fmt/format.h>

#include "twocs/errors.hpp"

namespace twocs {

std::string to_string(ProductConvention c) {
  switch (c) {
    case ProductConvention::kRightWhisker: return "right_whisker";
    case ProductConvention::kLeftWhisker: return "left_whisker";
    case ProductConvention::kLiteral: return "literal";
  }
  return "?";
}

ProductConvention convention_from_string(const std::string& s) {
  if (s == "right_whisker") return ProductConvention::kRightWhisker;
  if (s == "left_whisker") return ProductConvention::kLeftWhisker;
  if (s == "literal") return ProductConvention::kLiteral;
  throw SchemaError("unknown product convention '" + s + "'");
}

CrossedModule::CrossedModule(std::string name, FiniteGroup G, FiniteGroup H, std::vector<int> t,
                             std::vector<std::vector<int>> act, ProductConvention conv)
    : name_(std::move(name)), G_(std::move(G)), H_(std::move(H)), t_(std::move(t)), conv_(conv) {
  if (static_cast<int>(t_.size()) != H_.order())
    throw SchemaError(fmt::format("crossed module '{}': t has {} entries, |H| = {}", name_,
                                  t_.size(), H_.order()));
  for (int v : t_)
    if (v < 0 || v >= G_.order())
      throw SchemaError(fmt::format("crossed module '{}': t value {} out of range", name_, v));
  if (static_cast<int>(act.size()) != G_.order())
    throw SchemaError(fmt::format("crossed module '{}': act needs {} rows", name_, G_.order()));
  for (const auto& row : act) {
    if (static_cast<int>(row.size()) != H_.order())
      throw SchemaError(fmt::format("crossed module '{}': act rows need {} entries", name_,
                                    H_.order()));
    for (int v : row) {
      if (v < 0 || v >= H_.order())
        throw SchemaError(fmt::format("crossed module '{}': act value {} out of range", name_, v));
      act_.push_back(v);
    }
  }
  preimage_.assign(G_.order(), {});
  for (int y = 0; y < H_.order(); ++y) preimage_[t_[y]].push_back(y);
}

std::vector<std::vector<int>> CrossedModule::act_table() const {
  std::vector<std::vector<int>> out(G_.order(), std::vector<int>(H_.order()));
  for (int x = 0; x < G_.order(); ++x)
    for (int y = 0; y < H_.order(); ++y) out[x][y] = act(x, y);
  return out;
}

CrossedModule CrossedModule::with_convention(ProductConvention c) const {
  CrossedModule out = *this;
  out.conv_ = c;
  return out;
}

CrossedModule CrossedModule::with_act_entry(int x, int y, int value) const {
  auto table = act_table();
  table.at(x).at(y) = value;
  return CrossedModule(name_ + "*", G_, H_, t_, table, conv_);
}

CrossedModule CrossedModule::with_t_entry(int y, int value) const {
  auto t = t_;
  t.at(y) = value;
  return CrossedModule(name_ + "*", G_, H_, t, act_table(), conv_);
}

namespace {

std::vector<std::vector<int>> trivial_action(const FiniteGroup& G, const FiniteGroup& H) {
  std::vector<std::vector<int>> a(G.order(), std::vector<int>(H.order()));
  for (int x = 0; x < G.order(); ++x)
    for (int y = 0; y < H.order(); ++y) a[x][y] = y;
  return a;
}

}  // namespace

CrossedModule CrossedModule::trivial() {
  auto one = FiniteGroup::trivial();
  return CrossedModule("trivial", one, one, {0}, {{0}});
}

CrossedModule CrossedModule::z2_id_z2() {
  auto z2 = FiniteGroup::cyclic(2);
  return CrossedModule("z2_id_z2", z2, z2, {0, 1}, trivial_action(z2, z2));
}

CrossedModule CrossedModule::z2_zero_z2() {
  auto z2 = FiniteGroup::cyclic(2);
  return CrossedModule("z2_zero_z2", z2, z2, {0, 0}, trivial_action(z2, z2));
}

CrossedModule CrossedModule::z4_x2_z4() {
  auto z4 = FiniteGroup::cyclic(4);
  return CrossedModule("z4_x2_z4", z4, z4, {0, 2, 0, 2}, trivial_action(z4, z4));
}

CrossedModule CrossedModule::inn_s3() {
  auto s3 = FiniteGroup::symmetric3();
  std::vector<int> t(s3.order());
  std::vector<std::vector<int>> act(s3.order(), std::vector<int>(s3.order()));
  for (int x = 0; x < s3.order(); ++x) {
    t[x] = x;
    for (int y = 0; y < s3.order(); ++y) act[x][y] = s3.mul(s3.mul(x, y), s3.inv(x));
  }
  return CrossedModule("inn_s3", s3, s3, t, act);
}

CrossedModule CrossedModule::inn_z3() {
  auto z3 = FiniteGroup::cyclic(3);
  return CrossedModule("inn_z3", z3, z3, {0, 1, 2}, trivial_action(z3, z3));
}

CrossedModule CrossedModule::z3_in_s3_trivial() {
  auto s3 = FiniteGroup::symmetric3();
  auto z3 = FiniteGroup::cyclic(3);
  const int c = s3.mul(s3.find_label("(12)"), s3.find_label("(23)"));
  return CrossedModule("z3_in_s3_trivial", s3, z3, {s3.identity(), c, s3.mul(c, c)},
                       trivial_action(s3, z3));
}

std::vector<CrossedModule> CrossedModule::library() {
  return {trivial(), z2_id_z2(), z2_zero_z2(), z4_x2_z4(), inn_s3()};
}

std::string CrossedModule::label(TwoGroupElement a) const {
  return fmt::format("({},{})", G_.label(a.g), H_.label(a.h));
}

int CrossedModule::target(TwoGroupElement a) const {
  if (conv_ == ProductConvention::kLeftWhisker) return G_.mul(t(a.h), a.g);
  return G_.mul(a.g, t(a.h));
}

namespace {

void check_element(const CrossedModule& cm, TwoGroupElement a) {
  if (a.g < 0 || a.g >= cm.G().order() || a.h < 0 || a.h >= cm.H().order())
    throw DomainError(fmt::format("element ({},{}) does not belong to '{}'", a.g, a.h, cm.name()));
}

}  // namespace

TwoGroupElement horizontal_product(const CrossedModule& cm, TwoGroupElement a, TwoGroupElement b) {
  check_element(cm, a);
  check_element(cm, b);
  const auto& G = cm.G();
  const auto& H = cm.H();
  const int g = G.mul(a.g, b.g);
  switch (cm.convention()) {
    case ProductConvention::kRightWhisker:
      return {g, H.mul(cm.act(G.inv(b.g), a.h), b.h)};
    case ProductConvention::kLeftWhisker:
      return {g, H.mul(a.h, cm.act(a.g, b.h))};
    case ProductConvention::kLiteral:
      return {g, H.mul(cm.act(b.g, a.h), b.h)};
  }
  return {};
}

TwoGroupElement vertical_product(const CrossedModule& cm, TwoGroupElement a, TwoGroupElement b) {
  check_element(cm, a);
  check_element(cm, b);
  if (!cm.composable(a, b))
    throw DomainError(fmt::format("vertical_product: source {} of second factor differs from target {}",
                                  cm.G().label(b.g), cm.G().label(cm.target(a))));
  if (cm.convention() == ProductConvention::kLeftWhisker) return {a.g, cm.H().mul(b.h, a.h)};
  return {a.g, cm.H().mul(a.h, b.h)};
}

std::pair<TwoGroupElement, TwoGroupElement> inversions(const CrossedModule& cm, TwoGroupElement a) {
  check_element(cm, a);
  const auto& G = cm.G();
  const auto& H = cm.H();
  const int gi = G.inv(a.g), hi = H.inv(a.h);
  TwoGroupElement hor{}, ver{gi, hi};
  switch (cm.convention()) {
    case ProductConvention::kRightWhisker: hor = {gi, cm.act(a.g, hi)}; break;
    case ProductConvention::kLeftWhisker:
    case ProductConvention::kLiteral: hor = {gi, cm.act(gi, hi)}; break;
  }
  ver = {cm.target(a), hi};
  return {hor, ver};
}

TwoGroupElement identity_at(const CrossedModule& cm, int g) { return {g, cm.H().identity()}; }

CheckReport check_structure_maps(const CrossedModule& cm) {
  CheckReport rep = make_report("structure_maps:" + cm.name());
  const auto& G = cm.G();
  const auto& H = cm.H();
  rep.absorb(check_homomorphism(H, G, cm.t_map()));
  for (int x = 0; x < G.order(); ++x) {
    std::vector<bool> hit(H.order(), false);
    for (int y = 0; y < H.order(); ++y) {
      hit[cm.act(x, y)] = true;
      for (int y2 = 0; y2 < H.order(); ++y2) {
        ++rep.checked;
        if (cm.act(x, H.mul(y, y2)) != H.mul(cm.act(x, y), cm.act(x, y2)))
          rep.fail(fmt::format("{} ▷ - is not multiplicative at ({},{})", G.label(x), H.label(y),
                               H.label(y2)));
      }
    }
    for (bool b : hit)
      if (!b) rep.fail(fmt::format("{} ▷ - is not bijective", G.label(x)));
  }
  for (int y = 0; y < H.order(); ++y) {
    if (cm.act(G.identity(), y) != y) rep.fail(fmt::format("1 ▷ {} != {}", H.label(y), H.label(y)));
    for (int x = 0; x < G.order(); ++x)
      for (int x2 = 0; x2 < G.order(); ++x2) {
        ++rep.checked;
        if (cm.act(G.mul(x, x2), y) != cm.act(x, cm.act(x2, y)))
          rep.fail(fmt::format("action not compatible with product at ({},{},{})", G.label(x),
                               G.label(x2), H.label(y)));
      }
  }
  return rep;
}

CheckReport check_peiffer(const CrossedModule& cm) {
  CheckReport rep = make_report("peiffer:" + cm.name());
  const auto& G = cm.G();
  const auto& H = cm.H();
  for (int x = 0; x < G.order(); ++x)
    for (int y = 0; y < H.order(); ++y) {
      ++rep.checked;
      if (cm.t(cm.act(x, y)) != G.mul(G.mul(x, cm.t(y)), G.inv(x)))
        rep.fail(fmt::format("Peiffer 1 fails at x={}, y={}", G.label(x), H.label(y)));
    }
  for (int y = 0; y < H.order(); ++y)
    for (int y2 = 0; y2 < H.order(); ++y2) {
      ++rep.checked;
      if (cm.act(cm.t(y), y2) != H.mul(H.mul(y, y2), H.inv(y)))
        rep.fail(fmt::format("Peiffer 2 fails at y={}, y'={}", H.label(y), H.label(y2)));
    }
  return rep;
}

CheckReport check_interchange(const CrossedModule& cm) {
  CheckReport rep = make_report("interchange:" + cm.name());
  const int n = cm.size();
  const auto& G = cm.G();
  // a∘c and b∘d composable: c.g = tgt(a), d.g = tgt(b).
  for (int ia = 0; ia < n; ++ia)
    for (int ib = 0; ib < n; ++ib) {
      const auto a = cm.element(ia), b = cm.element(ib);
      for (int hc = 0; hc < cm.H().order(); ++hc)
        for (int hd = 0; hd < cm.H().order(); ++hd) {
          const TwoGroupElement c{cm.target(a), hc}, d{cm.target(b), hd};
          const auto ab = horizontal_product(cm, a, b);
          const auto cd = horizontal_product(cm, c, d);
          ++rep.checked;
          if (!cm.composable(ab, cd)) {
            rep.fail(fmt::format("a·b and c·d not composable for a={}, b={}, c={}, d={}",
                                 cm.label(a), cm.label(b), cm.label(c), cm.label(d)));
            continue;
          }
          const auto lhs = vertical_product(cm, ab, cd);
          const auto rhs =
              horizontal_product(cm, vertical_product(cm, a, c), vertical_product(cm, b, d));
          if (lhs != rhs)
            rep.fail(fmt::format("(a·b)∘(c·d) = {} but (a∘c)·(b∘d) = {} for a={}, b={}, c={}, d={}",
                                 cm.label(lhs), cm.label(rhs), cm.label(a), cm.label(b),
                                 cm.label(c), cm.label(d)));
        }
    }
  (void)G;
  return rep;
}

CheckReport check_inversions(const CrossedModule& cm) {
  CheckReport rep = make_report("inversions:" + cm.name());
  for (int i = 0; i < cm.size(); ++i) {
    const auto a = cm.element(i);
    const auto [hor, ver] = inversions(cm, a);
    rep.checked += 2;
    if (horizontal_product(cm, a, hor) != cm.unit() || horizontal_product(cm, hor, a) != cm.unit())
      rep.fail(fmt::format("horizontal inverse law fails at {}", cm.label(a)));
    if (!cm.composable(a, ver) || vertical_product(cm, a, ver) != identity_at(cm, a.g) ||
        !cm.composable(ver, a) || vertical_product(cm, ver, a) != identity_at(cm, cm.target(a)))
      rep.fail(fmt::format("vertical inverse law fails at {}", cm.label(a)));
  }
  return rep;
}

CheckReport validate_crossed_module(const CrossedModule& cm) {
  CheckReport rep = make_report("crossed_module:" + cm.name());
  rep.absorb(check_group_axioms(cm.G()));
  rep.absorb(check_group_axioms(cm.H()));
  if (!rep.pass) return rep;
  rep.absorb(check_structure_maps(cm));
  rep.absorb(check_peiffer(cm));
  rep.absorb(check_interchange(cm));
  rep.absorb(check_inversions(cm));
  return rep;
}

HaarSystem haar(const CrossedModule& cm) {
  HaarSystem hs;
  hs.g_weight.assign(cm.G().order(), Rational(1, cm.G().order()));
  hs.fibre_weight.assign(cm.H().order(), Rational(1, cm.H().order()));
  hs.total_volume = 0;
  for (const auto& wg : hs.g_weight)
    for (const auto& wh : hs.fibre_weight) hs.total_volume += wg * wh;
  return hs;
}

Rational haar_integral(const CrossedModule& cm, const std::vector<Rational>& f) {
  if (static_cast<int>(f.size()) != cm.size()) throw DomainError("haar_integral: size mismatch");
  const auto hs = haar(cm);
  Rational s = 0;
  for (int i = 0; i < cm.size(); ++i) {
    const auto a = cm.element(i);
    s += hs.g_weight[a.g] * hs.fibre_weight[a.h] * f[i];
  }
  return s;
}

CheckReport check_haar_invariance(const CrossedModule& cm, const std::vector<Rational>& f) {
  CheckReport rep = make_report("haar_invariance:" + cm.name());
  const Rational base = haar_integral(cm, f);
  for (int i = 0; i < cm.size(); ++i) {
    const auto a = cm.element(i);
    std::vector<Rational> left(cm.size()), right(cm.size());
    for (int j = 0; j < cm.size(); ++j) {
      left[j] = f[cm.index(horizontal_product(cm, a, cm.element(j)))];
      right[j] = f[cm.index(horizontal_product(cm, cm.element(j), a))];
    }
    rep.checked += 2;
    if (haar_integral(cm, left) != base) rep.fail("left translate by " + cm.label(a));
    if (haar_integral(cm, right) != base) rep.fail("right translate by " + cm.label(a));
  }
  return rep;
}

std::complex<double> delta_evaluate(const CrossedModule& cm, const StateVector& phi) {
  if (static_cast<int>(phi.size()) != cm.size())
    throw DomainError("delta_evaluate: state is not defined on the full single-face space");
  return phi[cm.index(cm.unit())];
}

std::complex<double> translated_delta_pairing(const CrossedModule& cm, const StateVector& phi,
                                              TwoGroupElement a) {
  if (static_cast<int>(phi.size()) != cm.size())
    throw DomainError("translated_delta_pairing: size mismatch");
  const auto a_inv = inversions(cm, a).first;
  const double volume = cm.size();
  std::complex<double> s = 0;
  for (int i = 0; i < cm.size(); ++i) {
    const auto x = cm.element(i);
    const double delta = horizontal_product(cm, a_inv, x) == cm.unit() ? volume : 0.0;
    s += delta * phi[i] / volume;
  }
  return s;
}

}  // namespace twocs
