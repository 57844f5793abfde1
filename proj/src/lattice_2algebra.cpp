#include "twocs/lattice_2algebra.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <random>

#include "twocs/errors.hpp"
#include "twocs/gauge_hopf.hpp"
#include "twocs/state_hopf.hpp"

namespace twocs {

namespace {

std::vector<GaugeTransform> generators(const TwoComplex& c, const CrossedModule& cm) {
  std::vector<GaugeTransform> out;
  const GaugeTransform id = identity_gauge(c, cm);
  for (int v = 0; v < c.num_vertices; ++v)
    for (int x = 0; x < cm.G().order(); ++x)
      if (x != cm.G().identity()) {
        GaugeTransform z = id;
        z.a[v] = x;
        out.push_back(z);
      }
  for (int e = 0; e < c.num_edges(); ++e)
    for (int y = 0; y < cm.H().order(); ++y)
      if (y != cm.H().identity()) {
        GaugeTransform z = id;
        z.gamma[e] = y;
        out.push_back(z);
      }
  return out;
}

bool single_forward(const Path& p) { return p.size() == 1 && p[0].orient == 1; }

std::string label(const CrossedModule& cm, const LocalGauge& z) {
  return fmt::format("({}, {})", cm.label(z.left), cm.label(z.right));
}

}  // namespace

RegularPiece::RegularPiece(const TwoComplex& c, const CrossedModule& cm) : c_(c), cm_(cm) {
  if (cm.convention() != ProductConvention::kRightWhisker)
    throw DomainError("regular piece needs the right-whiskering convention");
  if (c.num_faces() != 1) throw DomainError(fmt::format("{}: regular piece needs exactly one face", c.name));
  const Path s = c.face_source(0), t = c.face_target(0);
  if (!single_forward(s) || !single_forward(t))
    throw DomainError(fmt::format("{}: face paths are not single forward edges", c.name));
  source_edge_ = s[0].edge;
  target_edge_ = t[0].edge;
  u_ = c.edges[source_edge_].src;
  w_ = c.edges[source_edge_].tgt;
  if (c.edges[target_edge_].src != u_ || c.edges[target_edge_].tgt != w_)
    throw DomainError(fmt::format("{}: source and target edges are not parallel", c.name));
  for (int e = 0; e < c.num_edges(); ++e)
    if (e != source_edge_ && e != target_edge_)
      throw DomainError(fmt::format("{}: edge {} is not on the face", c.name, e));
  configs_ = enumerate_flat(c, cm);
  index_.assign(cm.size(), -1);
  for (const auto& cfg : configs_) {
    const TwoGroupElement x = local_label(c, cm, cfg, 0);
    if (index_[cm.index(x)] >= 0) throw DomainError(fmt::format("{}: local labels are not injective", c.name));
    index_[cm.index(x)] = static_cast<int>(labels_.size());
    labels_.push_back(x);
  }
}

int RegularPiece::index_of(TwoGroupElement x) const { return index_[cm_.index(x)]; }

LocalGauge RegularPiece::local(const GaugeTransform& z) const {
  const auto& G = cm_.G();
  const auto& H = cm_.H();
  const int gs = z.gamma[source_edge_], gt = z.gamma[target_edge_];
  const int aw = z.a[w_];
  const TwoGroupElement l{z.a[u_], H.identity()};
  const TwoGroupElement r{G.mul(cm_.t(gs), aw), cm_.act(G.inv(aw), H.mul(H.inv(gs), gt))};
  return {l, r};
}

LocalGauge RegularPiece::product(const LocalGauge& a, const LocalGauge& b) const {
  return {horizontal_product(cm_, a.left, b.left), horizontal_product(cm_, a.right, b.right)};
}

LocalGauge RegularPiece::inverse(const LocalGauge& a) const {
  return {inversions(cm_, a.left).first, inversions(cm_, a.right).first};
}

LocalGauge RegularPiece::star(const LocalGauge& a, StarKind k) const {
  if (k == StarKind::kOrientation)
    return {inversions(cm_, a.right).first, inversions(cm_, a.left).first};
  return {inversions(cm_, a.left).second, inversions(cm_, a.right).second};
}

LatticeState RegularPiece::characteristic(int i) const {
  LatticeState s(labels_.size(), cplx(0));
  s.at(i) = 1;
  return s;
}

LatticeState RegularPiece::pull(const LatticeState& phi, const std::function<TwoGroupElement(TwoGroupElement)>& f,
                                bool partial) const {
  if (phi.size() != labels_.size()) throw DomainError("state size differs from the configuration count");
  LatticeState out(labels_.size(), cplx(0));
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    TwoGroupElement y;
    try {
      y = f(labels_[i]);
    } catch (const DomainError&) {
      if (partial) continue;
      throw;
    }
    const int j = index_of(y);
    if (j < 0) throw DomainError(fmt::format("translation leaves the flat set at {}", cm_.label(labels_[i])));
    out[i] = phi[j];
  }
  return out;
}

LatticeState RegularPiece::right(const LatticeState& phi, const LocalGauge& z) const {
  return pull(phi, [&](TwoGroupElement x) { return horizontal_product(cm_, x, z.right); }, false);
}

LatticeState RegularPiece::left(const LocalGauge& z, const LatticeState& phi) const {
  return pull(phi, [&](TwoGroupElement x) { return horizontal_product(cm_, z.left, x); }, false);
}

LatticeState RegularPiece::local_action(const LocalGauge& z, const LatticeState& phi) const {
  const TwoGroupElement li = inversions(cm_, z.left).first;
  return pull(
      phi, [&](TwoGroupElement x) { return horizontal_product(cm_, horizontal_product(cm_, li, x), z.right); },
      false);
}

LatticeState RegularPiece::gauge_action(const GaugeTransform& z, const LatticeState& phi) const {
  return act(c_, cm_, configs_, GaugeConvolutionElement::delta(z), phi);
}

LatticeState RegularPiece::right_v(const LatticeState& phi, TwoGroupElement eta) const {
  return pull(phi, [&](TwoGroupElement x) { return vertical_product(cm_, x, eta); }, true);
}

LatticeState RegularPiece::left_v(TwoGroupElement eta, const LatticeState& phi) const {
  return pull(phi, [&](TwoGroupElement x) { return vertical_product(cm_, eta, x); }, true);
}

LatticeState RegularPiece::star(const LatticeState& phi, StarKind k) const {
  LatticeState out = pull(
      phi,
      [&](TwoGroupElement x) {
        const auto inv = inversions(cm_, x);
        return k == StarKind::kOrientation ? inv.first : inv.second;
      },
      false);
  for (auto& v : out) v = std::conj(v);
  return out;
}

LatticeState star_product(const LatticeState& a, const LatticeState& b) {
  if (a.size() != b.size()) throw DomainError("star_product: domain mismatch");
  LatticeState out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

namespace {

void accumulate(LatticeElement& out, const LocalGauge& z, const LatticeState& s) {
  auto it = out.find(z);
  if (it == out.end()) {
    out.emplace(z, s);
    return;
  }
  for (std::size_t i = 0; i < s.size(); ++i) it->second[i] += s[i];
}

bool is_zero(const LatticeState& s) {
  return std::all_of(s.begin(), s.end(), [](cplx v) { return v == cplx(0); });
}

}  // namespace

LatticeElement lattice_pair(const LatticeState& phi, const LocalGauge& z) { return {{z, phi}}; }

LatticeElement semidirect_tensor(const RegularPiece& p, const LatticeElement& a, const LatticeElement& b) {
  LatticeElement out;
  for (const auto& [z, phi] : a)
    for (const auto& [z2, phi2] : b) accumulate(out, p.product(z, z2), star_product(phi, p.right(phi2, z)));
  return out;
}

LatticeElement left_semidirect_tensor(const RegularPiece& p, const LatticeElement& a, const LatticeElement& b) {
  LatticeElement out;
  for (const auto& [z, psi] : a)
    for (const auto& [z2, psi2] : b) accumulate(out, p.product(z, z2), star_product(p.left(z2, psi), psi2));
  return out;
}

LatticeElement star(const RegularPiece& p, const LatticeElement& a, StarKind k) {
  LatticeElement out;
  for (const auto& [z, phi] : a) accumulate(out, p.star(z, k), p.star(phi, k));
  return out;
}

bool equal(const LatticeElement& a, const LatticeElement& b) {
  auto nonzero = [](const LatticeElement& x) {
    LatticeElement y;
    for (const auto& [z, s] : x)
      if (!is_zero(s)) y.emplace(z, s);
    return y;
  };
  return nonzero(a) == nonzero(b);
}

namespace {

struct Sampler {
  const RegularPiece& p;
  std::vector<GaugeTransform> gauges;
  std::mt19937 rng;

  Sampler(const RegularPiece& piece, unsigned seed)
      : p(piece), gauges(all_gauges(piece.lattice(), piece.crossed_module())), rng(seed) {}

  LatticeState state() {
    std::uniform_int_distribution<int> d(-2, 2);
    LatticeState s(p.size());
    for (auto& v : s) v = cplx(d(rng), d(rng));
    return s;
  }
  LocalGauge gauge() {
    std::uniform_int_distribution<std::size_t> d(0, gauges.size() - 1);
    return p.local(gauges[d(rng)]);
  }
  LatticeElement element() {
    LatticeElement e;
    for (int k = 0; k < 2; ++k) accumulate(e, gauge(), state());
    return e;
  }
};

}  // namespace

CheckReport check_semidirect(const RegularPiece& p, int samples, unsigned seed) {
  CheckReport rep = make_report("semidirect");
  Sampler s(p, seed);
  const LatticeElement one = lattice_pair(p.constant(1), p.unit());
  for (int k = 0; k < samples; ++k) {
    const auto a = s.element(), b = s.element(), c = s.element();
    rep.checked += 4;
    if (!equal(semidirect_tensor(p, a, one), a) || !equal(semidirect_tensor(p, one, a), a))
      rep.fail(fmt::format("sample {}: unit law", k));
    const LatticeState phi = s.state(), phi2 = s.state();
    if (!equal(semidirect_tensor(p, lattice_pair(phi, p.unit()), lattice_pair(phi2, p.unit())),
               lattice_pair(star_product(phi, phi2), p.unit())))
      rep.fail(fmt::format("sample {}: gauge-trivial sector", k));
    if (!equal(semidirect_tensor(p, semidirect_tensor(p, a, b), c), semidirect_tensor(p, a, semidirect_tensor(p, b, c))))
      rep.fail(fmt::format("sample {}: associativity", k));
  }
  // The local gauge map is a homomorphism of the gauge group.
  for (const auto& z : s.gauges)
    for (const auto& z2 : s.gauges) {
      ++rep.checked;
      if (p.local(compose(p.lattice(), p.crossed_module(), z, z2)) != p.product(p.local(z), p.local(z2))) {
        rep.fail("local gauge of a composite differs from the product");
        break;
      }
    }
  return rep;
}

CheckReport check_covariance(const RegularPiece& p) {
  CheckReport rep = make_report("covariance");
  const auto& c = p.lattice();
  const auto& cm = p.crossed_module();
  const auto gauges = all_gauges(c, cm);
  for (int i = 0; i < p.size(); ++i) {
    const LatticeState phi = p.characteristic(i);
    for (const auto& z : gauges) {
      const LocalGauge lz = p.local(z);
      const LatticeState u = p.gauge_action(z, phi);
      const LatticeState phi_z = p.right(phi, lz);
      rep.checked += 4;
      if (p.local_action(lz, phi) != u) rep.fail(fmt::format("config {}: bimodule conjugation differs from gauge_apply", i));
      if (phi_z != p.left(lz, u)) rep.fail(fmt::format("config {} ζ={}: left covariance", i, label(cm, lz)));
      if (p.left(p.inverse(lz), phi_z) != u) rep.fail(fmt::format("config {}: U_ζφ ≠ ζ⁻¹•φ•ζ", i));
      const GaugeTransform zi = inverse(c, cm, z);
      if (p.left(lz, phi) != p.gauge_action(zi, phi_z)) rep.fail(fmt::format("config {}: right covariance", i));
    }
  }
  return rep;
}

CheckReport check_braid_finite(const RegularPiece& p) {
  CheckReport rep = make_report("braid_finite");
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) {
      const auto a = p.characteristic(i), b = p.characteristic(j);
      ++rep.checked;
      const auto ab = semidirect_tensor(p, lattice_pair(a, p.unit()), lattice_pair(b, p.unit()));
      const auto ba = semidirect_tensor(p, lattice_pair(b, p.unit()), lattice_pair(a, p.unit()));
      if (!equal(ab, ba)) rep.fail(fmt::format("configs ({},{})", i, j));
    }
  return rep;
}

double braid_residual(const Quantum2R& r) {
  double res = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        const std::vector<int> dims{r.leg_dim(a), r.leg_dim(b), r.leg_dim(c)};
        const Mat r12 = embed_two_leg(r.block(a, b), dims, 0, 1);
        const Mat t13 = embed_two_leg(r.block(a, c), dims, 0, 2);
        const Mat t23 = embed_two_leg(r.block(b, c), dims, 1, 2);
        res = std::max(res, (r12 * t13 * t23 - t23 * t13 * r12).norm());
      }
  return res;
}

CheckReport check_braid_represented(const Quantum2R& r, double tol) {
  CheckReport rep = make_report("braid_represented");
  rep.residual = braid_residual(r);
  rep.checked = 8;
  if (!(rep.residual < tol)) rep.fail(fmt::format("residual {:.3e}", rep.residual));
  return rep;
}

CheckReport check_star_ops(const RegularPiece& p, int samples, unsigned seed) {
  CheckReport rep = make_report("star_ops");
  const auto& c = p.lattice();
  const auto& cm = p.crossed_module();
  const auto gauges = all_gauges(c, cm);
  const StarKind kinds[] = {StarKind::kFraming, StarKind::kOrientation};
  const DaggerKind dkinds[] = {DaggerKind::kFraming, DaggerKind::kOrientation};

  // The state-level stars are the dagger maps of the complex.
  for (int k = 0; k < 2; ++k) {
    const auto dc = apply_dagger(c, dkinds[k]).first;
    for (int i = 0; i < p.size(); ++i) {
      ++rep.checked;
      const auto y = local_label(dc, cm, dagger_config(c, cm, dkinds[k], p.configs()[i]), 0);
      const auto inv = inversions(cm, p.labels()[i]);
      if (y != (kinds[k] == StarKind::kOrientation ? inv.first : inv.second))
        rep.fail(fmt::format("config {}: dagger_config label differs from the 2-group inverse", i));
    }
  }

  for (int i = 0; i < p.size(); ++i) {
    const LatticeState phi = p.characteristic(i);
    const auto s1 = p.star(phi, StarKind::kFraming), s2 = p.star(phi, StarKind::kOrientation);
    rep.checked += 3;
    if (p.star(s1, StarKind::kFraming) != phi) rep.fail(fmt::format("config {}: *₁ not involutive", i));
    if (p.star(s2, StarKind::kOrientation) != phi) rep.fail(fmt::format("config {}: *₂ not involutive", i));
    if (p.star(s1, StarKind::kOrientation) != p.star(s2, StarKind::kFraming))
      rep.fail(fmt::format("config {}: *₁ and *₂ do not commute", i));
    for (const auto& z : gauges) {
      const LocalGauge lz = p.local(z);
      const LocalGauge z1 = p.star(lz, StarKind::kFraming), z2 = p.star(lz, StarKind::kOrientation);
      rep.checked += 5;
      // *₂ swaps the two sides of the bimodule, *₁ preserves them.
      if (p.star(p.right(phi, lz), StarKind::kOrientation) != p.left(z2, s2))
        rep.fail(fmt::format("config {} ζ={}: (φ•ζ)*₂ ≠ ζ*₂•φ*₂", i, label(cm, lz)));
      if (p.star(p.left(lz, phi), StarKind::kOrientation) != p.right(s2, z2))
        rep.fail(fmt::format("config {} ζ={}: (ζ•φ)*₂ ≠ φ*₂•ζ*₂", i, label(cm, lz)));
      if (p.star(p.right(phi, lz), StarKind::kFraming) != p.right(s1, z1))
        rep.fail(fmt::format("config {} ζ={}: (φ•ζ)*₁ ≠ φ*₁•ζ*₁", i, label(cm, lz)));
      // Covariance survives: the starred pair still acts by bimodule conjugation.
      for (const auto& [st, zs] : {std::pair{s1, z1}, std::pair{s2, z2}})
        if (p.right(st, zs) != p.left(zs, p.local_action(zs, st)))
          rep.fail(fmt::format("config {}: starred state not covariant", i));
    }
    for (int j = 0; j < p.size(); ++j) {
      const TwoGroupElement eta = p.labels()[j];
      ++rep.checked;
      if (p.star(p.right_v(phi, eta), StarKind::kFraming) !=
          p.left_v(inversions(cm, eta).second, s1))
        rep.fail(fmt::format("config {} η={}: (φ•ᵥη)*₁ ≠ η*₁•ᵥφ*₁", i, cm.label(eta)));
    }
  }

  Sampler s(p, seed);
  for (int k = 0; k < samples; ++k) {
    const auto a = s.element(), b = s.element();
    rep.checked += 2;
    const auto ab = semidirect_tensor(p, a, b);
    if (!equal(star(p, ab, StarKind::kOrientation),
               left_semidirect_tensor(p, star(p, b, StarKind::kOrientation), star(p, a, StarKind::kOrientation))))
      rep.fail(fmt::format("sample {}: *₂ is not an anti-homomorphism", k));
    if (!equal(star(p, ab, StarKind::kFraming),
               semidirect_tensor(p, star(p, a, StarKind::kFraming), star(p, b, StarKind::kFraming))))
      rep.fail(fmt::format("sample {}: *₁ is not multiplicative", k));
  }
  return rep;
}

ObservableSpace observables(const TwoComplex& c, const CrossedModule& cm, std::int64_t budget) {
  ObservableSpace out;
  out.report = make_report("observables:" + c.name + ":" + cm.name());
  const OrbitPartition orbits = gauge_orbits(c, cm, budget);
  const auto& configs = orbits.configs;
  const int n = static_cast<int>(configs.size());
  std::map<std::int64_t, int> index;
  for (int i = 0; i < n; ++i) index.emplace(encode(cm, configs[i]), i);

  std::vector<std::map<int, std::int64_t>> rows;
  auto add_row = [&](int i, int j) {
    if (i == j) return;
    rows.push_back({{i, 1}, {j, -1}});
  };
  std::optional<RegularPiece> piece;
  try {
    piece.emplace(c, cm);
  } catch (const DomainError&) {
  }
  for (const auto& z : generators(c, cm)) {
    if (piece) {
      // φ•ζ = ζ•φ pointwise: φ(x·right) = φ(left·x).
      const LocalGauge lz = piece->local(z);
      for (int i = 0; i < n; ++i) {
        const auto x = piece->labels()[i];
        const int a = piece->index_of(horizontal_product(cm, x, lz.right));
        const int b = piece->index_of(horizontal_product(cm, lz.left, x));
        if (a < 0 || b < 0) throw DomainError("translation leaves the flat set");
        add_row(a, b);
      }
    } else {
      for (int i = 0; i < n; ++i) add_row(i, index.at(encode(cm, gauge_apply(c, cm, configs[i], z))));
    }
  }
  out.dimension = n - sparse_rank_mod_p(rows);
  out.orbit_count = orbits.num_orbits();
  for (const auto& orb : orbits.orbits) {
    LatticeState s(n, cplx(0));
    for (int i : orb) s[i] = 1;
    out.basis.push_back(s);
  }
  // Basis vectors satisfy the invariance condition.
  const auto gauges = generators(c, cm);
  for (const auto& s : out.basis)
    for (const auto& z : gauges) {
      ++out.report.checked;
      if (act(c, cm, configs, GaugeConvolutionElement::delta(z), s) != s) out.report.fail("orbit indicator not invariant");
    }
  const InvariantProjector proj(c, cm, configs);
  const ProjectorSummary sum = summarize_projector(proj);
  out.projector_rank = sum.rank_mod_p;
  out.report.checked += 2;
  if (out.dimension != out.orbit_count)
    out.report.fail(fmt::format("dimension {} ≠ orbit count {}", out.dimension, out.orbit_count));
  if (out.projector_rank >= 0 && out.projector_rank != out.orbit_count)
    out.report.fail(fmt::format("projector rank {} ≠ orbit count {}", out.projector_rank, out.orbit_count));
  return out;
}

CheckReport check_homotopy_fixed_points(const RegularPiece& p, const ObservableSpace& obs) {
  CheckReport rep = make_report("homotopy_fixed_points");
  const auto& cm = p.crossed_module();
  const auto& G = cm.G();
  const TwoComplex& c = p.lattice();
  for (const auto& phi : obs.basis) {
    if (static_cast<int>(phi.size()) != p.size()) throw DomainError("observable basis is not on this piece");
    for (int v = 0; v < c.num_vertices; ++v)
      for (int a = 0; a < G.order(); ++a) {
        // Edge states on one edge v → v̄: functions on G. The witness is the
        // indicator of the pure-gauge value a_v⁻¹ a_v̄ with a_v = a, a_v̄ = 1.
        const int pure = G.inv(a);
        std::vector<int> witness(G.order(), 0);
        witness[pure] = 1;
        const bool exists = std::count(witness.begin(), witness.end(), 1) == 1;
        // Cotarget a▷φ by whiskering every label at v with h_e = a⁻¹.
        LatticeState target(phi.size());
        for (int i = 0; i < p.size(); ++i) {
          FlatConfig cfg = p.configs()[i];
          for (int e = 0; e < c.num_edges(); ++e) {
            if (c.edges[e].src == v) cfg.h[e] = G.mul(pure, cfg.h[e]);
            if (c.edges[e].tgt == v) cfg.h[e] = G.mul(cfg.h[e], a);
          }
          const int w = c.edges[c.face_source(0)[0].edge].tgt;
          if (w == v) cfg.b[0] = cm.act(pure, cfg.b[0]);
          const int j = p.index_of(local_label(c, cm, cfg, 0));
          if (j < 0) throw DomainError("whiskered configuration is not flat");
          target[i] = phi[j];
        }
        rep.checked += 2;
        if (!exists) rep.fail("no pure-gauge witness");
        if (target != phi) rep.fail(fmt::format("vertex {} a={}: cotarget differs from cosource", v, G.label(a)));
      }
  }
  return rep;
}

std::vector<CheckReport> lattice2_suite(const TwoComplex& c, const CrossedModule& cm, const std::string& check) {
  const bool all = check == "all";
  if (!all && check != "covariance" && check != "braid" && check != "star" && check != "observables")
    throw SchemaError("unknown lattice2 check: " + check);
  std::vector<CheckReport> out;
  auto tag = [&](CheckReport r) {
    r.name += ":" + c.name + ":" + cm.name();
    out.push_back(std::move(r));
  };
  const RegularPiece p(c, cm);
  if (all || check == "covariance") {
    tag(check_covariance(p));
    tag(check_semidirect(p));
  }
  if (all || check == "braid") {
    tag(check_braid_finite(p));
    CheckReport unit = check_braid_represented(unit_quantum_2R(2, Quantum2R::tau_identity(2), 2));
    unit.name = "braid_unit";
    tag(unit);
    for (double q : {1.1, 1.3, 2.0}) {
      CheckReport r = check_braid_represented(uq_sl2_inn_2R(q));
      r.name = fmt::format("braid_uq(q={})", q);
      tag(r);
    }
  }
  if (all || check == "star") tag(check_star_ops(p));
  if (all || check == "observables") {
    ObservableSpace obs = observables(c, cm);
    out.push_back(obs.report);
    tag(check_homotopy_fixed_points(p, obs));
  }
  return out;
}

}  // namespace twocs
