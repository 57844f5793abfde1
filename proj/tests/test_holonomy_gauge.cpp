#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "twocs/errors.hpp"
#include "twocs/holonomy_gauge.hpp"

using namespace twocs;

namespace {

GaugeTransform random_gauge(const TwoComplex& c, const CrossedModule& cm, std::mt19937& rng) {
  std::uniform_int_distribution<int> dg(0, cm.G().order() - 1), dh(0, cm.H().order() - 1);
  GaugeTransform z = identity_gauge(c, cm);
  for (auto& a : z.a) a = dg(rng);
  for (auto& y : z.gamma) y = dh(rng);
  return z;
}

std::vector<TwoComplex> small_lattices() {
  return {TwoComplex::fundamental(), TwoComplex::bigon(), TwoComplex::square(), TwoComplex::theta()};
}

}  // namespace

TEST(Flatness, IdentityDecorationIsFlat) {
  for (const auto& c : TwoComplex::library())
    for (const auto& cm : CrossedModule::library()) {
      FlatConfig x{std::vector<int>(c.num_edges(), cm.G().identity()), std::vector<int>(c.num_faces(), cm.H().identity())};
      EXPECT_TRUE(is_flat(c, cm, x));
    }
}

TEST(Flatness, FundamentalFace) {
  auto c = TwoComplex::fundamental();
  auto id = CrossedModule::z2_id_z2();
  std::vector<FlatConfig> expect{{{0}, {0}}, {{1}, {0}}};
  EXPECT_EQ(enumerate_flat(c, id), expect);
  auto rep = check_flat(c, id, {{0}, {1}});
  EXPECT_FALSE(rep.flat);
  EXPECT_FALSE(rep.face_ok[0]);
  EXPECT_EQ(rep.face_defect[0], 1);
  EXPECT_EQ(enumerate_flat(c, CrossedModule::z2_zero_z2()).size(), 4u);
  EXPECT_EQ(enumerate_flat(c, CrossedModule::trivial()).size(), 1u);
  EXPECT_THROW(check_flat(c, id, {{0, 1}, {0}}), SchemaError);
}

TEST(Flatness, EnumerationMatchesBruteForce) {
  auto lattices = TwoComplex::library();
  std::vector<CrossedModule> groups = CrossedModule::library();
  groups.push_back(CrossedModule::inn_z3());
  for (const auto& c : lattices)
    for (const auto& cm : groups) {
      if (raw_decoration_count(c, cm) > 3'000'000) continue;
      EXPECT_EQ(enumerate_flat(c, cm), oracle::brute_flat(c, cm)) << c.name << " x " << cm.name();
    }
}

TEST(Flatness, TetrahedronImpliedIdentity) {
  auto c = TwoComplex::tetrahedron();
  auto cm = CrossedModule::inn_s3();
  const auto& G = cm.G();
  const auto& H = cm.H();
  for (const auto& x : enumerate_flat(c, cm)) {
    // b013 b123 = b023 (h23^-1 ▷ b012)
    EXPECT_EQ(H.mul(x.b[1], x.b[3]), H.mul(x.b[2], cm.act(G.inv(x.h[5]), x.b[0])));
  }
}

TEST(Flatness, TwoFlatnessIsAConstraintForNonInjectiveT) {
  auto c = TwoComplex::tetrahedron();
  auto cm = CrossedModule::z2_zero_z2();
  // t ≡ 0: edges form a flat Z2 connection (8 of 64), and 2-flatness keeps
  // half of the 16 face labellings.
  EXPECT_EQ(enumerate_flat(c, cm).size(), 8u * 8u);
}

TEST(Flatness, BudgetExceeded) {
  EXPECT_THROW(enumerate_flat(TwoComplex::tetrahedron(), CrossedModule::inn_s3(), 1000), BudgetExceeded);
}

TEST(Gauge, TrivialGaugeIsIdentity) {
  for (const auto& c : small_lattices()) {
    auto cm = CrossedModule::inn_s3();
    for (const auto& x : enumerate_flat(c, cm)) EXPECT_EQ(gauge_apply(c, cm, x, identity_gauge(c, cm)), x);
  }
}

TEST(Gauge, PureVertexGaugeOfIdentity) {
  auto c = TwoComplex::square();
  auto cm = CrossedModule::inn_s3();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto z = random_gauge(c, cm, rng);
    std::fill(z.gamma.begin(), z.gamma.end(), cm.H().identity());
    FlatConfig id{std::vector<int>(4, 0), {0}};
    auto y = gauge_apply(c, cm, id, z);
    for (int e = 0; e < 4; ++e)
      EXPECT_EQ(y.h[e], cm.G().mul(cm.G().inv(z.a[c.edges[e].src]), z.a[c.edges[e].tgt]));
    EXPECT_EQ(y.b[0], cm.H().identity());
  }
}

TEST(Gauge, PreservesFlatnessAndComposes) {
  std::mt19937 rng(5);
  for (const auto& c : small_lattices())
    for (const auto& cm : CrossedModule::library()) {
      const auto configs = enumerate_flat(c, cm);
      for (int trial = 0; trial < 30; ++trial) {
        auto z = random_gauge(c, cm, rng), z2 = random_gauge(c, cm, rng);
        const auto& x = configs[trial % configs.size()];
        auto y = gauge_apply(c, cm, x, z);
        EXPECT_TRUE(oracle::raw_flat(c, cm, y)) << c.name << " x " << cm.name();
        EXPECT_EQ(gauge_apply(c, cm, y, z2), gauge_apply(c, cm, x, compose(c, cm, z, z2)));
        EXPECT_EQ(gauge_apply(c, cm, y, inverse(c, cm, z)), x);
      }
    }
}

TEST(Gauge, CompositionExhaustiveOnFundamentalFace) {
  auto c = TwoComplex::fundamental();
  for (const auto& cm : CrossedModule::library()) {
    const auto gauges = all_gauges(c, cm);
    for (const auto& x : enumerate_flat(c, cm))
      for (const auto& z : gauges)
        for (const auto& z2 : gauges)
          ASSERT_EQ(gauge_apply(c, cm, gauge_apply(c, cm, x, z), z2), gauge_apply(c, cm, x, compose(c, cm, z, z2)));
  }
}

TEST(Gauge, GroupLawsOfComposition) {
  auto c = TwoComplex::square();
  auto cm = CrossedModule::inn_s3();
  std::mt19937 rng(17);
  const auto id = identity_gauge(c, cm);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_gauge(c, cm, rng), b = random_gauge(c, cm, rng), d = random_gauge(c, cm, rng);
    EXPECT_EQ(compose(c, cm, compose(c, cm, a, b), d), compose(c, cm, a, compose(c, cm, b, d)));
    EXPECT_EQ(compose(c, cm, a, id), a);
    EXPECT_EQ(compose(c, cm, id, a), a);
    EXPECT_EQ(compose(c, cm, a, inverse(c, cm, a)), id);
  }
}

TEST(Secondary, TrivialModificationIsIdentity) {
  auto c = TwoComplex::square();
  auto cm = CrossedModule::inn_s3();
  std::mt19937 rng(2);
  auto z = random_gauge(c, cm, rng);
  SecondaryGauge one{std::vector<int>(c.num_vertices, cm.H().identity())};
  for (const auto& x : enumerate_flat(c, cm)) EXPECT_EQ(secondary_apply(c, cm, x, z, one), z);
}

TEST(Secondary, ModifiedTransformsActIdentically) {
  std::mt19937 rng(9);
  for (const auto& c : small_lattices())
    for (const auto& cm : CrossedModule::library()) {
      std::uniform_int_distribution<int> dh(0, cm.H().order() - 1);
      for (const auto& x : enumerate_flat(c, cm)) {
        auto z = random_gauge(c, cm, rng);
        SecondaryGauge m{std::vector<int>(c.num_vertices)};
        for (auto& v : m.m) v = dh(rng);
        auto z2 = secondary_apply(c, cm, x, z, m);
        EXPECT_EQ(gauge_apply(c, cm, x, z), gauge_apply(c, cm, x, z2)) << c.name << " x " << cm.name();
      }
    }
}

TEST(Secondary, ExhaustiveInnS3FundamentalFace) {
  auto c = TwoComplex::fundamental();
  auto cm = CrossedModule::inn_s3();
  const auto gauges = all_gauges(c, cm);
  for (const auto& x : enumerate_flat(c, cm))
    for (const auto& z : gauges)
      for (int m = 0; m < 6; ++m)
        ASSERT_EQ(gauge_apply(c, cm, x, z), gauge_apply(c, cm, x, secondary_apply(c, cm, x, z, {{m}})));
}

TEST(Secondary, OrbitSizeForInjectiveT) {
  // For injective t the modification m ↦ secondary_apply(ζ, m) is free, so each
  // secondary orbit of a gauge transform has |H|^|V| elements.
  auto c = TwoComplex::square();
  auto cm = CrossedModule::inn_s3();
  std::mt19937 rng(4);
  const auto x = enumerate_flat(c, cm)[37];
  auto z = random_gauge(c, cm, rng);
  std::set<GaugeTransform> orbit;
  std::vector<int> m(4, 0);
  while (true) {
    orbit.insert(secondary_apply(c, cm, x, z, {m}));
    int i = 3;
    while (i >= 0 && ++m[i] == 6) m[i--] = 0;
    if (i < 0) break;
  }
  EXPECT_EQ(orbit.size(), 6u * 6 * 6 * 6);
}

TEST(Orbits, KnownCounts) {
  auto f = TwoComplex::fundamental();
  EXPECT_EQ(gauge_orbits(f, CrossedModule::trivial()).num_orbits(), 1);
  EXPECT_EQ(gauge_orbits(f, CrossedModule::z2_zero_z2()).num_orbits(), 4);
  EXPECT_EQ(gauge_orbits(f, CrossedModule::z2_id_z2()).num_orbits(), oracle::brute_orbit_count(f, CrossedModule::z2_id_z2()));
  EXPECT_EQ(gauge_orbits(f, CrossedModule::z2_id_z2()).num_orbits(), 1);
}

TEST(Orbits, UnionFindMatchesFullGroupScan) {
  for (const auto& c : {TwoComplex::fundamental(), TwoComplex::bigon(), TwoComplex::theta()})
    for (const auto& cm : CrossedModule::library()) {
      if (gauge_group_order(c, cm) > 20000) continue;
      auto op = gauge_orbits(c, cm);
      EXPECT_EQ(op.num_orbits(), oracle::brute_orbit_count(c, cm)) << c.name << " x " << cm.name();
      for (int r : op.representatives) EXPECT_EQ(op.orbits[op.orbit_of[r]].front(), r);
    }
}

TEST(Projector, IdempotentRankMatchesOrbitsAndObservables) {
  for (const auto& c : {TwoComplex::fundamental(), TwoComplex::bigon(), TwoComplex::square(), TwoComplex::theta()})
    for (const auto& cm : CrossedModule::library()) {
      auto op = gauge_orbits(c, cm);
      InvariantProjector p(c, cm, op.configs);
      auto s = summarize_projector(p);
      EXPECT_TRUE(s.idempotent) << c.name << " x " << cm.name();
      EXPECT_EQ(s.trace, Rational(op.num_orbits()));
      EXPECT_EQ(s.rank_mod_p, op.num_orbits());
      EXPECT_EQ(observable_dimension(c, cm, op.configs), op.num_orbits());
    }
}

TEST(Projector, CharacteristicFunctionsAndInvariantStates) {
  auto c = TwoComplex::theta();
  auto cm = CrossedModule::z4_x2_z4();
  auto op = gauge_orbits(c, cm);
  InvariantProjector p(c, cm, op.configs);
  for (int k = 0; k < op.num_orbits(); ++k) {
    const auto& orbit = op.orbits[k];
    auto img = p.apply({{orbit.front(), Rational(1)}});
    ASSERT_EQ(img.size(), orbit.size());
    for (int i : orbit) EXPECT_EQ(img.at(i), Rational(1, static_cast<std::int64_t>(orbit.size())));
    SparseState invariant;
    for (int i : orbit) invariant[i] = Rational(3, 7);
    EXPECT_EQ(p.apply(invariant), invariant);
  }
}

TEST(SparseRank, SmallSystems) {
  EXPECT_EQ(sparse_rank_mod_p({{{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}, {{1, 5}}}), 2);
  EXPECT_EQ(sparse_rank_mod_p({}), 0);
  EXPECT_EQ(sparse_rank_mod_p({{{3, 2147483647}}}), 0);
}

TEST(SplitGlue, FibresHaveExpectedSizeAndGlueBack) {
  for (const auto& c : {TwoComplex::fundamental(), TwoComplex::square(), TwoComplex::theta()})
    for (const auto& cm : CrossedModule::library()) {
      auto h = split_face(c, 0, SplitKind::kHorizontal, 1);
      auto v = split_face(c, 0, SplitKind::kVertical);
      const auto refined_h = enumerate_flat(h.refined, cm);
      const auto refined_v = enumerate_flat(v.refined, cm);
      for (const auto& x : enumerate_flat(c, cm)) {
        auto fh = split_fibre(h, cm, x);
        auto fv = split_fibre(v, cm, x);
        EXPECT_EQ(static_cast<int>(fh.size()), cm.G().order() * cm.H().order()) << c.name << " x " << cm.name();
        EXPECT_EQ(static_cast<int>(fv.size()), cm.H().order());
        for (const auto& y : fh) EXPECT_EQ(glue_config(h, cm, y), x);
        for (const auto& y : fv) EXPECT_EQ(glue_config(v, cm, y), x);
      }
      // The fibres partition the refined flat set.
      for (const auto& y : refined_h) EXPECT_TRUE(is_flat(c, cm, glue_config(h, cm, y)));
      for (const auto& y : refined_v) EXPECT_TRUE(is_flat(c, cm, glue_config(v, cm, y)));
      EXPECT_EQ(refined_h.size(), enumerate_flat(c, cm).size() * cm.G().order() * cm.H().order());
      EXPECT_EQ(refined_v.size(), enumerate_flat(c, cm).size() * cm.H().order());
    }
}

TEST(SplitGlue, GaugeCovariance) {
  std::mt19937 rng(21);
  for (const auto& c : {TwoComplex::fundamental(), TwoComplex::square()})
    for (const auto& cm : CrossedModule::library())
      for (auto kind : {SplitKind::kHorizontal, SplitKind::kVertical}) {
        auto sd = split_face(c, 0, kind, 2);
        for (const auto& y : enumerate_flat(sd.refined, cm)) {
          auto z = random_gauge(sd.refined, cm, rng);
          EXPECT_EQ(glue_config(sd, cm, gauge_apply(sd.refined, cm, y, z)),
                    gauge_apply(c, cm, glue_config(sd, cm, y), glue_gauge(sd, cm, y, z)))
              << c.name << " x " << cm.name();
        }
      }
}

TEST(Dagger, ConfigMapsAreFlatInvolutiveAndEquivariant) {
  std::mt19937 rng(8);
  for (const auto& c : TwoComplex::library())
    for (const auto& cm : CrossedModule::library()) {
      if (raw_decoration_count(c, cm) > 1'000'000) continue;
      for (auto kind : {DaggerKind::kFraming, DaggerKind::kOrientation}) {
        auto [d, map] = apply_dagger(c, kind);
        for (const auto& x : enumerate_flat(c, cm)) {
          auto y = dagger_config(c, cm, kind, x);
          ASSERT_TRUE(oracle::raw_flat(d, cm, y)) << c.name << " x " << cm.name();
          EXPECT_EQ(dagger_config(d, cm, kind, y), x);
          auto z = random_gauge(c, cm, rng);
          EXPECT_EQ(dagger_config(c, cm, kind, gauge_apply(c, cm, x, z)),
                    gauge_apply(d, cm, y, dagger_gauge(c, cm, kind, x, z)));
        }
      }
    }
}
