#include <gtest/gtest.h>

#include <set>

#include "twocs/errors.hpp"
#include "twocs/lattice_2algebra.hpp"

using namespace twocs;

namespace {

std::vector<CrossedModule> finite_library() { return CrossedModule::library(); }

}  // namespace

TEST(RegularPiece, RejectsNonRegularComplexes) {
  EXPECT_THROW(RegularPiece(TwoComplex::square(), CrossedModule::z2_id_z2()), DomainError);
  EXPECT_THROW(RegularPiece(TwoComplex::theta(), CrossedModule::z2_id_z2()), DomainError);
  EXPECT_NO_THROW(RegularPiece(TwoComplex::bigon(), CrossedModule::inn_s3()));
}

TEST(RegularPiece, BigonLabelsCoverTheTwoGroup) {
  for (const auto& cm : finite_library()) {
    const RegularPiece p(TwoComplex::bigon(), cm);
    EXPECT_EQ(p.size(), cm.size()) << cm.name();
  }
}

TEST(Semidirect, UnitAndGaugeTrivialSector) {
  const RegularPiece p(TwoComplex::fundamental(), CrossedModule::inn_s3());
  LatticeState phi(p.size());
  for (int i = 0; i < p.size(); ++i) phi[i] = cplx(i, 1);
  const auto one = lattice_pair(p.constant(1), p.unit());
  const auto x = lattice_pair(phi, p.local(all_gauges(p.lattice(), p.crossed_module())[3]));
  EXPECT_TRUE(equal(semidirect_tensor(p, x, one), x));
  const auto sq = semidirect_tensor(p, lattice_pair(phi, p.unit()), lattice_pair(phi, p.unit()));
  EXPECT_TRUE(equal(sq, lattice_pair(star_product(phi, phi), p.unit())));
}

TEST(Semidirect, AssociativeOnLibrary) {
  for (const auto& cm : finite_library())
    for (const auto& c : {TwoComplex::fundamental(), TwoComplex::bigon()}) {
      const auto rep = check_semidirect(RegularPiece(c, cm), 16);
      EXPECT_TRUE(rep.pass) << c.name << " " << cm.name() << " " << (rep.witnesses.empty() ? "" : rep.witnesses[0]);
    }
}

TEST(Covariance, ExhaustiveOnLibrary) {
  for (const auto& cm : finite_library())
    for (const auto& c : {TwoComplex::fundamental(), TwoComplex::bigon()}) {
      const auto rep = check_covariance(RegularPiece(c, cm));
      EXPECT_TRUE(rep.pass) << c.name << " " << cm.name() << " " << (rep.witnesses.empty() ? "" : rep.witnesses[0]);
      EXPECT_GT(rep.checked, 0);
    }
}

TEST(Covariance, TrivialGaugeLeavesStateFixed) {
  const RegularPiece p(TwoComplex::fundamental(), CrossedModule::z2_id_z2());
  const auto phi = p.characteristic(1);
  EXPECT_EQ(p.right(phi, p.unit()), phi);
  EXPECT_EQ(p.left(p.unit(), phi), phi);
}

TEST(Covariance, BimoduleSidesDifferForNontrivialEdgeParameter) {
  // Z₂ →id Z₂ on the bigon: γ on the target edge only moves the right side.
  const auto cm = CrossedModule::z2_id_z2();
  const RegularPiece p(TwoComplex::bigon(), cm);
  GaugeTransform z = identity_gauge(p.lattice(), cm);
  z.gamma[1] = 1;
  const LocalGauge lz = p.local(z);
  EXPECT_EQ(lz.left, cm.unit());
  EXPECT_NE(lz.right, cm.unit());
}

TEST(Braid, FiniteUnitIsExact) {
  for (const auto& cm : finite_library()) EXPECT_TRUE(check_braid_finite(RegularPiece(TwoComplex::fundamental(), cm)).pass);
}

TEST(Braid, RepresentedMatchesYbe) {
  EXPECT_EQ(braid_residual(unit_quantum_2R(2, Quantum2R::tau_identity(2), 2)), 0.0);
  for (double q : {1.1, 1.3, 2.0}) EXPECT_LT(braid_residual(uq_sl2_inn_2R(q)), 1e-10);
  auto bad = uq_sl2_inn_2R(1.3);
  bad.Rhh = bad.Rhh.transpose().eval();
  EXPECT_GT(braid_residual(bad), 1e-3);
}

TEST(StarOps, ExhaustiveOnLibrary) {
  for (const auto& cm : finite_library())
    for (const auto& c : {TwoComplex::fundamental(), TwoComplex::bigon()}) {
      const auto rep = check_star_ops(RegularPiece(c, cm), 16);
      EXPECT_TRUE(rep.pass) << c.name << " " << cm.name() << " " << (rep.witnesses.empty() ? "" : rep.witnesses[0]);
    }
}

TEST(StarOps, OrientationIsPlainPullbackAndInvolutive) {
  const auto cm = CrossedModule::z2_zero_z2();
  const RegularPiece p(TwoComplex::fundamental(), cm);
  for (int i = 0; i < p.size(); ++i) {
    const auto s = p.star(p.characteristic(i), StarKind::kOrientation);
    const auto x = inversions(cm, p.labels()[i]).first;
    EXPECT_EQ(s, p.characteristic(p.index_of(x)));
  }
}

TEST(StarOps, StarTwoReversesProducts) {
  const auto cm = CrossedModule::inn_s3();
  const RegularPiece p(TwoComplex::bigon(), cm);
  const auto gs = all_gauges(p.lattice(), cm);
  const auto a = lattice_pair(p.characteristic(2), p.local(gs[5]));
  const auto b = lattice_pair(p.characteristic(7), p.local(gs[11]));
  const auto lhs = star(p, semidirect_tensor(p, a, b), StarKind::kOrientation);
  EXPECT_TRUE(equal(lhs, left_semidirect_tensor(p, star(p, b, StarKind::kOrientation),
                                                star(p, a, StarKind::kOrientation))));
}

TEST(Observables, FundamentalZ2ZeroHasFour) {
  const auto obs = observables(TwoComplex::fundamental(), CrossedModule::z2_zero_z2());
  EXPECT_EQ(obs.dimension, 4);
  EXPECT_EQ(obs.orbit_count, 4);
  EXPECT_EQ(obs.projector_rank, 4);
  EXPECT_TRUE(obs.report.pass);
}

TEST(Observables, TrivialGroupIsOneDimensional) {
  EXPECT_EQ(observables(TwoComplex::fundamental(), CrossedModule::trivial()).dimension, 1);
}

// Brute-force orbit count by closure of every configuration under all gauges.
TEST(Observables, InnS3MatchesBruteForceOrbits) {
  const auto c = TwoComplex::fundamental();
  const auto cm = CrossedModule::inn_s3();
  const auto configs = enumerate_flat(c, cm);
  const auto gauges = all_gauges(c, cm);
  std::set<std::set<FlatConfig>> orbits;
  for (const auto& x : configs) {
    std::set<FlatConfig> orb;
    for (const auto& z : gauges) orb.insert(gauge_apply(c, cm, x, z));
    orbits.insert(orb);
  }
  const auto obs = observables(c, cm);
  EXPECT_EQ(obs.dimension, static_cast<int>(orbits.size()));
  EXPECT_TRUE(obs.report.pass);
}

TEST(Observables, NonRegularLatticeUsesGaugeForm) {
  const auto obs = observables(TwoComplex::square(), CrossedModule::z2_id_z2());
  EXPECT_EQ(obs.dimension, obs.orbit_count);
  EXPECT_TRUE(obs.report.pass);
}

TEST(HomotopyFixedPoints, WitnessesOnLibrary) {
  for (const auto& cm : finite_library()) {
    const RegularPiece p(TwoComplex::fundamental(), cm);
    const auto rep = check_homotopy_fixed_points(p, observables(p.lattice(), cm));
    EXPECT_TRUE(rep.pass) << cm.name();
  }
}

TEST(HomotopyFixedPoints, NonInvariantStateHasNoWitness) {
  const auto cm = CrossedModule::inn_s3();
  const RegularPiece p(TwoComplex::fundamental(), cm);
  ObservableSpace fake;
  fake.basis = {p.characteristic(1)};
  EXPECT_FALSE(check_homotopy_fixed_points(p, fake).pass);
}

TEST(Suite, AllChecksPassOnFundamental) {
  for (const auto& cm : finite_library())
    for (const auto& r : lattice2_suite(TwoComplex::fundamental(), cm))
      EXPECT_TRUE(r.pass) << r.name << " " << (r.witnesses.empty() ? "" : r.witnesses[0]);
  EXPECT_THROW(lattice2_suite(TwoComplex::fundamental(), CrossedModule::trivial(), "bogus"), SchemaError);
}
