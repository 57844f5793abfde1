#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "twocs/errors.hpp"
#include "twocs/fock_rosly.hpp"
#include "twocs/rmatrix.hpp"

using namespace twocs;

namespace {

Mat m2(cplx a, cplx b, cplx c, cplx d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

// r₀ = e⊗f + h⊗h/4 assembled from explicit matrices.
Mat explicit_r0() {
  const Mat e = m2(0, 1, 0, 0), f = m2(0, 0, 1, 0), h = m2(1, 0, 0, -1);
  return kron(e, f) + 0.25 * kron(h, h);
}

// Brute-force CYBE by explicit tensor-index loops.
double brute_cybe(const Mat& r) {
  auto idx = [](int a, int b, int c) { return (a * 2 + b) * 2 + c; };
  Mat r12 = Mat::Zero(8, 8), r13 = Mat::Zero(8, 8), r23 = Mat::Zero(8, 8);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int x = 0; x < 2; ++x)
          for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) {
              if (c == z) r12(idx(a, b, c), idx(x, y, z)) = r(a * 2 + b, x * 2 + y);
              if (b == y) r13(idx(a, b, c), idx(x, y, z)) = r(a * 2 + c, x * 2 + z);
              if (a == x) r23(idx(a, b, c), idx(x, y, z)) = r(b * 2 + c, y * 2 + z);
            }
  const Mat s = r12 * r13 - r13 * r12 + r12 * r23 - r23 * r12 + r13 * r23 - r23 * r13;
  return s.norm();
}

Lie2Algebra h_trivial_sl2() {
  Lie2Algebra l;
  l.name = "sl2_trivial_h";
  l.g_alg = MatrixLieAlgebra::sl2();
  l.h_alg = MatrixLieAlgebra::zero();
  l.t_lin = Mat::Zero(3, 0);
  l.pairing = Mat::Zero(3, 3);
  return l;
}

TwoComplex far_apart() {
  TwoComplex c;
  c.name = "far_apart";
  c.num_vertices = 4;
  c.edges = {{0, 1, 1}, {0, 1, 1}, {2, 3, 1}, {2, 3, 1}};
  c.faces = {{0, {{1, 1}}, 1}, {2, {{3, 1}}, 1}};
  return c;
}

FockRoslyModel inn_model(const TwoComplex& c, const Mat& r0) {
  return FockRoslyModel(c, Lie2Algebra::inn_sl2(), r0, r0, DeformationParams{});
}

}  // namespace

TEST(Classical2R, ZeroHasZeroResiduals) {
  const auto rep = check_2cybe(Classical2R::zero(Lie2Algebra::inn_sl2()));
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.residual, 0.0);
}

TEST(Classical2R, StandardInnLiftSolvesCybeAgainstExplicitTensor) {
  const auto r = Classical2R::standard_inn_sl2();
  const auto rep = check_2cybe(r);
  EXPECT_TRUE(rep.pass) << rep.residual;
  EXPECT_LT(rep.residual, 1e-12);
  const Mat r0 = tensor_from_coeffs(r.alg.g_alg, r.degree0_image());
  EXPECT_LT((r0 - explicit_r0()).norm(), 1e-15);
  EXPECT_LT(brute_cybe(explicit_r0()), 1e-12);
  EXPECT_NEAR(cybe_residual(r0, 2), brute_cybe(r0), 1e-14);
}

TEST(Classical2R, PerturbationScalesLinearly) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  Mat noise(3, 3);
  for (int i = 0; i < 9; ++i) noise(i / 3, i % 3) = nd(rng);
  auto residual = [&](double eps) {
    auto r = Classical2R::standard_inn_sl2();
    r.r_gh += eps * noise;
    return check_2cybe(r).residual;
  };
  const double a = residual(1e-3), b = residual(1e-5);
  EXPECT_GT(a, 1e-6);
  EXPECT_NEAR(a / b, 100.0, 5.0);
  EXPECT_FALSE(check_2cybe([&] {
                 auto r = Classical2R::standard_inn_sl2();
                 r.r_gh += 1e-3 * noise;
                 return r;
               }()).pass);
}

TEST(Classical2R, ZeroTModuleHasZeroImage) {
  const auto l = Lie2Algebra::sl2_zero_v();
  auto r = Classical2R::zero(l);
  r.r_gh(0, 1) = 1.0;
  r.r_hg(1, 2) = 2.0;
  EXPECT_EQ(r.degree0_image().norm(), 0.0);
  EXPECT_TRUE(check_2cybe(r).pass);
}

TEST(UqSl2, MatchesDrinfeldJimboFormAndSolvesYbe) {
  for (double q : {1.1, 1.3, 2.0}) {
    const UqSl2 u(q);
    Mat dj = Mat::Zero(4, 4);
    dj(0, 0) = q;
    dj(1, 1) = 1;
    dj(2, 2) = 1;
    dj(3, 3) = q;
    dj(1, 2) = q - 1 / q;
    EXPECT_LT((u.R() - dj / std::sqrt(q)).norm(), 1e-14);
    EXPECT_LT(u.ybe_residual(), 1e-12);
    EXPECT_LT(u.intertwining_residual(), 1e-10);
    EXPECT_LT(u.quasi1_residual(), 1e-10);
    EXPECT_LT(u.quasi2_residual(), 1e-10);
    EXPECT_LT(u.antipode_residual(), 1e-10);
  }
}

TEST(UqSl2, CoproductIsAlgebraMapOnRelations) {
  const UqSl2 u(1.3);
  const double q = 1.3;
  const Mat de = u.coproduct('E'), df = u.coproduct('F'), dk = u.coproduct('K');
  const Mat dkinv = dk.inverse();
  // [E,F] = (K − K⁻¹)/(q − q⁻¹) and K E K⁻¹ = q² E survive Δ.
  EXPECT_LT((de * df - df * de - (dk - dkinv) / (q - 1 / q)).norm(), 1e-12);
  EXPECT_LT((dk * de * dkinv - q * q * de).norm(), 1e-12);
  EXPECT_LT((u.E() * u.F() - u.F() * u.E() - (u.K() - u.K().inverse()) / (q - 1 / q)).norm(),
            1e-12);
}

TEST(Quantum2R, IdentityBootstrapsToUnit) {
  const auto r = bootstrap_quantum_2R(Mat::Identity(4, 4), 2, Quantum2R::tau_identity(2), 2);
  EXPECT_LT((r.Rl - Mat::Identity(4, 4)).norm(), 1e-14);
  EXPECT_LT(check_equivariance(r).residual, 1e-14);
  EXPECT_EQ(check_2ybe(r).residual, 0.0);
  const auto u = unit_quantum_2R(2, Quantum2R::tau_identity(2), 2);
  EXPECT_EQ(check_2ybe(u).residual, 0.0);
}

TEST(Quantum2R, RejectsNonYbeInput) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> nd;
  Mat r = Mat::Identity(4, 4);
  for (int i = 0; i < 16; ++i) r(i / 4, i % 4) += 0.3 * nd(rng);
  EXPECT_THROW(bootstrap_quantum_2R(r, 2, Quantum2R::tau_identity(2), 2), DomainError);
}

TEST(Quantum2R, UqInnBootstrapPassesAllResiduals) {
  for (double q : {1.1, 1.3, 2.0}) {
    const auto r = uq_sl2_inn_2R(q);
    EXPECT_LT(ybe_residual(r.R0, 2), 1e-12);
    const auto eq = check_equivariance(r);
    EXPECT_TRUE(eq.pass) << eq.residual;
    const auto yb = check_2ybe(r);
    EXPECT_TRUE(yb.pass) << yb.residual;
    EXPECT_LT(yb.residual, 1e-10);
    // Inn: t* is bijective, so the degree-0 image is R₀ itself.
    EXPECT_LT((apply_leg_map(r.Rl, 2, 2, 1, r.tau, 2) - r.R0).norm(), 1e-12);
  }
}

TEST(Quantum2R, TrivialTForcesScalarImage) {
  const Mat tau = Quantum2R::tau_trivial(2);
  const auto r = bootstrap_quantum_2R(UqSl2(1.3).R(), 2, tau, 1);
  EXPECT_TRUE(check_equivariance(r).pass);
  const Mat image = apply_leg_map(r.Rl, 2, 1, 1, tau, 2);
  const cplx s = image(0, 0);
  EXPECT_LT((image - s * Mat::Identity(4, 4)).norm(), 1e-12);
  EXPECT_TRUE(check_2ybe(r).pass);
}

TEST(Quantum2R, TransposedBlockFailsTwoYbe) {
  auto r = uq_sl2_inn_2R(1.3);
  r.Rl = r.Rl.transpose().eval();
  const auto rep = check_2ybe(r);
  EXPECT_FALSE(rep.pass);
  EXPECT_GT(rep.residual, 1e-2);
}

TEST(Semiclassical, UqLadderHalves) {
  const auto lad = semiclassical_limit_check(uq_sl2_family, explicit_r0());
  ASSERT_EQ(lad.ratio.size(), 6u);
  for (double x : lad.ratio) EXPECT_NEAR(x, 0.5, 0.1);
  EXPECT_TRUE(lad.report.pass);
  EXPECT_FALSE(lad.plateau);
}

TEST(Semiclassical, ExponentialFamilyHalves) {
  const Mat r = explicit_r0();
  const auto lad = semiclassical_limit_check([&](double h) { return exp_family(r, h); }, r);
  for (double x : lad.ratio) EXPECT_NEAR(x, 0.5, 0.02);
  EXPECT_TRUE(lad.report.pass);
}

TEST(Semiclassical, WrongRPlateaus) {
  Mat wrong = explicit_r0();
  wrong(0, 0) += 0.2;
  const auto lad = semiclassical_limit_check(uq_sl2_family, wrong);
  EXPECT_TRUE(lad.plateau);
  EXPECT_FALSE(lad.report.pass);
  EXPECT_NEAR(lad.error.back(), 0.2, 0.01);
}

TEST(DeformationParams, Validation) {
  EXPECT_THROW((DeformationParams{0.0, {}}).validate(), DomainError);
  EXPECT_THROW((DeformationParams{10.0, 1000.0}).validate(), DomainError);
  EXPECT_NO_THROW((DeformationParams{10.0, 20.0}).validate());
  EXPECT_NEAR((DeformationParams{100.0, {}}).hbar(), 2 * M_PI / 100, 1e-15);
}

TEST(PolyAlgebra, DerivationOfInverseMatchesFiniteDifference) {
  PolyAlgebra a;
  Mat x = m2(1.2, 0.3, -0.4, 0.9);
  const int v = a.add_variable("X", x);
  const Mat gen = m2(0.1, 0.7, -0.2, 0.3);
  VectorField fld;
  MatWord w;
  w.consts = {Mat::Identity(2, 2), gen};
  w.vars = {v};
  fld.terms.push_back({v, 1.0, w});  // D X = X·gen
  const TracePoly p = a.entry({v, a.inverse(v), v}, 0, 1, 2);
  const cplx d = a.eval(a.derive(fld, p));
  const double eps = 1e-6;
  auto value_at = [&](const Mat& m) {
    const Mat prod = m * m.inverse() * m;
    return prod(0, 1);
  };
  const Mat x1 = x + eps * x * gen, x0 = x - eps * x * gen;
  EXPECT_NEAR(std::abs(d - (value_at(x1) - value_at(x0)) / (2 * eps)), 0.0, 1e-6);
}

TEST(FockRosly, HTrivialReducesToHeisBracket) {
  const Mat r0 = standard_sl2_r0_coeffs();
  for (const auto& c : {TwoComplex::bowtie(), TwoComplex::square(), TwoComplex::fundamental(),
                        TwoComplex::theta()}) {
    FockRoslyModel m(c, h_trivial_sl2(), r0, Mat::Zero(0, 0), DeformationParams{});
    EXPECT_FALSE(m.has_face_labels());
    EXPECT_LT(heis_reduction_residual(m, r0), 1e-12) << c.name;
  }
}

TEST(FockRosly, SklyaninFormOnSingleEdge) {
  // One edge u→w alone: {T ⊗, T} = κ (r_a (T⊗T) + (T⊗T) r_a).
  TwoComplex c;
  c.num_vertices = 2;
  c.edges = {{0, 1, 1}};
  const Mat r0 = standard_sl2_r0_coeffs();
  FockRoslyModel m(c, h_trivial_sl2(), r0, Mat::Zero(0, 0), DeformationParams{});
  const Mat t = m.algebra().value(m.edge_var(0));
  const Mat r = explicit_r0();
  const Mat ra = 0.5 * (r - leg_swap(r, 2));
  const Mat expect = m.kappa() * (ra * kron(t, t) + kron(t, t) * ra);
  EXPECT_LT((m.edge_bracket_matrix(0, 0) - expect).norm(), 1e-12);
}

TEST(FockRosly, DelocalizedFacesHaveZeroBracket) {
  auto m = inn_model(far_apart(), standard_sl2_r0_coeffs());
  EXPECT_EQ(m.bracket_matrix(0, 1).norm(), 0.0);
  EXPECT_EQ(m.bracket_matrix(0, 1, true).norm(), 0.0);
  EXPECT_GT(m.bracket_matrix(0, 0).norm(), 1e-6);
}

TEST(FockRosly, AdjacentFaceBracketIsSixteenSquare) {
  auto m = inn_model(TwoComplex::bowtie(), standard_sl2_r0_coeffs());
  const Mat b = m.bracket_matrix(0, 1);
  EXPECT_EQ(b.rows(), 16);
  EXPECT_GT(b.norm(), 1e-6);
  // Antisymmetry: {ξ_ab, ξ′_cd} = −{ξ′_cd, ξ_ab}.
  const Mat b2 = m.bracket_matrix(1, 0);
  for (int a = 0; a < 4; ++a)
    for (int bb = 0; bb < 4; ++bb)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          EXPECT_NEAR(std::abs(b(a * 4 + c, bb * 4 + d) + b2(c * 4 + a, d * 4 + bb)), 0.0, 1e-12);
}

TEST(FockRosly, JacobiHoldsOnAdjacentFaceStates) {
  auto m = inn_model(TwoComplex::bowtie(), standard_sl2_r0_coeffs());
  std::vector<TracePoly> states;
  for (int f = 0; f < 2; ++f)
    for (auto& s : m.state_functions(f)) states.push_back(s);
  const auto rep = check_bracket_jacobi_compat(m, states, {60, 0, 17, 1e-9});
  EXPECT_TRUE(rep.jacobi_h.pass) << rep.jacobi_h.residual;
  EXPECT_TRUE(rep.jacobi_v.pass) << rep.jacobi_v.residual;
}

TEST(FockRosly, EngineJacobiatorMatchesPolynomialRoute) {
  auto m = inn_model(TwoComplex::bowtie(), standard_sl2_r0_coeffs());
  const auto s = m.state_functions(0);
  const auto s1 = m.state_functions(1);
  const cplx direct = m.algebra().jacobiator(m.horizontal(), s[0], s[5], s1[6]);
  EXPECT_LT(std::abs(direct), 1e-9);
}

TEST(FockRosly, NonCybeRFailsJacobi) {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> nd;
  Mat r(3, 3);
  for (int i = 0; i < 9; ++i) r(i / 3, i % 3) = nd(rng);
  FockRoslyModel m(TwoComplex::bowtie(), Lie2Algebra::inn_sl2(), r, r, DeformationParams{10.0, {}});
  std::vector<TracePoly> states;
  for (int f = 0; f < 2; ++f)
    for (auto& s : m.state_functions(f)) states.push_back(s);
  const auto rep = check_bracket_jacobi_compat(m, states, {40, 0, 17, 1e-9});
  EXPECT_FALSE(rep.jacobi_h.pass);
  EXPECT_GT(rep.jacobi_h.residual, 1e-3);
}

TEST(FockRosly, ZeroRHasZeroResiduals) {
  const Mat z = Mat::Zero(3, 3);
  auto m = inn_model(TwoComplex::bowtie(), z);
  std::vector<TracePoly> states = m.state_functions(0);
  const auto rep = check_bracket_jacobi_compat(m, states, {20, 8, 17, 1e-9});
  EXPECT_EQ(rep.summary().residual, 0.0);
}

TEST(FockRosly, ReversedFrameIsUnsupported) {
  TwoComplex c = TwoComplex::bowtie();
  c.faces[0].frame = -1;
  EXPECT_THROW(inn_model(c, standard_sl2_r0_coeffs()), DomainError);
  EXPECT_THROW(inn_model(TwoComplex::square(), standard_sl2_r0_coeffs()).state(1), DomainError);
}

TEST(StarCommutator, UnitRGivesZero) {
  const Mat t = m2(1.1, 0.2, -0.3, 0.8), t2 = m2(0.9, -0.1, 0.4, 1.2);
  const auto cs = end_contacts(TwoComplex::bowtie(), 0, 1, false);
  EXPECT_EQ(star_commutator(t, t2, cs, Mat::Identity(4, 4)).norm(), 0.0);
}

TEST(StarCommutator, NonGluableThrows) {
  const Mat t = Mat::Identity(2, 2);
  EXPECT_THROW(star_commutator(t, t, end_contacts(far_apart(), 0, 2, false), UqSl2(1.1).R()),
               DomainError);
}

TEST(StarCommutator, LimitReproducesBracketWithLinearSlope) {
  const Mat t = m2(1.1, 0.2, -0.3, 0.8), t2 = m2(0.9, -0.1, 0.4, 1.2);
  const Mat r = explicit_r0();
  for (auto [e, e2] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 1}}) {
    const auto cs = end_contacts(TwoComplex::bowtie(), e, e2, false);
    const Mat limit = heis_bracket(t, t2, cs, r, 1.0);
    auto err = [&](double h) {
      return (star_commutator(t, t2, cs, uq_sl2_family(h)) / h - limit).norm();
    };
    const double ratio = err(0.02) / err(0.01);
    EXPECT_GE(ratio, 1.7);
    EXPECT_LE(ratio, 2.3);
    EXPECT_LT(err(0.001), 1e-2);
  }
}

TEST(FockRosly, CompatDefectIsCubicInCouplings) {
  auto defect = [](double k, double kp, bool vertical_on) {
    const Mat r0 = standard_sl2_r0_coeffs();
    FockRoslyModel m(TwoComplex::bowtie(), Lie2Algebra::inn_sl2(), r0,
                     vertical_on ? r0 : Mat::Zero(3, 3), DeformationParams{k, kp});
    std::vector<TracePoly> st = m.state_functions(0);
    for (auto& s : m.face_label_functions(1)) st.push_back(s);
    return check_bracket_jacobi_compat(m, st, {0, 24, 17, 1e-9}).compat.residual;
  };
  EXPECT_EQ(defect(100, 100, false), 0.0);
  const double a = defect(100, 100, true);
  EXPECT_GT(a, 1e-6);
  // Defect ∝ κ²κ′.
  EXPECT_NEAR(defect(200, 100, true) / a, 0.25, 0.01);
  EXPECT_NEAR(defect(100, 200, true) / a, 0.5, 0.02);
  EXPECT_NEAR(defect(200, 200, true) / a, 0.125, 0.01);
}
