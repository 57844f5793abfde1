#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "twocs/errors.hpp"
#include "twocs/two_complex.hpp"

using namespace twocs;

TEST(TwoComplex, LibraryIsValid) {
  for (const auto& c : TwoComplex::library()) {
    auto rep = validate_complex(c);
    EXPECT_TRUE(rep.valid) << c.name << ": " << (rep.violations.empty() ? "" : rep.violations[0]);
  }
  EXPECT_EQ(TwoComplex::tetrahedron().cells.size(), 1u);
  EXPECT_EQ(TwoComplex::by_name("square"), TwoComplex::square());
  EXPECT_THROW(TwoComplex::by_name("torus"), SchemaError);
}

TEST(TwoComplex, FundamentalFace) {
  auto c = TwoComplex::fundamental();
  EXPECT_EQ(c.num_vertices, 1);
  EXPECT_EQ(c.edges[0].src, c.edges[0].tgt);
  EXPECT_EQ(c.face_source(0), c.face_target(0));
}

TEST(TwoComplex, TetrahedronCycleClosesThroughAllFourFaces) {
  auto c = TwoComplex::tetrahedron();
  const auto& cell = c.cells[0];
  Path p = cell.start;
  std::vector<int> used;
  for (const auto& st : cell.steps) {
    p = apply_rewrite(c, p, st);
    used.push_back(st.face);
  }
  EXPECT_EQ(p, cell.start);
  std::sort(used.begin(), used.end());
  EXPECT_EQ(used, (std::vector<int>{0, 1, 2, 3}));
  // Each interior edge of the cycle is traversed by two faces.
  std::vector<int> count(c.num_edges(), 0);
  for (const auto& f : c.faces) {
    ++count[f.root];
    for (const auto& s : f.boundary) ++count[s.edge];
  }
  for (int n : count) EXPECT_EQ(n, 2);
}

TEST(TwoComplex, ViolationsReported) {
  auto c = TwoComplex::square();
  c.faces[0].boundary = {{1, -1}, {3, 1}};
  auto rep = validate_complex(c);
  EXPECT_FALSE(rep.valid);
  EXPECT_NE(rep.violations[0].find("face 0"), std::string::npos);

  auto t = TwoComplex::tetrahedron();
  t.cells[0].steps.pop_back();
  EXPECT_FALSE(validate_complex(t).valid);
}

TEST(TwoComplex, DanglingReferencesThrow) {
  auto c = TwoComplex::square();
  c.edges[0].tgt = 9;
  EXPECT_THROW(validate_complex(c), SchemaError);
  auto d = TwoComplex::square();
  d.faces[0].boundary.push_back({7, 1});
  EXPECT_THROW(validate_complex(d), SchemaError);
  auto e = TwoComplex::tetrahedron();
  e.cells[0].steps[0].face = 11;
  EXPECT_THROW(validate_complex(e), SchemaError);
}

TEST(Split, HorizontalSquareGivesTwoPiecesSharingCut) {
  auto c = TwoComplex::square();
  auto sd = split_face(c, 0, SplitKind::kHorizontal, 1);
  const auto& g = sd.refined;
  EXPECT_TRUE(validate_complex(g).valid);
  EXPECT_EQ(g.num_faces(), 2);
  EXPECT_EQ(g.num_vertices, 5);
  const auto& f1 = g.faces[sd.piece1];
  const auto& f2 = g.faces[sd.piece2];
  EXPECT_EQ(f1.boundary.back(), (Step{sd.cut_edge, -1}));
  EXPECT_EQ(f2.boundary.front(), (Step{sd.cut_edge, 1}));
  // Recomposition: P1 followed by P2 (cut removed) is the original boundary.
  Path whole(f1.boundary.begin(), f1.boundary.end() - 1);
  whole.insert(whole.end(), f2.boundary.begin() + 1, f2.boundary.end());
  EXPECT_EQ(whole, c.faces[0].boundary);
  EXPECT_EQ(glue_back(sd), c);
}

TEST(Split, EveryCutPositionRoundTrips) {
  for (const auto& c : TwoComplex::library()) {
    for (int f = 0; f < c.num_faces(); ++f) {
      auto v = split_face(c, f, SplitKind::kVertical);
      EXPECT_TRUE(validate_complex(v.refined).valid) << c.name;
      EXPECT_EQ(glue_back(v), c) << c.name;
      if (!c.cells.empty()) {
        EXPECT_THROW(split_face(c, f, SplitKind::kHorizontal), DomainError);
        continue;
      }
      int len = static_cast<int>(c.faces[f].boundary.size());
      for (const auto& s : c.faces[f].boundary) len += s.edge == c.faces[f].root;
      for (int k = 0; k <= len; ++k) {
        auto h = split_face(c, f, SplitKind::kHorizontal, k);
        EXPECT_TRUE(validate_complex(h.refined).valid) << c.name << " k=" << k;
        EXPECT_EQ(glue_back(h), c) << c.name << " k=" << k;
      }
      EXPECT_THROW(split_face(c, f, SplitKind::kHorizontal, len + 1), DomainError);
      EXPECT_THROW(split_face(c, f, SplitKind::kHorizontal, -1), DomainError);
    }
  }
}

TEST(Split, VerticalFundamentalRootIsPieceOneBoundary) {
  auto c = TwoComplex::fundamental();
  auto sd = split_face(c, 0, SplitKind::kVertical);
  const auto& g = sd.refined;
  // e2 = e1 * ∂f1: piece 2 is rooted at the boundary of piece 1.
  EXPECT_EQ(g.root_path(sd.piece2), g.face_target(sd.piece1));
  EXPECT_EQ(g.face_source(sd.piece1), c.root_path(0));
  EXPECT_EQ(g.face_target(sd.piece2), c.face_target(0));
}

TEST(Split, VerticalSplitRewritesThreeCells) {
  auto c = TwoComplex::tetrahedron();
  auto sd = split_face(c, 2, SplitKind::kVertical);
  EXPECT_EQ(sd.refined.cells[0].steps.size(), 5u);
  EXPECT_TRUE(validate_complex(sd.refined).valid);
}

TEST(Split, HorizontalRejectsSharedRoot) {
  TwoComplex c = TwoComplex::theta();
  c.faces[1].root = 0;
  c.faces[1].boundary = {{2, 1}};
  EXPECT_THROW(split_face(c, 0, SplitKind::kHorizontal), DomainError);
}

TEST(Split, QuadrantsMatchSequentialSplits) {
  auto c = TwoComplex::square();
  auto q = quadrant_split(c, 0, 2);
  auto h = split_face(c, 0, SplitKind::kHorizontal, 2);
  auto l = split_face(h.refined, h.piece1, SplitKind::kVertical);
  auto r = split_face(l.refined, h.piece2, SplitKind::kVertical);
  TwoComplex seq = r.refined;
  seq.name = q.refined.name;
  EXPECT_EQ(q.refined, seq);
  const auto& g = q.refined;
  EXPECT_EQ(g.faces[q.x1].root, q.r1);
  EXPECT_EQ(g.faces[q.x1].boundary, (Path{{q.q1, 1}}));
  EXPECT_EQ(g.faces[q.x2].boundary, (Path{{q.q2, 1}}));
  EXPECT_EQ(g.faces[q.x3].root, q.q1);
  EXPECT_EQ(g.faces[q.x4].root, q.q2);
  EXPECT_EQ(g.faces[q.x3].boundary.back(), (Step{q.cut, -1}));
  EXPECT_EQ(g.faces[q.x4].boundary.front(), (Step{q.cut, 1}));
  // The four quadrants are distinct faces.
  std::set<int> ids{q.x1, q.x2, q.x3, q.x4};
  EXPECT_EQ(ids.size(), 4u);
  EXPECT_TRUE(validate_complex(g).valid);
}

TEST(Dagger, OrientationReversalIsInvolutive) {
  for (const auto& c : TwoComplex::library()) {
    auto [d, m] = apply_dagger(c, DaggerKind::kOrientation);
    EXPECT_TRUE(validate_complex(d).valid) << c.name;
    auto [dd, mm] = apply_dagger(d, DaggerKind::kOrientation);
    EXPECT_EQ(dd, c) << c.name;
    auto both = compose(m, mm);
    for (int e = 0; e < c.num_edges(); ++e) EXPECT_EQ(both.edge_map[e], e);
    for (int f = 0; f < c.num_faces(); ++f) EXPECT_EQ(both.face_map[f], f);
  }
}

TEST(Dagger, LoopEdgeReversed) {
  auto [d, m] = apply_dagger(TwoComplex::square(), DaggerKind::kOrientation);
  const auto sq = TwoComplex::square();
  for (int e = 0; e < sq.num_edges(); ++e) {
    EXPECT_EQ(d.edges[e].src, sq.edges[e].tgt);
    EXPECT_EQ(d.edges[e].tgt, sq.edges[e].src);
  }
  auto [f, fm] = apply_dagger(TwoComplex::fundamental(), DaggerKind::kOrientation);
  EXPECT_EQ(f.edges[0].src, 0);
  EXPECT_EQ(f.edges[0].tgt, 0);
  (void)fm;
}

TEST(Dagger, FramingFlipsAndSquaresToIdentity) {
  for (const auto& c : TwoComplex::library()) {
    auto [d, m] = apply_dagger(c, DaggerKind::kFraming);
    EXPECT_TRUE(validate_complex(d).valid) << c.name;
    for (int e = 0; e < c.num_edges(); ++e) EXPECT_EQ(d.edges[e].frame, -c.edges[e].frame);
    for (int f = 0; f < c.num_faces(); ++f) {
      EXPECT_EQ(d.face_source(f), c.face_target(f));
      EXPECT_EQ(d.face_target(f), c.face_source(f));
    }
    EXPECT_EQ(apply_dagger(d, DaggerKind::kFraming).first, c);
  }
}

TEST(Dagger, StrongCommutationOnCells) {
  for (const auto& c : TwoComplex::library()) {
    auto [a1, m1] = apply_dagger(c, DaggerKind::kFraming);
    auto [a12, m12] = apply_dagger(a1, DaggerKind::kOrientation);
    auto [b2, n2] = apply_dagger(c, DaggerKind::kOrientation);
    auto [b21, n21] = apply_dagger(b2, DaggerKind::kFraming);
    EXPECT_EQ(a12, b21) << c.name;
    auto x = compose(m1, m12), y = compose(n2, n21);
    EXPECT_EQ(x.edge_map, y.edge_map);
    EXPECT_EQ(x.face_map, y.face_map);
  }
}
