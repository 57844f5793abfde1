#include "twocs/two_complex.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "twocs/errors.hpp"

namespace twocs {

Path TwoComplex::face_source(int f) const {
  return faces[f].frame > 0 ? root_path(f) : faces[f].boundary;
}

Path TwoComplex::face_target(int f) const {
  return faces[f].frame > 0 ? faces[f].boundary : root_path(f);
}

namespace {

Edge edge(int s, int t) { return Edge{s, t, 1}; }
Face face(int root, Path boundary) { return Face{root, std::move(boundary), 1}; }

}  // namespace

TwoComplex TwoComplex::fundamental() {
  TwoComplex c;
  c.name = "fundamental";
  c.num_vertices = 1;
  c.edges = {edge(0, 0)};
  c.faces = {face(0, {{0, 1}})};
  return c;
}

TwoComplex TwoComplex::bigon() {
  TwoComplex c;
  c.name = "bigon";
  c.num_vertices = 1;
  c.edges = {edge(0, 0), edge(0, 0)};
  c.faces = {face(0, {{1, 1}})};
  return c;
}

TwoComplex TwoComplex::square() {
  TwoComplex c;
  c.name = "square";
  c.num_vertices = 4;
  // a: 0→1, b: 1→2, c: 0→3, d: 3→2
  c.edges = {edge(0, 1), edge(1, 2), edge(0, 3), edge(3, 2)};
  c.faces = {face(0, {{2, 1}, {3, 1}, {1, -1}})};
  return c;
}

TwoComplex TwoComplex::tetrahedron() {
  TwoComplex c;
  c.name = "tetrahedron";
  c.num_vertices = 4;
  // e01 e02 e03 e12 e13 e23
  c.edges = {edge(0, 1), edge(0, 2), edge(0, 3), edge(1, 2), edge(1, 3), edge(2, 3)};
  c.faces = {
      face(1, {{0, 1}, {3, 1}}),  // f012
      face(2, {{0, 1}, {4, 1}}),  // f013
      face(2, {{1, 1}, {5, 1}}),  // f023
      face(4, {{3, 1}, {5, 1}}),  // f123
  };
  Cell3 cell;
  cell.start = {{2, 1}};
  cell.steps = {{1, 1, 0}, {3, 1, 1}, {0, -1, 0}, {2, -1, 0}};
  c.cells = {cell};
  return c;
}

TwoComplex TwoComplex::theta() {
  TwoComplex c;
  c.name = "theta";
  c.num_vertices = 2;
  c.edges = {edge(0, 1), edge(0, 1), edge(0, 1)};
  c.faces = {face(0, {{1, 1}}), face(1, {{2, 1}})};
  return c;
}

TwoComplex TwoComplex::bowtie() {
  TwoComplex c;
  c.name = "bowtie";
  c.num_vertices = 3;
  // e0: 0→1, e1: 1→2, p0: 0→1, p1: 1→2
  c.edges = {edge(0, 1), edge(1, 2), edge(0, 1), edge(1, 2)};
  c.faces = {face(0, {{2, 1}}), face(1, {{3, 1}})};
  return c;
}

std::vector<TwoComplex> TwoComplex::library() {
  return {fundamental(), bigon(), square(), tetrahedron(), theta()};
}

TwoComplex TwoComplex::by_name(const std::string& name) {
  for (auto& c : library())
    if (c.name == name) return c;
  if (name == "bowtie") return bowtie();
  throw SchemaError(fmt::format("unknown lattice '{}'", name));
}

Path reverse_path(const Path& p) {
  Path r(p.rbegin(), p.rend());
  for (auto& s : r) s.orient = -s.orient;
  return r;
}

Path apply_rewrite(const TwoComplex& c, const Path& p, const Rewrite& r) {
  if (r.face < 0 || r.face >= c.num_faces()) throw DomainError("rewrite references unknown face");
  const Path from = r.dir > 0 ? c.face_source(r.face) : c.face_target(r.face);
  const Path to = r.dir > 0 ? c.face_target(r.face) : c.face_source(r.face);
  if (r.at < 0 || r.at + from.size() > p.size() ||
      !std::equal(from.begin(), from.end(), p.begin() + r.at))
    throw DomainError(fmt::format("rewrite by face {} does not match at position {}", r.face, r.at));
  Path out(p.begin(), p.begin() + r.at);
  out.insert(out.end(), to.begin(), to.end());
  out.insert(out.end(), p.begin() + r.at + from.size(), p.end());
  return out;
}

ValidationReport validate_complex(const TwoComplex& c) {
  const int V = c.num_vertices, E = c.num_edges(), F = c.num_faces();
  auto sign_ok = [](int s) { return s == 1 || s == -1; };
  for (int e = 0; e < E; ++e) {
    const auto& ed = c.edges[e];
    if (ed.src < 0 || ed.src >= V || ed.tgt < 0 || ed.tgt >= V)
      throw SchemaError(fmt::format("edge {} references a missing vertex", e));
    if (!sign_ok(ed.frame)) throw SchemaError(fmt::format("edge {} has frame {}", e, ed.frame));
  }
  auto check_steps = [&](const Path& p, const std::string& where) {
    for (const auto& s : p) {
      if (s.edge < 0 || s.edge >= E)
        throw SchemaError(fmt::format("{} references missing edge {}", where, s.edge));
      if (!sign_ok(s.orient)) throw SchemaError(fmt::format("{} has orientation {}", where, s.orient));
    }
  };
  for (int f = 0; f < F; ++f) {
    const auto& fa = c.faces[f];
    if (fa.root < 0 || fa.root >= E)
      throw SchemaError(fmt::format("face {} has missing root edge {}", f, fa.root));
    if (!sign_ok(fa.frame)) throw SchemaError(fmt::format("face {} has frame {}", f, fa.frame));
    check_steps(fa.boundary, fmt::format("face {}", f));
  }
  for (std::size_t k = 0; k < c.cells.size(); ++k) {
    check_steps(c.cells[k].start, fmt::format("3-cell {}", k));
    for (const auto& st : c.cells[k].steps)
      if (st.face < 0 || st.face >= F)
        throw SchemaError(fmt::format("3-cell {} references missing face {}", k, st.face));
  }

  ValidationReport rep;
  auto bad = [&](std::string msg) {
    rep.valid = false;
    rep.violations.push_back(std::move(msg));
  };
  auto contiguous = [&](const Path& p) {
    for (std::size_t i = 1; i < p.size(); ++i)
      if (c.step_tgt(p[i - 1]) != c.step_src(p[i])) return false;
    return true;
  };
  for (int f = 0; f < F; ++f) {
    const auto& fa = c.faces[f];
    const auto& root = c.edges[fa.root];
    if (fa.boundary.empty()) {
      bad(fmt::format("face {}: empty boundary", f));
      continue;
    }
    if (c.step_src(fa.boundary.front()) != root.src)
      bad(fmt::format("face {}: boundary does not start at the source of root edge {}", f, fa.root));
    if (!contiguous(fa.boundary)) bad(fmt::format("face {}: boundary is not an edge path", f));
    if (c.step_tgt(fa.boundary.back()) != root.tgt)
      bad(fmt::format("face {}: boundary does not close up at the target of root edge {}", f, fa.root));
  }
  for (std::size_t k = 0; k < c.cells.size(); ++k) {
    const auto& cell = c.cells[k];
    if (cell.start.empty() || !contiguous(cell.start)) {
      bad(fmt::format("3-cell {}: start is not an edge path", k));
      continue;
    }
    Path p = cell.start;
    bool ok = true;
    for (std::size_t i = 0; i < cell.steps.size() && ok; ++i) {
      try {
        p = apply_rewrite(c, p, cell.steps[i]);
      } catch (const DomainError&) {
        bad(fmt::format("3-cell {}: step {} does not apply", k, i));
        ok = false;
      }
    }
    if (ok && p != cell.start) bad(fmt::format("3-cell {}: face cycle does not close", k));
  }
  return rep;
}

namespace {

// Replaces each traversal of edge r by r1 r2 (ids r and r2).
Path subdivide(const Path& p, int r, int r2) {
  Path out;
  for (const auto& s : p) {
    if (s.edge != r) {
      out.push_back(s);
    } else if (s.orient > 0) {
      out.push_back({r, 1});
      out.push_back({r2, 1});
    } else {
      out.push_back({r2, -1});
      out.push_back({r, -1});
    }
  }
  return out;
}

Path merge(const Path& p, int r2) {
  Path out;
  for (const auto& s : p)
    if (s.edge != r2) out.push_back(s);
  return out;
}

bool path_uses(const Path& p, int e) {
  return std::any_of(p.begin(), p.end(), [e](const Step& s) { return s.edge == e; });
}

void require_face(const TwoComplex& c, int f) {
  if (f < 0 || f >= c.num_faces()) throw DomainError(fmt::format("no face {}", f));
}

}  // namespace

SplitDescriptor split_face(const TwoComplex& c, int f, SplitKind kind, int cut_position) {
  require_face(c, f);
  SplitDescriptor sd;
  sd.face = f;
  sd.kind = kind;
  sd.piece1 = f;
  sd.piece2 = c.num_faces();
  sd.refined = c;
  sd.refined.name = c.name + (kind == SplitKind::kHorizontal ? "/hsplit" : "/vsplit");
  TwoComplex& g = sd.refined;
  const Face orig = c.faces[f];
  const int r = orig.root;

  if (kind == SplitKind::kVertical) {
    const int q = c.num_edges();
    sd.cut_edge = q;
    g.edges.push_back(Edge{c.edges[r].src, c.edges[r].tgt, c.edges[r].frame});
    g.faces[f] = Face{r, {{q, 1}}, orig.frame};
    g.faces.push_back(Face{q, orig.boundary, orig.frame});
    for (auto& cell : g.cells) {
      std::vector<Rewrite> steps;
      for (const auto& st : cell.steps) {
        if (st.face != f) {
          steps.push_back(st);
          continue;
        }
        // Going from [r] to P passes through [q]: piece 1 first, then piece 2.
        const bool outward = st.dir * orig.frame > 0;
        Rewrite a{outward ? f : sd.piece2, st.dir, st.at};
        Rewrite b{outward ? sd.piece2 : f, st.dir, st.at};
        steps.push_back(a);
        steps.push_back(b);
      }
      cell.steps = std::move(steps);
    }
    return sd;
  }

  for (int k = 0; k < c.num_faces(); ++k)
    if (k != f && c.faces[k].root == r)
      throw DomainError(fmt::format("edge {} is also the root of face {}", r, k));
  for (const auto& cell : c.cells) {
    Path p = cell.start;
    bool touches = path_uses(p, r);
    for (const auto& st : cell.steps) {
      touches = touches || st.face == f;
      p = apply_rewrite(c, p, st);
      touches = touches || path_uses(p, r);
    }
    if (touches) throw DomainError(fmt::format("face {} takes part in a 3-cell", f));
  }

  const Path sub = subdivide(orig.boundary, r, c.num_edges());
  if (cut_position < 0 || cut_position > static_cast<int>(sub.size()))
    throw DomainError(fmt::format("cut position {} outside boundary of length {}", cut_position, sub.size()));

  const int m = c.num_vertices;
  const int r2 = c.num_edges();
  const int cut = r2 + 1;
  sd.cut_position = cut_position;
  sd.new_vertex = m;
  sd.new_root = r2;
  sd.cut_edge = cut;

  g.num_vertices = m + 1;
  const Edge root = c.edges[r];
  g.edges[r].tgt = m;
  g.edges.push_back(Edge{m, root.tgt, root.frame});
  // Vertex where the cut meets the boundary.
  const int p = cut_position < static_cast<int>(sub.size()) ? g.step_src(sub[cut_position])
                                                            : g.step_tgt(sub.back());
  g.edges.push_back(Edge{m, p, 1});

  for (int k = 0; k < c.num_faces(); ++k)
    if (k != f) g.faces[k].boundary = subdivide(c.faces[k].boundary, r, r2);
  Path b1(sub.begin(), sub.begin() + cut_position);
  b1.push_back({cut, -1});
  Path b2{{cut, 1}};
  b2.insert(b2.end(), sub.begin() + cut_position, sub.end());
  g.faces[f] = Face{r, b1, orig.frame};
  g.faces.push_back(Face{r2, b2, orig.frame});
  return sd;
}

TwoComplex glue_back(const SplitDescriptor& sd) {
  TwoComplex g = sd.refined;
  const auto suffix = sd.kind == SplitKind::kHorizontal ? std::string("/hsplit") : std::string("/vsplit");
  if (g.name.size() >= suffix.size() && g.name.ends_with(suffix)) g.name.resize(g.name.size() - suffix.size());
  const int f = sd.piece1;
  const Face f1 = g.faces[f];
  const Face f2 = g.faces[sd.piece2];

  if (sd.kind == SplitKind::kVertical) {
    g.faces[f] = Face{f1.root, f2.boundary, f1.frame};
    g.faces.pop_back();
    g.edges.pop_back();
    for (auto& cell : g.cells) {
      std::vector<Rewrite> steps;
      for (std::size_t i = 0; i < cell.steps.size(); ++i) {
        const auto& st = cell.steps[i];
        if (st.face == f || st.face == sd.piece2) {
          steps.push_back(Rewrite{f, st.dir, st.at});
          ++i;  // the partner step
        } else {
          steps.push_back(st);
        }
      }
      cell.steps = std::move(steps);
    }
    return g;
  }

  const int r = f1.root, r2 = sd.new_root;
  Path whole(f1.boundary.begin(), f1.boundary.end() - 1);
  whole.insert(whole.end(), f2.boundary.begin() + 1, f2.boundary.end());
  g.faces[f] = Face{r, merge(whole, r2), f1.frame};
  g.faces.pop_back();
  for (auto& fa : g.faces) fa.boundary = merge(fa.boundary, r2);
  g.edges[r].tgt = g.edges[r2].tgt;
  g.edges.resize(r2);
  g.num_vertices = sd.new_vertex;
  return g;
}

QuadrantSplit quadrant_split(const TwoComplex& c, int f, int cut_position) {
  QuadrantSplit qs;
  qs.face = f;
  qs.horizontal = split_face(c, f, SplitKind::kHorizontal, cut_position);
  qs.left = split_face(qs.horizontal.refined, qs.horizontal.piece1, SplitKind::kVertical);
  qs.right = split_face(qs.left.refined, qs.horizontal.piece2, SplitKind::kVertical);
  qs.refined = qs.right.refined;
  qs.refined.name = c.name + "/quadrants";
  qs.x1 = qs.horizontal.piece1;
  qs.x2 = qs.horizontal.piece2;
  qs.x3 = qs.left.piece2;
  qs.x4 = qs.right.piece2;
  qs.r1 = c.faces[f].root;
  qs.r2 = qs.horizontal.new_root;
  qs.q1 = qs.left.cut_edge;
  qs.q2 = qs.right.cut_edge;
  qs.cut = qs.horizontal.cut_edge;
  return qs;
}

std::pair<TwoComplex, DaggerMap> apply_dagger(const TwoComplex& c, DaggerKind kind) {
  TwoComplex d = c;
  DaggerMap map;
  map.kind = kind;
  map.edge_map.resize(c.num_edges());
  map.face_map.resize(c.num_faces());
  for (int e = 0; e < c.num_edges(); ++e) map.edge_map[e] = e;
  for (int f = 0; f < c.num_faces(); ++f) map.face_map[f] = f;

  if (kind == DaggerKind::kFraming) {
    for (auto& e : d.edges) e.frame = -e.frame;
    for (auto& f : d.faces) f.frame = -f.frame;
    // Source and target of every face swap, so each rewrite flips direction.
    for (auto& cell : d.cells)
      for (auto& st : cell.steps) st.dir = -st.dir;
    return {d, map};
  }

  // Orientation reversal: each edge keeps its id but runs backwards. A path
  // traversed backwards then uses the same step signs in reverse order.
  for (auto& e : d.edges) std::swap(e.src, e.tgt);
  auto mirror = [](const Path& p) { return Path(p.rbegin(), p.rend()); };
  for (auto& f : d.faces) f.boundary = mirror(f.boundary);
  for (std::size_t k = 0; k < c.cells.size(); ++k) {
    const auto& cell = c.cells[k];
    auto& out = d.cells[k];
    out.start = mirror(cell.start);
    Path p = cell.start;
    for (std::size_t i = 0; i < cell.steps.size(); ++i) {
      const auto& st = cell.steps[i];
      const std::size_t len = (st.dir > 0 ? c.face_source(st.face) : c.face_target(st.face)).size();
      out.steps[i].at = static_cast<int>(p.size() - st.at - len);
      p = apply_rewrite(c, p, st);
    }
  }
  return {d, map};
}

DaggerMap compose(const DaggerMap& first, const DaggerMap& second) {
  DaggerMap out = second;
  for (std::size_t e = 0; e < first.edge_map.size(); ++e) out.edge_map[e] = second.edge_map[first.edge_map[e]];
  for (std::size_t f = 0; f < first.face_map.size(); ++f) out.face_map[f] = second.face_map[first.face_map[f]];
  return out;
}

}  // namespace twocs
