#pragma once

#include <string>
#include <utility>
#include <vector>

namespace twocs {

struct Step {
  int edge = 0;
  int orient = 1;  // +1 along the edge, -1 against it
  bool operator==(const Step&) const = default;
};
using Path = std::vector<Step>;

struct Edge {
  int src = 0;
  int tgt = 0;
  int frame = 1;
  bool operator==(const Edge&) const = default;
};

// A rooted face. With frame +1 the 2-cell runs root ⇒ boundary, so a flat
// decoration has h_boundary = h_root t(b). Frame -1 reverses the 2-cell.
struct Face {
  int root = 0;
  Path boundary;
  int frame = 1;
  bool operator==(const Face&) const = default;
};

// One rewrite inside a 3-cell: replace the face's source path by its target
// path (dir +1) or the reverse (dir -1), starting at path position `at`.
struct Rewrite {
  int face = 0;
  int dir = 1;
  int at = 0;
  bool operator==(const Rewrite&) const = default;
};

// A 3-cell is a closed sequence of face rewrites starting and ending at `start`.
struct Cell3 {
  Path start;
  std::vector<Rewrite> steps;
  bool operator==(const Cell3&) const = default;
};

class TwoComplex {
 public:
  std::string name;
  int num_vertices = 0;
  std::vector<Edge> edges;
  std::vector<Face> faces;
  std::vector<Cell3> cells;

  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_faces() const { return static_cast<int>(faces.size()); }

  int step_src(Step s) const { return s.orient > 0 ? edges[s.edge].src : edges[s.edge].tgt; }
  int step_tgt(Step s) const { return s.orient > 0 ? edges[s.edge].tgt : edges[s.edge].src; }
  // Source and target paths of the face's 2-cell (frame-aware).
  Path face_source(int f) const;
  Path face_target(int f) const;
  Path root_path(int f) const { return {Step{faces[f].root, 1}}; }

  bool operator==(const TwoComplex&) const = default;

  // Library lattices.
  static TwoComplex fundamental();  // one vertex, loop e, face e ⇒ [e]
  static TwoComplex bigon();        // one vertex, loops e, e', face e ⇒ [e']
  static TwoComplex square();       // four vertices, face a ⇒ c d b̄
  static TwoComplex tetrahedron();  // boundary of a 3-simplex with one 3-cell
  static TwoComplex theta();        // two vertices, three parallel edges, two faces
  // Two faces e0 ⇒ [p0], e1 ⇒ [p1] meeting at one vertex; not in library().
  static TwoComplex bowtie();
  static std::vector<TwoComplex> library();
  static TwoComplex by_name(const std::string& name);
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
};

// Throws SchemaError on dangling references; returns other violations.
ValidationReport validate_complex(const TwoComplex& c);

// Applies one rewrite to a path; throws DomainError if the segment does not match.
Path apply_rewrite(const TwoComplex& c, const Path& p, const Rewrite& r);
Path reverse_path(const Path& p);

enum class SplitKind { kHorizontal, kVertical };

// Refinement of a complex along one face. New cells are appended after the
// existing ones; the split face keeps its id as piece one.
//
// Horizontal, cut at boundary position k: the root r: u→w is subdivided into
// r1: u→m (id of r) and r2: m→w through a new vertex m, a cut edge c: m→p is
// added (p = vertex at position k of the substituted boundary), and the face
// becomes f1: r1 ⇒ P[0,k) c̄ and f2: r2 ⇒ c P[k,..).
//
// Vertical: a new edge q: u→w parallel to the root; f1: r ⇒ [q], f2: q ⇒ P.
struct SplitDescriptor {
  int face = 0;
  SplitKind kind = SplitKind::kHorizontal;
  int piece1 = 0;
  int piece2 = 0;
  TwoComplex refined;
  int cut_position = 0;
  int new_vertex = -1;  // m (horizontal)
  int new_root = -1;    // r2 (horizontal)
  int cut_edge = -1;    // c (horizontal) or q (vertical)
};

SplitDescriptor split_face(const TwoComplex& c, int face, SplitKind kind, int cut_position = 1);
// Inverse of split_face on the combinatorial level; reproduces the input exactly.
TwoComplex glue_back(const SplitDescriptor& sd);

// Horizontal split followed by vertical splits of both halves. Quadrants:
// x1: r1 ⇒ q1, x2: r2 ⇒ q2, x3: q1 ⇒ P1 c̄, x4: q2 ⇒ c P2.
struct QuadrantSplit {
  int face = 0;
  SplitDescriptor horizontal;
  SplitDescriptor left;   // vertical split of piece 1
  SplitDescriptor right;  // vertical split of piece 2
  TwoComplex refined;
  int x1 = 0, x2 = 0, x3 = 0, x4 = 0;
  int r1 = 0, r2 = 0, q1 = 0, q2 = 0, cut = 0;
};

QuadrantSplit quadrant_split(const TwoComplex& c, int face, int cut_position = 1);

enum class DaggerKind { kFraming, kOrientation };  // dagger1, dagger2

struct DaggerMap {
  DaggerKind kind = DaggerKind::kOrientation;
  std::vector<int> edge_map;
  std::vector<int> face_map;
};

// dagger1 flips every edge and face frame (a face with frame -1 runs
// boundary ⇒ root). dagger2 reverses every edge and every path.
std::pair<TwoComplex, DaggerMap> apply_dagger(const TwoComplex& c, DaggerKind kind);
DaggerMap compose(const DaggerMap& first, const DaggerMap& second);

}  // namespace twocs
