#include "twocs/fock_rosly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <tuple>

#include <fmt/format.h>

#include "twocs/errors.hpp"

namespace twocs {

int PolyAlgebra::add_variable(std::string name, const Mat& value) {
  const int v = num_variables();
  names_.push_back(name);
  values_.push_back(value);
  inverse_.push_back(v + 1);
  base_.push_back(-1);
  names_.push_back(name + "^-1");
  values_.push_back(value.inverse());
  inverse_.push_back(v);
  base_.push_back(v);
  return v;
}

void PolyAlgebra::set_value(int v, const Mat& m) {
  const int b = base_[v] < 0 ? v : base_[v];
  const Mat bv = b == v ? m : Mat(m.inverse());
  values_[b] = bv;
  values_[inverse_[b]] = bv.inverse();
}

TracePoly PolyAlgebra::entry(const std::vector<int>& chain, int a, int b, int d) const {
  TraceMonomial m;
  if (chain.empty()) {
    if (a != b) return {};
    return {m};
  }
  MatWord w;
  Mat unit = Mat::Zero(d, d);
  unit(b, a) = 1.0;
  w.consts.push_back(unit);
  for (int v : chain) {
    w.vars.push_back(v);
    w.consts.push_back(Mat::Identity(values_[v].cols(), values_[v].cols()));
  }
  m.traces.push_back(std::move(w));
  return {m};
}

namespace {

cplx eval_word(const MatWord& w, const std::vector<Mat>& values) {
  Mat acc = w.consts[0];
  for (std::size_t k = 0; k < w.vars.size(); ++k) acc = acc * values[w.vars[k]] * w.consts[k + 1];
  return acc.trace();
}

// Substitutes variable position k of w by the word r.
MatWord substitute(const MatWord& w, std::size_t k, const MatWord& r) {
  MatWord out;
  out.consts.assign(w.consts.begin(), w.consts.begin() + k);
  out.vars.assign(w.vars.begin(), w.vars.begin() + k);
  const std::size_t m = r.vars.size();
  if (m == 0) {
    out.consts.push_back(w.consts[k] * r.consts[0] * w.consts[k + 1]);
  } else {
    out.consts.push_back(w.consts[k] * r.consts[0]);
    for (std::size_t i = 1; i < m; ++i) out.consts.push_back(r.consts[i]);
    out.consts.push_back(r.consts[m] * w.consts[k + 1]);
    out.vars.insert(out.vars.end(), r.vars.begin(), r.vars.end());
  }
  out.consts.insert(out.consts.end(), w.consts.begin() + k + 2, w.consts.end());
  out.vars.insert(out.vars.end(), w.vars.begin() + k + 1, w.vars.end());
  return out;
}

}  // namespace

cplx PolyAlgebra::eval(const TracePoly& p) const {
  cplx total = 0;
  for (const auto& m : p) {
    cplx v = m.coef;
    for (const auto& w : m.traces) v *= eval_word(w, values_);
    total += v;
  }
  return total;
}

std::vector<FieldTerm> PolyAlgebra::expand(const VectorField& d) const {
  std::vector<FieldTerm> out;
  for (const auto& t : d.terms) {
    if (base_[t.var] >= 0) throw DomainError("vector fields must be given on base variables");
    out.push_back(t);
    const int inv = inverse_[t.var];
    const int n = static_cast<int>(values_[inv].rows());
    FieldTerm it;
    it.var = inv;
    it.coef = -t.coef;
    it.word.consts.push_back(Mat::Identity(n, n));
    it.word.vars.push_back(inv);
    for (const auto& c : t.word.consts) it.word.consts.push_back(c);
    it.word.vars.insert(it.word.vars.end(), t.word.vars.begin(), t.word.vars.end());
    it.word.vars.push_back(inv);
    it.word.consts.push_back(Mat::Identity(n, n));
    out.push_back(std::move(it));
  }
  return out;
}

TracePoly PolyAlgebra::derive(const VectorField& d, const TracePoly& p) const {
  const auto terms = expand(d);
  TracePoly out;
  for (const auto& m : p)
    for (std::size_t t = 0; t < m.traces.size(); ++t) {
      const MatWord& w = m.traces[t];
      for (std::size_t k = 0; k < w.vars.size(); ++k)
        for (const auto& ft : terms) {
          if (ft.var != w.vars[k]) continue;
          TraceMonomial nm;
          nm.coef = m.coef * ft.coef;
          nm.traces = m.traces;
          nm.traces[t] = substitute(w, k, ft.word);
          out.push_back(std::move(nm));
        }
    }
  return out;
}

Vec PolyAlgebra::gradient(const Bivector& b, const TracePoly& f) const {
  Vec g(b.fields.size());
  for (std::size_t u = 0; u < b.fields.size(); ++u) g(u) = eval(derive(b.fields[u], f));
  return g;
}

cplx PolyAlgebra::bracket(const Bivector& b, const TracePoly& f, const TracePoly& g) const {
  if (b.fields.empty()) return 0;
  return (gradient(b, f).transpose() * b.P * gradient(b, g))(0, 0);
}

TracePoly PolyAlgebra::bracket_poly(const Bivector& b, const TracePoly& f,
                                    const TracePoly& g) const {
  std::vector<TracePoly> df, dg;
  for (const auto& fld : b.fields) {
    df.push_back(derive(fld, f));
    dg.push_back(derive(fld, g));
  }
  TracePoly out;
  for (std::size_t u = 0; u < b.fields.size(); ++u)
    for (std::size_t w = 0; w < b.fields.size(); ++w) {
      const cplx c = b.P(u, w);
      if (c == cplx(0)) continue;
      for (const auto& x : df[u])
        for (const auto& y : dg[w]) {
          TraceMonomial m;
          m.coef = c * x.coef * y.coef;
          m.traces = x.traces;
          m.traces.insert(m.traces.end(), y.traces.begin(), y.traces.end());
          out.push_back(std::move(m));
        }
    }
  return out;
}

cplx PolyAlgebra::jacobiator(const Bivector& b, const TracePoly& f, const TracePoly& g,
                             const TracePoly& h) const {
  return bracket(b, f, bracket_poly(b, g, h)) + bracket(b, g, bracket_poly(b, h, f)) +
         bracket(b, h, bracket_poly(b, f, g));
}

// ---------------------------------------------------------------------------

std::vector<VertexEnd> vertex_ends(const TwoComplex& c, bool with_virtual) {
  std::vector<VertexEnd> ends;
  for (int e = 0; e < c.num_edges(); ++e) {
    ends.push_back({c.edges[e].src, e, EndSide::kSource});
    ends.push_back({c.edges[e].tgt, e, EndSide::kTarget});
  }
  if (with_virtual)
    for (int f = 0; f < c.num_faces(); ++f) {
      const Edge& r = c.edges[c.faces[f].root];
      ends.push_back({r.src, c.num_edges() + f, EndSide::kSource});
      ends.push_back({r.tgt, c.num_edges() + f, EndSide::kTarget});
    }
  std::sort(ends.begin(), ends.end(), [](const VertexEnd& a, const VertexEnd& b) {
    return std::tuple(a.vertex, a.edge, a.side) < std::tuple(b.vertex, b.edge, b.side);
  });
  return ends;
}

std::vector<EndContact> end_contacts(const TwoComplex& c, int e, int e2, bool with_virtual) {
  const auto ends = vertex_ends(c, with_virtual);
  std::vector<EndContact> out;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    if (ends[i].edge != e) continue;
    for (std::size_t j = 0; j < ends.size(); ++j) {
      if (ends[j].edge != e2 || ends[j].vertex != ends[i].vertex) continue;
      out.push_back({ends[i].side, ends[j].side, i < j ? 1 : (i == j ? 0 : -1)});
    }
  }
  return out;
}

Mat contact_form(const Mat& t, const Mat& t2, const std::vector<EndContact>& contacts,
                 const Mat& m_plus, const Mat& m_minus, const Mat& m_self) {
  const Mat i1 = Mat::Identity(t.rows(), t.rows());
  const Mat i2 = Mat::Identity(t2.rows(), t2.rows());
  const Mat tt = kron(t, t2);
  Mat out = Mat::Zero(tt.rows(), tt.cols());
  for (const auto& ct : contacts) {
    const Mat& m = ct.order > 0 ? m_plus : (ct.order < 0 ? m_minus : m_self);
    const bool s1 = ct.first == EndSide::kSource, s2 = ct.second == EndSide::kSource;
    if (s1 && s2) out += m * tt;
    else if (!s1 && !s2) out += tt * m;
    else if (s1) out -= kron(i1, t2) * m * kron(t, i2);
    else out -= kron(t, i2) * m * kron(i1, t2);
  }
  return out;
}

Mat heis_bracket(const Mat& t, const Mat& t2, const std::vector<EndContact>& contacts,
                 const Mat& r, double kappa) {
  const int d = static_cast<int>(t.rows());
  const Mat r21 = leg_swap(r, d);
  return contact_form(t, t2, contacts, kappa * r, -kappa * r21, 0.5 * kappa * (r - r21));
}

Mat star_commutator(const Mat& t, const Mat& t2, const std::vector<EndContact>& contacts,
                    const Mat& R) {
  if (contacts.empty()) throw DomainError("states are not gluable: their edges share no vertex");
  const int d = static_cast<int>(t.rows());
  const Mat id = Mat::Identity(R.rows(), R.cols());
  const Mat r21 = leg_swap(R, d);
  return contact_form(t, t2, contacts, R - id, r21 - id, 0.5 * (R - r21));
}

Mat fock_rosly_slot_matrix(const std::vector<int>& groups, const Mat& r, double kappa) {
  const int n = static_cast<int>(r.rows());
  const int ne = static_cast<int>(groups.size());
  Mat p = Mat::Zero(ne * n, ne * n);
  const Mat ra = 0.5 * (r - r.transpose());
  for (int a = 0; a < ne; ++a)
    for (int b = 0; b < ne; ++b) {
      if (groups[a] != groups[b]) continue;
      const Mat blk = a < b ? Mat(kappa * r) : (a == b ? Mat(kappa * ra) : Mat(-kappa * r.transpose()));
      p.block(a * n, b * n, n, n) = blk;
    }
  return p;
}

// ---------------------------------------------------------------------------

namespace {

MatWord word(std::vector<Mat> consts, std::vector<int> vars) {
  MatWord w;
  w.consts = std::move(consts);
  w.vars = std::move(vars);
  return w;
}

}  // namespace

FockRoslyModel::FockRoslyModel(const TwoComplex& c, const Lie2Algebra& l, const Mat& r0,
                               const Mat& rv, const DeformationParams& params,
                               std::uint64_t seed)
    : lattice_(c), alg_(l) {
  params.validate();
  d_ = l.g_alg.matrix_dim();
  if (l.dim_g() == 0) throw DomainError("Fock-Rosly model needs a nonzero 𝔤");
  if (r0.rows() != l.dim_g() || r0.cols() != l.dim_g())
    throw DomainError("horizontal r must be dim𝔤 × dim𝔤");
  has_faces_ = l.dim_h() > 0 && l.t_lin.norm() > 0;
  if (has_faces_ && (rv.rows() != l.dim_h() || rv.cols() != l.dim_h()))
    throw DomainError("vertical r must be dim𝔥 × dim𝔥");
  for (int f = 0; f < c.num_faces(); ++f)
    if (c.faces[f].frame < 0)
      throw DomainError("unsupported localization pattern: face with reversed frame");

  const Mat id = Mat::Identity(d_, d_);
  for (int e = 0; e < c.num_edges(); ++e)
    edge_var_.push_back(algebra_.add_variable(fmt::format("T{}", e), id));
  if (has_faces_)
    for (int f = 0; f < c.num_faces(); ++f)
      face_var_.push_back(algebra_.add_variable(fmt::format("B{}", f), id));

  std::vector<Mat> gens = l.g_alg.basis();
  const double kappa = params.hbar();
  kappa_ = kappa;

  // Horizontal: vertex ends over edges and virtual boundary edges.
  const auto ends = vertex_ends(c, has_faces_);
  std::vector<int> groups;
  for (const auto& end : ends) {
    groups.push_back(end.vertex);
    for (const Mat& x : gens) {
      VectorField fld;
      const bool real = end.edge < c.num_edges();
      const bool src = end.side == EndSide::kSource;
      if (real) {
        const int t = edge_var_[end.edge];
        const int ti = algebra_.inverse(t);
        if (src) fld.terms.push_back({t, -1.0, word({x, id}, {t})});
        else fld.terms.push_back({t, 1.0, word({id, x}, {t})});
        if (has_faces_)
          for (int f = 0; f < c.num_faces(); ++f) {
            if (c.faces[f].root != end.edge) continue;
            const int b = face_var_[f];
            if (src) fld.terms.push_back({b, 1.0, word({id, x, id, id}, {ti, t, b})});
            else fld.terms.push_back({b, -1.0, word({x, id}, {b})});
          }
      } else {
        const int f = end.edge - c.num_edges();
        const int t = edge_var_[c.faces[f].root];
        const int b = face_var_[f];
        if (src) fld.terms.push_back({b, -1.0, word({id, x, id, id}, {algebra_.inverse(t), t, b})});
        else fld.terms.push_back({b, 1.0, word({id, x}, {b})});
      }
      horizontal_.fields.push_back(std::move(fld));
    }
  }
  horizontal_.P = fock_rosly_slot_matrix(groups, r0, kappa);

  // Vertical: face ends over the face graph.
  if (has_faces_) {
    std::vector<Mat> ygens;
    for (int j = 0; j < l.dim_h(); ++j) {
      Mat y = Mat::Zero(d_, d_);
      for (int k = 0; k < l.dim_g(); ++k) y += l.t_lin(k, j) * gens[k];
      ygens.push_back(y);
    }
    std::map<std::vector<std::pair<int, int>>, int> objects;
    auto object_id = [&](const Path& p) {
      std::vector<std::pair<int, int>> key;
      for (const auto& s : p) key.emplace_back(s.edge, s.orient);
      return objects.emplace(key, static_cast<int>(objects.size())).first->second;
    };
    struct FaceEnd {
      int object, face;
      EndSide side;
    };
    std::vector<FaceEnd> fends;
    for (int f = 0; f < c.num_faces(); ++f) {
      fends.push_back({object_id(c.face_source(f)), f, EndSide::kSource});
      fends.push_back({object_id(c.face_target(f)), f, EndSide::kTarget});
    }
    std::sort(fends.begin(), fends.end(), [](const FaceEnd& a, const FaceEnd& b) {
      return std::tuple(a.object, a.face, a.side) < std::tuple(b.object, b.face, b.side);
    });
    std::vector<int> vgroups;
    for (const auto& fe : fends) {
      vgroups.push_back(fe.object);
      const int b = face_var_[fe.face];
      for (const Mat& y : ygens) {
        VectorField fld;
        if (fe.side == EndSide::kSource) fld.terms.push_back({b, -1.0, word({y, id}, {b})});
        else fld.terms.push_back({b, 1.0, word({id, y}, {b})});
        vertical_.fields.push_back(std::move(fld));
      }
    }
    vertical_.P = fock_rosly_slot_matrix(vgroups, rv, params.hbar_vertical());
  } else {
    vertical_.P = Mat::Zero(0, 0);
  }
  randomize(seed);
}

void FockRoslyModel::randomize(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 0.35);
  auto sample = [&]() {
    Mat m = Mat::Identity(d_, d_);
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j) m(i, j) += nd(rng);
    return m;
  };
  for (int v : edge_var_) algebra_.set_value(v, sample());
  for (int v : face_var_) algebra_.set_value(v, sample());
}

void FockRoslyModel::check_face(int f) const {
  if (f < 0 || f >= lattice_.num_faces())
    throw DomainError(fmt::format("face {} out of range", f));
}

std::vector<std::vector<TracePoly>> FockRoslyModel::state(int f) const {
  check_face(f);
  const int n = 2 * d_;
  std::vector<std::vector<TracePoly>> s(n, std::vector<TracePoly>(n));
  const int t = edge_var_[lattice_.faces[f].root];
  std::vector<int> top{t};
  if (has_faces_) top.push_back(face_var_[f]);
  for (int a = 0; a < d_; ++a)
    for (int b = 0; b < d_; ++b) {
      s[a][b] = algebra_.entry({t}, a, b, d_);
      s[d_ + a][d_ + b] = algebra_.entry(top, a, b, d_);
    }
  return s;
}

Mat FockRoslyModel::state_value(int f) const {
  const auto s = state(f);
  Mat m(2 * d_, 2 * d_);
  for (int a = 0; a < 2 * d_; ++a)
    for (int b = 0; b < 2 * d_; ++b) m(a, b) = algebra_.eval(s[a][b]);
  return m;
}

TracePoly FockRoslyModel::face_label_entry(int f, int a, int b) const {
  check_face(f);
  if (!has_faces_) return algebra_.entry({}, a, b, d_);
  return algebra_.entry({face_var_[f]}, a, b, d_);
}

std::vector<TracePoly> FockRoslyModel::state_functions(int f) const {
  const auto s = state(f);
  std::vector<TracePoly> out;
  for (int blk = 0; blk < 2; ++blk)
    for (int a = 0; a < d_; ++a)
      for (int b = 0; b < d_; ++b) out.push_back(s[blk * d_ + a][blk * d_ + b]);
  return out;
}

std::vector<TracePoly> FockRoslyModel::face_label_functions(int f) const {
  std::vector<TracePoly> out;
  for (int a = 0; a < d_; ++a)
    for (int b = 0; b < d_; ++b) out.push_back(face_label_entry(f, a, b));
  return out;
}

namespace {

Mat bracket_table(const PolyAlgebra& alg, const Bivector& bv,
                  const std::vector<std::vector<TracePoly>>& x,
                  const std::vector<std::vector<TracePoly>>& y) {
  const int n = static_cast<int>(x.size()), m = static_cast<int>(y.size());
  Mat out = Mat::Zero(n * m, n * m);
  if (bv.fields.empty()) return out;
  std::vector<std::vector<Vec>> gx(n, std::vector<Vec>(n)), gy(m, std::vector<Vec>(m));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) gx[a][b] = alg.gradient(bv, x[a][b]);
  for (int c = 0; c < m; ++c)
    for (int d = 0; d < m; ++d) gy[c][d] = alg.gradient(bv, y[c][d]);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
          out(a * m + c, b * m + d) = (gx[a][b].transpose() * bv.P * gy[c][d])(0, 0);
  return out;
}

}  // namespace

Mat FockRoslyModel::bracket_matrix(int f, int f2, bool vertical) const {
  return bracket_table(algebra_, vertical ? vertical_ : horizontal_, state(f), state(f2));
}

Mat FockRoslyModel::edge_bracket_matrix(int e, int e2) const {
  std::vector<std::vector<TracePoly>> x(d_, std::vector<TracePoly>(d_)), y = x;
  for (int a = 0; a < d_; ++a)
    for (int b = 0; b < d_; ++b) {
      x[a][b] = algebra_.entry({edge_var_[e]}, a, b, d_);
      y[a][b] = algebra_.entry({edge_var_[e2]}, a, b, d_);
    }
  return bracket_table(algebra_, horizontal_, x, y);
}

// ---------------------------------------------------------------------------

namespace {

// Derivative data of one function against both field families.
struct Jet {
  Vec gh, gv;
  Mat hh, vv, vh, hv;  // [outer][inner] = D_outer D_inner f
};

Mat hessian(const PolyAlgebra& alg, const std::vector<VectorField>& outer,
            const std::vector<VectorField>& inner, const TracePoly& f) {
  Mat h = Mat::Zero(outer.size(), inner.size());
  for (std::size_t u = 0; u < inner.size(); ++u) {
    const TracePoly du = alg.derive(inner[u], f);
    if (du.empty()) continue;
    for (std::size_t a = 0; a < outer.size(); ++a) h(a, u) = alg.eval(alg.derive(outer[a], du));
  }
  return h;
}

Jet make_jet(const PolyAlgebra& alg, const Bivector& h, const Bivector& v, const TracePoly& f) {
  Jet j;
  j.gh = alg.gradient(h, f);
  j.gv = alg.gradient(v, f);
  j.hh = hessian(alg, h.fields, h.fields, f);
  j.vv = hessian(alg, v.fields, v.fields, f);
  j.vh = hessian(alg, v.fields, h.fields, f);
  j.hv = hessian(alg, h.fields, v.fields, f);
  return j;
}

// D_outer {f,g}_inner.
Vec dbracket(const Mat& hf, const Mat& hg, const Vec& gf, const Vec& gg, const Mat& p) {
  return hf * p * gg + hg * p.transpose() * gf;
}

cplx dotp(const Vec& a, const Mat& p, const Vec& b) { return (a.transpose() * p * b)(0, 0); }

}  // namespace

CheckReport BracketSuiteReport::summary() const {
  CheckReport r = make_report("fock_rosly");
  r.absorb(jacobi_h);
  r.absorb(jacobi_v);
  r.absorb(compat);
  return r;
}

BracketSuiteReport check_bracket_jacobi_compat(const FockRoslyModel& m,
                                               const std::vector<TracePoly>& states,
                                               const BracketSuiteOptions& opts) {
  BracketSuiteReport out;
  out.jacobi_h = make_report("jacobi_h");
  out.jacobi_v = make_report("jacobi_v");
  out.compat = make_report("compat");
  if (states.empty()) return out;
  const PolyAlgebra& alg = m.algebra();
  const Bivector& h = m.horizontal();
  const Bivector& v = m.vertical();
  std::vector<Jet> jets;
  jets.reserve(states.size());
  for (const auto& s : states) jets.push_back(make_jet(alg, h, v, s));

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::size_t> pick(0, states.size() - 1);

  auto jacobi = [&](bool vert, std::size_t a, std::size_t b, std::size_t c) {
    const Mat& p = vert ? v.P : h.P;
    if (p.size() == 0) return cplx(0);
    auto g = [&](std::size_t i) -> const Vec& { return vert ? jets[i].gv : jets[i].gh; };
    auto hs = [&](std::size_t i) -> const Mat& { return vert ? jets[i].vv : jets[i].hh; };
    auto term = [&](std::size_t x, std::size_t y, std::size_t z) {
      return dotp(g(x), p, dbracket(hs(y), hs(z), g(y), g(z), p));
    };
    return term(a, b, c) + term(b, c, a) + term(c, a, b);
  };

  for (int t = 0; t < opts.triples; ++t) {
    const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    for (int vert = 0; vert < 2; ++vert) {
      CheckReport& rep = vert ? out.jacobi_v : out.jacobi_h;
      const double res = std::abs(jacobi(vert == 1, a, b, c));
      rep.residual = std::max(rep.residual, res);
      ++rep.checked;
      if (res > opts.tol) rep.fail(fmt::format("states ({},{},{}): {:.3e}", a, b, c, res));
    }
  }

  for (int t = 0; t < opts.quadruples; ++t) {
    const std::size_t a = pick(rng), b = pick(rng), c = pick(rng), d = pick(rng);
    cplx lhs = 0, rhs = 0;
    if (v.P.size() > 0 && h.P.size() > 0) {
      const Vec ab_v = dbracket(jets[a].vh, jets[b].vh, jets[a].gh, jets[b].gh, h.P);
      const Vec cd_v = dbracket(jets[c].vh, jets[d].vh, jets[c].gh, jets[d].gh, h.P);
      lhs = dotp(ab_v, v.P, cd_v);
      const Vec ab_h = dbracket(jets[a].hv, jets[b].hv, jets[a].gv, jets[b].gv, v.P);
      const Vec cd_h = dbracket(jets[c].hv, jets[d].hv, jets[c].gv, jets[d].gv, v.P);
      rhs = dotp(ab_h, h.P, cd_h);
    }
    const double res = std::abs(lhs - rhs);
    out.compat.residual = std::max(out.compat.residual, res);
    ++out.compat.checked;
    if (res > opts.tol)
      out.compat.fail(fmt::format("states ({},{},{},{}): {:.3e}", a, b, c, d, res));
  }
  return out;
}

double heis_reduction_residual(const FockRoslyModel& m, const Mat& r0_coeffs) {
  if (m.has_face_labels()) throw DomainError("heis reduction needs trivial face labels");
  const TwoComplex& c = m.lattice();
  const int d = m.rep_dim();
  const Mat r = tensor_from_coeffs(m.lie2().g_alg, r0_coeffs);
  auto hol = [&](int e) { return m.algebra().value(m.edge_var(e)); };
  double res = 0;
  for (int e = 0; e < c.num_edges(); ++e)
    for (int e2 = 0; e2 < c.num_edges(); ++e2) {
      const Mat closed = heis_bracket(hol(e), hol(e2), end_contacts(c, e, e2, false), r, m.kappa());
      res = std::max(res, frob(m.edge_bracket_matrix(e, e2) - closed));
    }
  const int n = 2 * d;
  for (int f = 0; f < c.num_faces(); ++f)
    for (int f2 = 0; f2 < c.num_faces(); ++f2) {
      const int e = c.faces[f].root, e2 = c.faces[f2].root;
      const Mat closed = heis_bracket(hol(e), hol(e2), end_contacts(c, e, e2, false), r, m.kappa());
      Mat full = Mat::Zero(n * n, n * n);
      for (int bi = 0; bi < 2; ++bi)
        for (int bj = 0; bj < 2; ++bj)
          for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
              for (int x = 0; x < d; ++x)
                for (int y = 0; y < d; ++y)
                  full((bi * d + a) * n + bj * d + x, (bi * d + b) * n + bj * d + y) =
                      closed(a * d + x, b * d + y);
      res = std::max(res, frob(m.bracket_matrix(f, f2) - full));
    }
  return res;
}

}  // namespace twocs
