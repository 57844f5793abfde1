#include "twocs/holonomy_gauge.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "twocs/errors.hpp"
#include "twocs/parallel.hpp"

namespace twocs {

namespace {

std::int64_t saturating_pow(std::int64_t base, int exp, std::int64_t acc = 1) {
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && acc > kMax / base) return kMax;
    acc *= base;
  }
  return acc;
}

void require_shape(const TwoComplex& c, const FlatConfig& cfg) {
  if (static_cast<int>(cfg.h.size()) != c.num_edges() || static_cast<int>(cfg.b.size()) != c.num_faces())
    throw SchemaError(fmt::format("configuration has {} edge and {} face labels, complex needs {} and {}",
                                  cfg.h.size(), cfg.b.size(), c.num_edges(), c.num_faces()));
}

void require_gauge_shape(const TwoComplex& c, const GaugeTransform& z) {
  if (static_cast<int>(z.a.size()) != c.num_vertices || static_cast<int>(z.gamma.size()) != c.num_edges())
    throw SchemaError("gauge transform does not cover the complex");
}

}  // namespace

int path_holonomy(const TwoComplex& c, const CrossedModule& cm, const std::vector<int>& h, const Path& p) {
  (void)c;
  const auto& G = cm.G();
  int x = G.identity();
  for (const auto& s : p) x = G.mul(x, s.orient > 0 ? h[s.edge] : G.inv(h[s.edge]));
  return x;
}

int rewrite_label(const TwoComplex& c, const CrossedModule& cm, const FlatConfig& cfg, const Path& p,
                  const Rewrite& r) {
  const auto& H = cm.H();
  const std::size_t len = (r.dir > 0 ? c.face_source(r.face) : c.face_target(r.face)).size();
  const Path suffix(p.begin() + r.at + static_cast<std::ptrdiff_t>(len), p.end());
  const int hy = path_holonomy(c, cm, cfg.h, suffix);
  const int b = r.dir > 0 ? cfg.b[r.face] : H.inv(cfg.b[r.face]);
  return cm.act(cm.G().inv(hy), b);
}

FlatnessReport check_flat(const TwoComplex& c, const CrossedModule& cm, const FlatConfig& cfg) {
  require_shape(c, cfg);
  const auto& G = cm.G();
  const auto& H = cm.H();
  FlatnessReport rep;
  for (int f = 0; f < c.num_faces(); ++f) {
    const int hs = path_holonomy(c, cm, cfg.h, c.face_source(f));
    const int ht = path_holonomy(c, cm, cfg.h, c.face_target(f));
    const int defect = G.mul(G.inv(G.mul(hs, cm.t(cfg.b[f]))), ht);
    rep.face_defect.push_back(defect);
    rep.face_ok.push_back(defect == G.identity());
    rep.flat = rep.flat && rep.face_ok.back();
  }
  for (const auto& cell : c.cells) {
    Path p = cell.start;
    int prod = H.identity();
    for (const auto& st : cell.steps) {
      prod = H.mul(prod, rewrite_label(c, cm, cfg, p, st));
      p = apply_rewrite(c, p, st);
    }
    rep.cell_product.push_back(prod);
    rep.cell_ok.push_back(prod == H.identity());
    rep.flat = rep.flat && rep.cell_ok.back();
  }
  return rep;
}

bool is_flat(const TwoComplex& c, const CrossedModule& cm, const FlatConfig& cfg) {
  return check_flat(c, cm, cfg).flat;
}

std::int64_t raw_decoration_count(const TwoComplex& c, const CrossedModule& cm) {
  return saturating_pow(cm.H().order(), c.num_faces(), saturating_pow(cm.G().order(), c.num_edges()));
}

std::int64_t encode(const CrossedModule& cm, const FlatConfig& cfg) {
  std::int64_t code = 0;
  for (int x : cfg.h) code = code * cm.G().order() + x;
  for (int y : cfg.b) code = code * cm.H().order() + y;
  return code;
}

std::vector<FlatConfig> enumerate_flat(const TwoComplex& c, const CrossedModule& cm, std::int64_t budget) {
  const std::int64_t raw = raw_decoration_count(c, cm);
  if (raw > budget)
    throw BudgetExceeded(fmt::format("{} x {}: {} raw decorations exceed budget {}", c.name, cm.name(), raw, budget));
  const int E = c.num_edges(), F = c.num_faces(), nG = cm.G().order();
  const auto& G = cm.G();

  auto faces_for = [&](const std::vector<int>& h, std::vector<FlatConfig>& out) {
    std::vector<const std::vector<int>*> choices(F);
    for (int f = 0; f < F; ++f) {
      const int hs = path_holonomy(c, cm, h, c.face_source(f));
      const int ht = path_holonomy(c, cm, h, c.face_target(f));
      choices[f] = &cm.t_preimage(G.mul(G.inv(hs), ht));
      if (choices[f]->empty()) return;
    }
    std::vector<std::size_t> pick(F, 0);
    FlatConfig cfg{h, std::vector<int>(F)};
    while (true) {
      for (int f = 0; f < F; ++f) cfg.b[f] = (*choices[f])[pick[f]];
      if (c.cells.empty() || check_flat(c, cm, cfg).flat) out.push_back(cfg);
      int f = F - 1;
      while (f >= 0 && ++pick[f] == choices[f]->size()) pick[f--] = 0;
      if (f < 0) break;
    }
  };

  auto scan = [&](int first, std::vector<FlatConfig>& out) {
    std::vector<int> h(E, 0);
    if (E > 0) h[0] = first;
    while (true) {
      faces_for(h, out);
      int i = E - 1;
      while (i >= 1 && ++h[i] == nG) h[i--] = 0;
      if (i < 1) break;
    }
  };

  if (E == 0) {
    std::vector<FlatConfig> out;
    scan(0, out);
    return out;
  }
  std::vector<std::vector<FlatConfig>> parts(nG);
  parallel_for(nG, [&](int x) { scan(x, parts[x]); });
  std::vector<FlatConfig> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

GaugeTransform identity_gauge(const TwoComplex& c, const CrossedModule& cm) {
  return {std::vector<int>(c.num_vertices, cm.G().identity()), std::vector<int>(c.num_edges(), cm.H().identity())};
}

int path_gauge(const TwoComplex& c, const CrossedModule& cm, const FlatConfig& cfg, const GaugeTransform& z,
               const Path& p) {
  (void)c;
  const auto& G = cm.G();
  const auto& H = cm.H();
  int acc = H.identity();
  for (const auto& s : p) {
    const int he = cfg.h[s.edge];
    const int hs = s.orient > 0 ? he : G.inv(he);
    const int gs = s.orient > 0 ? z.gamma[s.edge] : cm.act(he, H.inv(z.gamma[s.edge]));
    acc = H.mul(cm.act(G.inv(hs), acc), gs);
  }
  return acc;
}

FlatConfig gauge_apply(const TwoComplex& c, const CrossedModule& cm, const FlatConfig& cfg, const GaugeTransform& z) {
  require_shape(c, cfg);
  require_gauge_shape(c, z);
  const auto& G = cm.G();
  const auto& H = cm.H();
  FlatConfig out = cfg;
  for (int e = 0; e < c.num_edges(); ++e) {
    const auto& ed = c.edges[e];
    out.h[e] = G.mul(G.mul(G.inv(z.a[ed.src]), cfg.h[e]), G.mul(cm.t(z.gamma[e]), z.a[ed.tgt]));
  }
  for (int f = 0; f < c.num_faces(); ++f) {
    const int gs = path_gauge(c, cm, cfg, z, c.face_source(f));
    const int gt = path_gauge(c, cm, cfg, z, c.face_target(f));
    const int w = c.edges[c.faces[f].root].tgt;
    out.b[f] = cm.act(G.inv(z.a[w]), H.mul(H.mul(H.inv(gs), cfg.b[f]), gt));
  }
  return out;
}

GaugeTransform compose(const TwoComplex& c, const CrossedModule& cm, const GaugeTransform& z,
                       const GaugeTransform& z2) {
  require_gauge_shape(c, z);
  require_gauge_shape(c, z2);
  GaugeTransform out = z;
  for (int v = 0; v < c.num_vertices; ++v) out.a[v] = cm.G().mul(z.a[v], z2.a[v]);
  for (int e = 0; e < c.num_edges(); ++e)
    out.gamma[e] = cm.H().mul(z.gamma[e], cm.act(z.a[c.edges[e].tgt], z2.gamma[e]));
  return out;
}

GaugeTransform inverse(const TwoComplex& c, const CrossedModule& cm, const GaugeTransform& z) {
  require_gauge_shape(c, z);
  GaugeTransform out = z;
  for (int v = 0; v < c.num_vertices; ++v) out.a[v] = cm.G().inv(z.a[v]);
  for (int e = 0; e < c.num_edges(); ++e)
    out.gamma[e] = cm.act(cm.G().inv(z.a[c.edges[e].tgt]), cm.H().inv(z.gamma[e]));
  return out;
}

GaugeTransform secondary_apply(const TwoComplex& c, const CrossedModule& cm, const FlatConfig& cfg,
                               const GaugeTransform& z, const SecondaryGauge& m) {
  require_gauge_shape(c, z);
  if (static_cast<int>(m.m.size()) != c.num_vertices) throw SchemaError("secondary gauge does not cover the vertices");
  const auto& G = cm.G();
  const auto& H = cm.H();
  GaugeTransform out = z;
  for (int v = 0; v < c.num_vertices; ++v) out.a[v] = G.mul(z.a[v], cm.t(m.m[v]));
  for (int e = 0; e < c.num_edges(); ++e) {
    const auto& ed = c.edges[e];
    const int left = cm.act(G.mul(G.inv(cfg.h[e]), z.a[ed.src]), m.m[ed.src]);
    const int right = cm.act(z.a[ed.tgt], m.m[ed.tgt]);
    out.gamma[e] = H.mul(H.mul(left, z.gamma[e]), H.inv(right));
  }
  return out;
}

std::int64_t gauge_group_order(const TwoComplex& c, const CrossedModule& cm) {
  return saturating_pow(cm.H().order(), c.num_edges(), saturating_pow(cm.G().order(), c.num_vertices));
}

std::vector<GaugeTransform> all_gauges(const TwoComplex& c, const CrossedModule& cm, std::int64_t budget) {
  const std::int64_t n = gauge_group_order(c, cm);
  if (n > budget) throw BudgetExceeded(fmt::format("gauge group of order {} exceeds budget {}", n, budget));
  const int V = c.num_vertices, E = c.num_edges();
  std::vector<int> digits(V + E, 0);
  std::vector<GaugeTransform> out;
  out.reserve(static_cast<std::size_t>(n));
  while (true) {
    out.push_back({std::vector<int>(digits.begin(), digits.begin() + V), std::vector<int>(digits.begin() + V, digits.end())});
    int i = V + E - 1;
    while (i >= 0 && ++digits[i] == (i < V ? cm.G().order() : cm.H().order())) digits[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

namespace {

// Elementary generators: a_v = x for one vertex, γ_e = y for one edge.
std::vector<GaugeTransform> elementary_gauges(const TwoComplex& c, const CrossedModule& cm, bool with_identity,
                                              std::vector<int>* vertex_start = nullptr,
                                              std::vector<int>* edge_start = nullptr) {
  std::vector<GaugeTransform> gens;
  const GaugeTransform id = identity_gauge(c, cm);
  for (int v = 0; v < c.num_vertices; ++v) {
    if (vertex_start) vertex_start->push_back(static_cast<int>(gens.size()));
    for (int x = 0; x < cm.G().order(); ++x) {
      if (!with_identity && x == cm.G().identity()) continue;
      auto z = id;
      z.a[v] = x;
      gens.push_back(z);
    }
  }
  for (int e = 0; e < c.num_edges(); ++e) {
    if (edge_start) edge_start->push_back(static_cast<int>(gens.size()));
    for (int y = 0; y < cm.H().order(); ++y) {
      if (!with_identity && y == cm.H().identity()) continue;
      auto z = id;
      z.gamma[e] = y;
      gens.push_back(z);
    }
  }
  return gens;
}

std::vector<std::vector<int>> move_table(const TwoComplex& c, const CrossedModule& cm,
                                         const std::vector<FlatConfig>& configs,
                                         const std::unordered_map<std::int64_t, int>& index,
                                         const std::vector<GaugeTransform>& gens) {
  const int N = static_cast<int>(configs.size());
  std::vector<std::vector<int>> moves(gens.size(), std::vector<int>(N));
  std::atomic<bool> escaped{false};
  parallel_for(N, [&](int i) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const auto it = index.find(encode(cm, gauge_apply(c, cm, configs[i], gens[g])));
      if (it == index.end()) {
        escaped = true;
        return;
      }
      moves[g][i] = it->second;
    }
  });
  if (escaped) throw DomainError("gauge action left the flat configuration set");
  return moves;
}

std::unordered_map<std::int64_t, int> index_configs(const CrossedModule& cm, const std::vector<FlatConfig>& configs) {
  std::unordered_map<std::int64_t, int> index;
  index.reserve(configs.size() * 2);
  for (std::size_t i = 0; i < configs.size(); ++i) index.emplace(encode(cm, configs[i]), static_cast<int>(i));
  return index;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

OrbitPartition gauge_orbits(const TwoComplex& c, const CrossedModule& cm, std::int64_t budget) {
  OrbitPartition op;
  op.configs = enumerate_flat(c, cm, budget);
  const int N = static_cast<int>(op.configs.size());
  const auto index = index_configs(cm, op.configs);
  const auto gens = elementary_gauges(c, cm, false);
  const auto moves = move_table(c, cm, op.configs, index, gens);
  std::vector<int> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& row : moves)
    for (int i = 0; i < N; ++i) {
      const int a = find_root(parent, i), b = find_root(parent, row[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  op.orbit_of.assign(N, -1);
  std::vector<int> orbit_of_root(N, -1);
  for (int i = 0; i < N; ++i) {
    const int r = find_root(parent, i);
    if (orbit_of_root[r] < 0) {
      orbit_of_root[r] = op.num_orbits();
      op.orbits.emplace_back();
      op.representatives.push_back(i);
    }
    op.orbit_of[i] = orbit_of_root[r];
    op.orbits[op.orbit_of[i]].push_back(i);
  }
  return op;
}

InvariantProjector::InvariantProjector(const TwoComplex& c, const CrossedModule& cm,
                                       const std::vector<FlatConfig>& configs)
    : c_(c), cm_(cm), configs_(configs) {
  index_ = index_configs(cm_, configs_);
  const auto gens = elementary_gauges(c_, cm_, true, &vertex_gen_, &edge_gen_);
  moves_ = move_table(c_, cm_, configs_, index_, gens);
  const std::int64_t d = gauge_group_order(c_, cm_);
  if (d == std::numeric_limits<std::int64_t>::max()) throw BudgetExceeded("gauge group order overflows");
  denominator_ = d;
}

int InvariantProjector::index_of(const FlatConfig& cfg) const {
  const auto it = index_.find(encode(cm_, cfg));
  return it == index_.end() ? -1 : it->second;
}

std::vector<std::pair<int, std::int64_t>> InvariantProjector::column(int i) const {
  // Averages over one factor subgroup at a time; numerators stay integral
  // because every factor only multiplies the total weight by its order.
  std::vector<std::pair<int, std::int64_t>> cur{{i, 1}};
  std::vector<std::int64_t> scratch(configs_.size(), 0);
  std::vector<int> touched;
  auto average = [&](int first, int count) {
    touched.clear();
    for (const auto& [idx, val] : cur)
      for (int g = first; g < first + count; ++g) {
        const int j = moves_[g][idx];
        if (scratch[j] == 0) touched.push_back(j);
        scratch[j] += val;
      }
    std::sort(touched.begin(), touched.end());
    cur.clear();
    for (int j : touched) {
      cur.emplace_back(j, scratch[j]);
      scratch[j] = 0;
    }
  };
  for (int start : edge_gen_) average(start, cm_.H().order());
  for (int start : vertex_gen_) average(start, cm_.G().order());
  return cur;
}

SparseState InvariantProjector::apply(const SparseState& state) const {
  SparseState out;
  for (const auto& [i, amp] : state) {
    if (amp.numerator() == 0) continue;
    for (const auto& [j, num] : column(i)) out[j] += amp * Rational(num, denominator_);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.numerator() == 0 ? out.erase(it) : std::next(it);
  return out;
}

namespace {

constexpr std::int64_t kPrime = 2147483647;  // 2^31 - 1

std::int64_t mod_pow(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  b %= kPrime;
  if (b < 0) b += kPrime;
  while (e > 0) {
    if (e & 1) r = r * b % kPrime;
    b = b * b % kPrime;
    e >>= 1;
  }
  return r;
}

std::int64_t mod_inv(std::int64_t a) { return mod_pow(a, kPrime - 2); }

std::int64_t to_mod(const Rational& q) {
  std::int64_t n = q.numerator() % kPrime;
  if (n < 0) n += kPrime;
  return n * mod_inv(q.denominator() % kPrime) % kPrime;
}

}  // namespace

int sparse_rank_mod_p(std::vector<std::map<int, std::int64_t>> rows) {
  std::map<int, std::map<int, std::int64_t>> pivots;  // lead column -> row with lead 1
  for (auto& row : rows) {
    for (auto it = row.begin(); it != row.end();) {
      it->second %= kPrime;
      if (it->second < 0) it->second += kPrime;
      it = it->second == 0 ? row.erase(it) : std::next(it);
    }
    while (!row.empty()) {
      const auto [lead, coef] = *row.begin();
      const auto pv = pivots.find(lead);
      if (pv == pivots.end()) {
        const std::int64_t inv = mod_inv(coef);
        for (auto& [col, val] : row) val = val * inv % kPrime;
        pivots.emplace(lead, std::move(row));
        break;
      }
      for (const auto& [col, val] : pv->second) {
        auto& target = row[col];
        target = ((target - coef * val) % kPrime + kPrime) % kPrime;
        if (target == 0) row.erase(col);
      }
    }
  }
  return static_cast<int>(pivots.size());
}

ProjectorSummary summarize_projector(const InvariantProjector& p, int dense_limit) {
  ProjectorSummary s;
  const int N = p.size();
  const std::int64_t d = p.denominator();
  std::vector<std::vector<std::pair<int, std::int64_t>>> cols(N);
  parallel_for(N, [&](int i) { cols[i] = p.column(i); });
  std::int64_t trace_num = 0;
  for (int i = 0; i < N; ++i)
    for (const auto& [j, v] : cols[i])
      if (j == i) trace_num += v;
  s.trace = Rational(trace_num, d);

  // P(P δ_i) = P δ_i, compared exactly through the integer columns. The
  // check costs |orbit|^2 per column, so larger spaces are sampled.
  const int stride = N <= 400 ? 1 : std::max(1, N / 64);
  std::vector<char> ok(N, 1);
  std::vector<int> sample;
  for (int i = 0; i < N; i += stride) sample.push_back(i);
  parallel_for(static_cast<int>(sample.size()), [&](int k) {
    const int i = sample[k];
    std::vector<__int128> twice(N, 0);
    for (const auto& [j, v] : cols[i])
      for (const auto& [l, w] : cols[j]) twice[l] += static_cast<__int128>(v) * w;
    bool same = true;
    for (const auto& [j, v] : cols[i]) {
      same = same && twice[j] == static_cast<__int128>(v) * d;
      twice[j] = 0;
    }
    for (int l = 0; l < N && same; ++l) same = twice[l] == 0;
    ok[i] = same;
  });
  for (int i : sample) s.idempotent = s.idempotent && ok[i];
  s.columns_checked = static_cast<int>(sample.size());

  if (N <= dense_limit) {
    std::vector<std::map<int, std::int64_t>> rows(N);
    for (int i = 0; i < N; ++i)
      for (const auto& [j, v] : cols[i]) rows[i][j] = to_mod(Rational(v, d));
    s.rank_mod_p = sparse_rank_mod_p(std::move(rows));
  }
  return s;
}

int observable_dimension(const TwoComplex& c, const CrossedModule& cm, const std::vector<FlatConfig>& configs) {
  const auto index = index_configs(cm, configs);
  const auto gens = elementary_gauges(c, cm, false);
  const auto moves = move_table(c, cm, configs, index, gens);
  const int N = static_cast<int>(configs.size());
  std::vector<std::map<int, std::int64_t>> rows;
  for (const auto& row : moves)
    for (int i = 0; i < N; ++i)
      if (row[i] != i) rows.push_back({{row[i], 1}, {i, -1}});
  return N - sparse_rank_mod_p(std::move(rows));
}

FlatConfig glue_config(const SplitDescriptor& sd, const CrossedModule& cm, const FlatConfig& refined) {
  const TwoComplex& g = sd.refined;
  require_shape(g, refined);
  const auto& G = cm.G();
  const auto& H = cm.H();
  const int f = sd.piece1;
  const int b1 = refined.b[f], b2 = refined.b[sd.piece2];
  FlatConfig out;
  if (sd.kind == SplitKind::kVertical) {
    out.h.assign(refined.h.begin(), refined.h.end() - 1);
    out.b.assign(refined.b.begin(), refined.b.end() - 1);
    out.b[f] = g.faces[f].frame > 0 ? H.mul(b1, b2) : H.mul(b2, b1);
    return out;
  }
  const int r = g.faces[f].root;
  out.h.assign(refined.h.begin(), refined.h.end() - 2);
  out.h[r] = G.mul(refined.h[r], refined.h[sd.new_root]);
  out.b.assign(refined.b.begin(), refined.b.end() - 1);
  const int hs2 = path_holonomy(g, cm, refined.h, g.face_source(sd.piece2));
  out.b[f] = H.mul(cm.act(G.inv(hs2), b1), b2);
  return out;
}

std::vector<FlatConfig> split_fibre(const SplitDescriptor& sd, const CrossedModule& cm, const FlatConfig& cfg) {
  const TwoComplex& g = sd.refined;
  const auto& G = cm.G();
  const auto& H = cm.H();
  const int f = sd.piece1;
  std::vector<FlatConfig> out;
  FlatConfig x;
  x.h = cfg.h;
  x.b = cfg.b;
  x.b.push_back(H.identity());
  if (sd.kind == SplitKind::kVertical) {
    x.h.push_back(G.identity());
    for (int hq = 0; hq < G.order(); ++hq)
      for (int b1 = 0; b1 < H.order(); ++b1) {
        x.h.back() = hq;
        x.b[f] = b1;
        x.b[sd.piece2] = g.faces[f].frame > 0 ? H.mul(H.inv(b1), cfg.b[f]) : H.mul(cfg.b[f], H.inv(b1));
        if (is_flat(g, cm, x) && glue_config(sd, cm, x) == cfg) out.push_back(x);
      }
    return out;
  }
  const int r = g.faces[f].root;
  x.h.push_back(G.identity());
  x.h.push_back(G.identity());
  for (int h1 = 0; h1 < G.order(); ++h1)
    for (int hc = 0; hc < G.order(); ++hc)
      for (int b1 = 0; b1 < H.order(); ++b1) {
        x.h[r] = h1;
        x.h[sd.new_root] = G.mul(G.inv(h1), cfg.h[r]);
        x.h[sd.cut_edge] = hc;
        x.b[f] = b1;
        const int hs2 = path_holonomy(g, cm, x.h, g.face_source(sd.piece2));
        x.b[sd.piece2] = H.mul(H.inv(cm.act(G.inv(hs2), b1)), cfg.b[f]);
        if (is_flat(g, cm, x) && glue_config(sd, cm, x) == cfg) out.push_back(x);
      }
  return out;
}

GaugeTransform glue_gauge(const SplitDescriptor& sd, const CrossedModule& cm, const FlatConfig& refined,
                          const GaugeTransform& z) {
  require_gauge_shape(sd.refined, z);
  GaugeTransform out = z;
  if (sd.kind == SplitKind::kVertical) {
    out.gamma.pop_back();
    return out;
  }
  const int r = sd.refined.faces[sd.piece1].root;
  out.a.pop_back();
  out.gamma.resize(out.gamma.size() - 2);
  out.gamma[r] = cm.H().mul(cm.act(cm.G().inv(refined.h[sd.new_root]), z.gamma[r]), z.gamma[sd.new_root]);
  return out;
}

FlatConfig dagger_config(const TwoComplex& c, const CrossedModule& cm, DaggerKind kind, const FlatConfig& cfg) {
  require_shape(c, cfg);
  FlatConfig out = cfg;
  const auto& H = cm.H();
  if (kind == DaggerKind::kFraming) {
    for (auto& y : out.b) y = H.inv(y);
    return out;
  }
  for (auto& x : out.h) x = cm.G().inv(x);
  for (int f = 0; f < c.num_faces(); ++f)
    out.b[f] = cm.act(path_holonomy(c, cm, cfg.h, c.face_source(f)), H.inv(cfg.b[f]));
  return out;
}

GaugeTransform dagger_gauge(const TwoComplex& c, const CrossedModule& cm, DaggerKind kind, const FlatConfig& cfg,
                            const GaugeTransform& z) {
  require_gauge_shape(c, z);
  if (kind == DaggerKind::kFraming) return z;
  GaugeTransform out = z;
  for (int e = 0; e < c.num_edges(); ++e) out.gamma[e] = cm.act(cfg.h[e], cm.H().inv(z.gamma[e]));
  return out;
}

std::string to_string(const CrossedModule& cm, const FlatConfig& cfg) {
  std::vector<std::string> hs, bs;
  for (int x : cfg.h) hs.push_back(cm.G().label(x));
  for (int y : cfg.b) bs.push_back(cm.H().label(y));
  return fmt::format("h=[{}] b=[{}]", fmt::join(hs, ","), fmt::join(bs, ","));
}

}  // namespace twocs
