#pragma once

// Brute-force reference implementations used only by tests. They avoid the
// library's enumeration, union-find and elimination code paths.

#include <map>
#include <set>
#include <vector>

#include "twocs/crossed_module.hpp"
#include "twocs/holonomy_gauge.hpp"
#include "twocs/two_complex.hpp"

namespace oracle {

using namespace twocs;

inline int path_product(const CrossedModule& cm, const std::vector<int>& h, const Path& p) {
  int x = cm.G().identity();
  for (const auto& s : p) x = cm.G().mul(x, s.orient > 0 ? h[s.edge] : cm.G().inv(h[s.edge]));
  return x;
}

inline bool raw_flat(const TwoComplex& c, const CrossedModule& cm, const FlatConfig& x) {
  const auto& G = cm.G();
  const auto& H = cm.H();
  for (int f = 0; f < c.num_faces(); ++f) {
    const Face& fa = c.faces[f];
    const Path root{{fa.root, 1}};
    const int hs = path_product(cm, x.h, fa.frame > 0 ? root : fa.boundary);
    const int ht = path_product(cm, x.h, fa.frame > 0 ? fa.boundary : root);
    if (ht != G.mul(hs, cm.t(x.b[f]))) return false;
  }
  for (const auto& cell : c.cells) {
    Path p = cell.start;
    int prod = H.identity();
    for (const auto& st : cell.steps) {
      const Face& fa = c.faces[st.face];
      const Path root{{fa.root, 1}};
      const Path& src = (fa.frame * st.dir > 0) ? root : fa.boundary;
      const Path& dst = (fa.frame * st.dir > 0) ? fa.boundary : root;
      Path suffix(p.begin() + st.at + src.size(), p.end());
      const int b = st.dir > 0 ? x.b[st.face] : H.inv(x.b[st.face]);
      prod = H.mul(prod, cm.act(G.inv(path_product(cm, x.h, suffix)), b));
      Path next(p.begin(), p.begin() + st.at);
      next.insert(next.end(), dst.begin(), dst.end());
      next.insert(next.end(), suffix.begin(), suffix.end());
      p = next;
    }
    if (prod != H.identity()) return false;
  }
  return true;
}

// Every raw decoration in lexicographic order, filtered by raw_flat.
inline std::vector<FlatConfig> brute_flat(const TwoComplex& c, const CrossedModule& cm) {
  const int E = c.num_edges(), F = c.num_faces();
  std::vector<int> digits(E + F, 0);
  std::vector<FlatConfig> out;
  while (true) {
    FlatConfig x{std::vector<int>(digits.begin(), digits.begin() + E), std::vector<int>(digits.begin() + E, digits.end())};
    if (raw_flat(c, cm, x)) out.push_back(x);
    int i = E + F - 1;
    while (i >= 0 && ++digits[i] == (i < E ? cm.G().order() : cm.H().order())) digits[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

// Orbits under the full gauge group, by applying every element.
inline int brute_orbit_count(const TwoComplex& c, const CrossedModule& cm) {
  const auto configs = brute_flat(c, cm);
  const auto gauges = all_gauges(c, cm);
  std::set<FlatConfig> seen;
  int orbits = 0;
  for (const auto& x : configs) {
    if (seen.count(x)) continue;
    ++orbits;
    for (const auto& z : gauges) seen.insert(gauge_apply(c, cm, x, z));
  }
  return orbits;
}

}  // namespace oracle
