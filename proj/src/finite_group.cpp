#include "twocs/finite_group.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>

#include "twocs/errors.hpp"
#include "twocs/parallel.hpp"

namespace twocs {

FiniteGroup::FiniteGroup(std::string name, const std::vector<std::vector<int>>& cayley,
                         std::vector<std::string> labels)
    : name_(std::move(name)), n_(static_cast<int>(cayley.size())) {
  if (n_ == 0) throw SchemaError("group table is empty");
  table_.reserve(static_cast<std::size_t>(n_) * n_);
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(cayley[i].size()) != n_)
      throw SchemaError(fmt::format("group '{}': row {} has {} entries, expected {}", name_, i,
                                    cayley[i].size(), n_));
    for (int v : cayley[i]) {
      if (v < 0 || v >= n_)
        throw SchemaError(fmt::format("group '{}': entry {} out of range in row {}", name_, v, i));
      table_.push_back(v);
    }
  }
  for (int e = 0; e < n_ && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  inv_.assign(n_, -1);
  if (identity_ >= 0) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (mul(a, b) == identity_ && mul(b, a) == identity_) {
          inv_[a] = b;
          break;
        }
  }
  if (labels.empty())
    for (int i = 0; i < n_; ++i) labels.push_back(std::to_string(i));
  if (static_cast<int>(labels.size()) != n_)
    throw SchemaError(fmt::format("group '{}': {} labels for {} elements", name_, labels.size(), n_));
  labels_ = std::move(labels);
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup("1", {{0}}, {"e"}); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n <= 0) throw DomainError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(fmt::format("Z{}", n), t);
}

namespace {

std::string cycle_label(const std::vector<int>& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s] || p[s] == static_cast<int>(s)) continue;
    out += "(";
    for (std::size_t x = s; !seen[x]; x = p[x]) {
      seen[x] = true;
      out += std::to_string(x + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace

FiniteGroup FiniteGroup::from_permutations(std::string name,
                                           const std::vector<std::vector<int>>& gens) {
  if (gens.empty()) throw SchemaError("permutation list is empty");
  const std::size_t d = gens.front().size();
  for (const auto& g : gens) {
    if (g.size() != d) throw SchemaError("permutations of different degree");
    std::vector<int> s = g;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < d; ++i)
      if (s[i] != static_cast<int>(i)) throw SchemaError("entry list is not a permutation");
  }
  // Composition convention: (p*q)(x) = p(q(x)).
  auto compose = [](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(q.size());
    for (std::size_t x = 0; x < q.size(); ++x) r[x] = p[q[x]];
    return r;
  };
  std::vector<int> id(d);
  for (std::size_t i = 0; i < d; ++i) id[i] = static_cast<int>(i);
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const auto& g : gens) {
      auto p = compose(elems[k], g);
      if (!index.count(p)) {
        index[p] = static_cast<int>(elems.size());
        elems.push_back(p);
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(cycle_label(elems[a]));
    for (int b = 0; b < n; ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
  }
  FiniteGroup g(std::move(name), t, labels);
  g.perms_ = elems;
  return g;
}

FiniteGroup FiniteGroup::symmetric3() {
  return from_permutations("S3", {{1, 0, 2}, {0, 2, 1}});
}

int FiniteGroup::pow(int a, int k) const {
  int r = identity_;
  if (k < 0) {
    a = inv_[a];
    k = -k;
  }
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::find_label(const std::string& label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  throw DomainError(fmt::format("group '{}' has no element labelled '{}'", name_, label));
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

CheckReport check_group_axioms(const FiniteGroup& g) {
  CheckReport rep = make_report("group_axioms:" + g.name());
  const int n = g.order();
  if (g.identity() < 0) rep.fail("no two-sided identity");
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (int b = 0; b < n; ++b) {
      row[g.mul(a, b)] = true;
      col[g.mul(b, a)] = true;
    }
    if (std::find(row.begin(), row.end(), false) != row.end() ||
        std::find(col.begin(), col.end(), false) != col.end())
      rep.fail(fmt::format("latin square violated at element {}", a));
    if (g.identity() >= 0 && g.inv(a) < 0) rep.fail(fmt::format("no inverse for {}", a));
  }
  // Associativity: one slice of triples per first factor, merged in order.
  std::vector<std::vector<std::string>> bad(n);
  parallel_for(n, [&](int a) {
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) && bad[a].size() < 4)
          bad[a].push_back(fmt::format("associativity fails at ({},{},{})", a, b, c));
  });
  for (const auto& v : bad)
    for (const auto& w : v) rep.fail(w);
  rep.checked = static_cast<long long>(n) * n * n;
  return rep;
}

CheckReport check_homomorphism(const FiniteGroup& a, const FiniteGroup& b,
                               const std::vector<int>& phi) {
  CheckReport rep = make_report("homomorphism");
  if (static_cast<int>(phi.size()) != a.order()) {
    rep.fail("map has wrong length");
    return rep;
  }
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y) {
      ++rep.checked;
      if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y]))
        rep.fail(fmt::format("phi({}*{}) != phi({})*phi({})", x, y, x, y));
    }
  return rep;
}

}  // namespace twocs
