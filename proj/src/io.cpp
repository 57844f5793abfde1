#include "twocs/io.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <sstream>

#include "twocs/errors.hpp"

namespace twocs {

namespace fs = std::filesystem;

namespace {

void check_schema(const json& j, const std::string& kind) {
  if (!j.is_object()) throw SchemaError(kind + ": expected a JSON object");
  if (!j.contains("schema")) return;
  const std::string want = fmt::format("twocs/{}@{}", kind, kSchemaVersion);
  if (!j["schema"].is_string() || j["schema"].get<std::string>() != want)
    throw SchemaError(fmt::format("{}: schema tag {} differs from {}", kind, j["schema"].dump(), want));
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw SchemaError(fmt::format("{}: missing field '{}'", where, key));
  return j[key];
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(fmt::format("{}: expected an integer, got {}", where, j.dump()));
  return j.get<int>();
}

std::vector<int> int_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], fmt::format("{}[{}]", where, i)));
  return out;
}

std::vector<std::vector<int>> int_table(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of arrays");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_array(j[i], fmt::format("{}[{}]", where, i)));
  return out;
}

cplx as_complex(const json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw SchemaError(fmt::format("{}: expected a number or [re, im], got {}", where, j.dump()));
}

json complex_to_json(cplx z) {
  if (z.imag() == 0.0) return z.real();
  return json::array({z.real(), z.imag()});
}

Path path_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected a path array");
  Path p;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto s = int_array(j[i], fmt::format("{}[{}]", where, i));
    if (s.size() != 2 || (s[1] != 1 && s[1] != -1))
      throw SchemaError(fmt::format("{}[{}]: expected [edge, ±1]", where, i));
    p.push_back({s[0], s[1]});
  }
  return p;
}

json path_to_json(const Path& p) {
  json a = json::array();
  for (const auto& s : p) a.push_back({s.edge, s.orient});
  return a;
}

}  // namespace

json read_json(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw SchemaError(fmt::format("cannot open {}", p.string()));
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(fmt::format("{}: {}", p.string(), e.what()));
  }
}

FiniteGroup group_from_json(const json& j) {
  check_schema(j, "group");
  const std::string name = j.value("name", std::string("group"));
  if (j.contains("permutations")) {
    const auto gens = int_table(j["permutations"], name + ".permutations");
    if (gens.empty()) throw SchemaError(name + ": empty permutation list");
    for (const auto& g : gens) {
      std::vector<int> seen(g.size(), 0);
      for (int x : g) {
        if (x < 0 || x >= static_cast<int>(g.size()) || seen[x]++)
          throw SchemaError(name + ": generator is not a permutation");
      }
      if (g.size() != gens[0].size()) throw SchemaError(name + ": generators act on different degrees");
    }
    return FiniteGroup::from_permutations(name, gens);
  }
  const auto mul = int_table(field(j, "mul", name), name + ".mul");
  const int n = j.contains("order") ? as_int(j["order"], name + ".order") : static_cast<int>(mul.size());
  if (static_cast<int>(mul.size()) != n) throw SchemaError(fmt::format("{}: mul has {} rows, order {}", name, mul.size(), n));
  for (std::size_t r = 0; r < mul.size(); ++r) {
    if (static_cast<int>(mul[r].size()) != n)
      throw SchemaError(fmt::format("{}: mul row {} has {} entries", name, r, mul[r].size()));
    for (int x : mul[r])
      if (x < 0 || x >= n) throw SchemaError(fmt::format("{}: mul entry {} out of range in row {}", name, x, r));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || static_cast<int>(j["labels"].size()) != n)
      throw SchemaError(name + ": labels must list one string per element");
    for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
  }
  try {
    return FiniteGroup(name, mul, labels);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(fmt::format("{}: {}", name, e.what()));
  }
}

json group_to_json(const FiniteGroup& g) {
  json labels = json::array();
  for (int i = 0; i < g.order(); ++i) labels.push_back(g.label(i));
  return {{"schema", fmt::format("twocs/group@{}", kSchemaVersion)},
          {"name", g.name()},
          {"order", g.order()},
          {"mul", g.table()},
          {"labels", labels}};
}

CrossedModule crossed_module_from_json(const json& j, const fs::path& base) {
  check_schema(j, "crossed_module");
  const std::string name = j.value("name", std::string("crossed_module"));
  auto group = [&](const char* key) {
    const json& g = field(j, key, name);
    if (g.is_string()) return group_from_json(read_json(base / g.get<std::string>()));
    return group_from_json(g);
  };
  FiniteGroup G = group("G"), H = group("H");
  const auto t = int_array(field(j, "t", name), name + ".t");
  const auto act = int_table(field(j, "act", name), name + ".act");
  if (static_cast<int>(t.size()) != H.order())
    throw SchemaError(fmt::format("{}: t has {} entries, |H| = {}", name, t.size(), H.order()));
  for (int x : t)
    if (x < 0 || x >= G.order()) throw SchemaError(fmt::format("{}: t entry {} out of range", name, x));
  if (static_cast<int>(act.size()) != G.order())
    throw SchemaError(fmt::format("{}: act has {} rows, |G| = {}", name, act.size(), G.order()));
  for (std::size_t r = 0; r < act.size(); ++r) {
    if (static_cast<int>(act[r].size()) != H.order())
      throw SchemaError(fmt::format("{}: act row {} has {} entries, |H| = {}", name, r, act[r].size(), H.order()));
    for (int y : act[r])
      if (y < 0 || y >= H.order()) throw SchemaError(fmt::format("{}: act entry {} out of range", name, y));
  }
  const auto conv = convention_from_string(j.value("convention", std::string("right_whisker")));
  try {
    return CrossedModule(name, std::move(G), std::move(H), t, act, conv);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(fmt::format("{}: {}", name, e.what()));
  }
}

json crossed_module_to_json(const CrossedModule& cm) {
  return {{"schema", fmt::format("twocs/crossed_module@{}", kSchemaVersion)},
          {"name", cm.name()},
          {"G", group_to_json(cm.G())},
          {"H", group_to_json(cm.H())},
          {"t", cm.t_map()},
          {"act", cm.act_table()},
          {"convention", to_string(cm.convention())}};
}

CrossedModule load_crossed_module(const fs::path& p) {
  return crossed_module_from_json(read_json(p), p.parent_path());
}

TwoComplex complex_from_json(const json& j) {
  check_schema(j, "lattice");
  if (j.contains("library")) return TwoComplex::by_name(j["library"].get<std::string>());
  TwoComplex c;
  c.name = j.value("name", std::string("lattice"));
  c.num_vertices = as_int(field(j, "vertices", c.name), c.name + ".vertices");
  const json& edges = field(j, "edges", c.name);
  if (!edges.is_array()) throw SchemaError(c.name + ".edges: expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = fmt::format("{}.edges[{}]", c.name, i);
    Edge e;
    if (edges[i].is_array()) {
      const auto st = int_array(edges[i], where);
      if (st.size() != 2) throw SchemaError(where + ": expected [src, tgt]");
      e = {st[0], st[1], 1};
    } else {
      e = {as_int(field(edges[i], "src", where), where + ".src"), as_int(field(edges[i], "tgt", where), where + ".tgt"),
           edges[i].contains("frame") ? as_int(edges[i]["frame"], where + ".frame") : 1};
    }
    c.edges.push_back(e);
  }
  const json faces = j.value("faces", json::array());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const std::string where = fmt::format("{}.faces[{}]", c.name, i);
    Face f;
    f.root = as_int(field(faces[i], "root", where), where + ".root");
    f.boundary = path_from_json(field(faces[i], "boundary", where), where + ".boundary");
    f.frame = faces[i].contains("frame") ? as_int(faces[i]["frame"], where + ".frame") : 1;
    c.faces.push_back(f);
  }
  const json cells = j.value("cells", json::array());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string where = fmt::format("{}.cells[{}]", c.name, i);
    Cell3 cell;
    cell.start = path_from_json(field(cells[i], "start", where), where + ".start");
    for (const auto& s : int_table(field(cells[i], "steps", where), where + ".steps")) {
      if (s.size() != 3) throw SchemaError(where + ": steps are [face, dir, at]");
      cell.steps.push_back({s[0], s[1], s[2]});
    }
    c.cells.push_back(cell);
  }
  const auto v = validate_complex(c);
  if (!v.valid) throw SchemaError(fmt::format("{}: invalid complex: {}", c.name, v.violations.empty() ? "" : v.violations[0]));
  return c;
}

json complex_to_json(const TwoComplex& c) {
  json edges = json::array(), faces = json::array(), cells = json::array();
  for (const auto& e : c.edges) edges.push_back({{"src", e.src}, {"tgt", e.tgt}, {"frame", e.frame}});
  for (const auto& f : c.faces)
    faces.push_back({{"root", f.root}, {"boundary", path_to_json(f.boundary)}, {"frame", f.frame}});
  for (const auto& cell : c.cells) {
    json steps = json::array();
    for (const auto& s : cell.steps) steps.push_back({s.face, s.dir, s.at});
    cells.push_back({{"start", path_to_json(cell.start)}, {"steps", steps}});
  }
  return {{"schema", fmt::format("twocs/lattice@{}", kSchemaVersion)},
          {"name", c.name},
          {"vertices", c.num_vertices},
          {"edges", edges},
          {"faces", faces},
          {"cells", cells}};
}

TwoComplex load_complex(const fs::path& p) { return complex_from_json(read_json(p)); }

Mat matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw SchemaError("matrix: expected an array of rows");
  const int rows = static_cast<int>(j.size()), cols = static_cast<int>(j[0].size());
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
      throw SchemaError(fmt::format("matrix: row {} has the wrong length", r));
    for (int c = 0; c < cols; ++c) m(r, c) = as_complex(j[r][c], fmt::format("matrix[{}][{}]", r, c));
  }
  return m;
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

MatrixLieAlgebra lie_algebra_from_json(const json& j) {
  check_schema(j, "lie_algebra");
  if (j.contains("builtin")) {
    const std::string b = j["builtin"].get<std::string>();
    if (b == "sl2") return MatrixLieAlgebra::sl2();
    throw SchemaError("unknown Lie algebra '" + b + "'");
  }
  std::vector<Mat> basis;
  for (const auto& m : field(j, "basis", "lie_algebra")) basis.push_back(matrix_from_json(m));
  try {
    return MatrixLieAlgebra(j.value("name", std::string("lie_algebra")), basis);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("lie_algebra: ") + e.what());
  }
}

Lie2Algebra lie2_algebra_from_json(const json& j) {
  if (j.is_string() || (j.is_object() && j.contains("builtin"))) {
    const std::string b = j.is_string() ? j.get<std::string>() : j["builtin"].get<std::string>();
    if (b == "inn_sl2") return Lie2Algebra::inn_sl2();
    if (b == "sl2_zero_v") return Lie2Algebra::sl2_zero_v();
    throw SchemaError("unknown Lie 2-algebra '" + b + "'");
  }
  check_schema(j, "lie2_algebra");
  Lie2Algebra l;
  l.name = j.value("name", std::string("lie2_algebra"));
  l.g_alg = lie_algebra_from_json(field(j, "g", l.name));
  l.h_alg = lie_algebra_from_json(field(j, "h", l.name));
  l.t_lin = matrix_from_json(field(j, "t_lin", l.name));
  for (const auto& m : field(j, "act_lin", l.name)) l.act_lin.push_back(matrix_from_json(m));
  const int n = l.dim_g() + l.dim_h();
  l.pairing = j.contains("pairing") ? matrix_from_json(j["pairing"]) : Mat::Zero(n, n);
  if (l.t_lin.rows() != l.dim_g() || l.t_lin.cols() != l.dim_h())
    throw SchemaError(l.name + ": t_lin must be dim g × dim h");
  if (static_cast<int>(l.act_lin.size()) != l.dim_g()) throw SchemaError(l.name + ": act_lin needs one matrix per g basis element");
  return l;
}

std::vector<cplx> state_from_json(const json& j, int size) {
  check_schema(j, "state");
  std::vector<cplx> out(size, cplx(0));
  const json& values = field(j, "values", "state");
  if (!values.is_object()) throw SchemaError("state.values: expected an object");
  for (const auto& [key, v] : values.items()) {
    std::size_t used = 0;
    int idx = -1;
    try {
      idx = std::stoi(key, &used);
    } catch (const std::exception&) {
    }
    if (used != key.size() || idx < 0 || idx >= size)
      throw SchemaError(fmt::format("state.values: key '{}' is not a configuration index below {}", key, size));
    out[idx] = as_complex(v, "state.values." + key);
  }
  return out;
}

RMatrixSpec rmatrix_from_json(const json& j) {
  check_schema(j, "rmatrix");
  RMatrixSpec s;
  s.kind = field(j, "kind", "rmatrix").get<std::string>();
  if (s.kind == "uq_sl2") {
    s.q = field(j, "q", "rmatrix").get<double>();
    if (!(*s.q > 0.0) || *s.q == 1.0) throw SchemaError("rmatrix: q must be positive and different from 1");
    s.dim = 2;
    s.R = UqSl2(*s.q).R();
  } else if (s.kind == "matrix") {
    s.dim = as_int(field(j, "dim", "rmatrix"), "rmatrix.dim");
    s.R = matrix_from_json(field(j, "R", "rmatrix"));
    if (s.R.rows() != s.dim * s.dim || s.R.cols() != s.dim * s.dim)
      throw SchemaError("rmatrix: R must be dim² × dim²");
  } else if (s.kind == "classical") {
    s.lie2 = lie2_algebra_from_json(j.value("lie2", json("inn_sl2")));
    s.r0 = j.contains("r0") ? matrix_from_json(j["r0"]) : standard_sl2_r0_coeffs();
    if (s.r0.rows() != s.lie2.dim_g() || s.r0.cols() != s.lie2.dim_g())
      throw SchemaError("rmatrix: r0 must be dim g × dim g");
  } else {
    throw SchemaError("rmatrix: unknown kind '" + s.kind + "'");
  }
  return s;
}

RepSpec rep_from_json(const json& j) {
  check_schema(j, "rep");
  RepSpec r;
  const std::string kind = field(j, "kind", "rep").get<std::string>();
  if (kind == "identity") {
    r.dg = r.dh = j.value("dim", 2);
    r.tau = Quantum2R::tau_identity(r.dg);
  } else if (kind == "trivial") {
    r.dg = j.value("dim", 2);
    r.dh = 1;
    r.tau = Quantum2R::tau_trivial(r.dg);
  } else if (kind == "matrix") {
    r.dg = as_int(field(j, "dg", "rep"), "rep.dg");
    r.dh = as_int(field(j, "dh", "rep"), "rep.dh");
    r.tau = matrix_from_json(field(j, "tau", "rep"));
    if (r.tau.rows() != r.dg * r.dg || r.tau.cols() != r.dh * r.dh) throw SchemaError("rep: tau must be dg² × dh²");
  } else {
    throw SchemaError("rep: unknown kind '" + kind + "'");
  }
  return r;
}

json report_body(const std::vector<TimedReport>& reports) {
  json checks = json::array();
  bool all = true;
  for (const auto& t : reports) {
    const auto& r = t.report;
    all = all && r.pass;
    json o = {{"name", r.name}, {"status", r.pass ? "pass" : "fail"}, {"checked", r.checked}};
    if (std::isfinite(r.residual))
      o["residual"] = r.residual;
    else
      o["residual"] = fmt::format("{}", r.residual);
    if (!r.witnesses.empty()) o["witnesses"] = r.witnesses;
    checks.push_back(o);
  }
  return {{"status", all ? "pass" : "fail"}, {"checks", checks}};
}

json report_header(const std::string& command, const std::vector<TimedReport>& reports) {
  json times = json::object();
  double total = 0;
  for (const auto& t : reports) {
    times[t.report.name] = t.wall_time;
    total += t.wall_time;
  }
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return {{"tool", "twocs"},
          {"schema", fmt::format("twocs/report@{}", kSchemaVersion)},
          {"command", command},
          {"generated_at", buf},
          {"wall_time", times},
          {"total_wall_time", total}};
}

std::string report_csv(const std::vector<TimedReport>& reports) {
  std::ostringstream out;
  out << "name,status,residual,checked\n";
  for (const auto& t : reports) {
    std::string name = t.report.name;
    if (name.find_first_of(",\"") != std::string::npos) {
      std::string q = "\"";
      for (char ch : name) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      name = q + "\"";
    }
    out << fmt::format("{},{},{:.6e},{}\n", name, t.report.pass ? "pass" : "fail", t.report.residual, t.report.checked);
  }
  return out.str();
}

}  // namespace twocs
