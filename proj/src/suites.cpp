#include "twocs/suites.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <set>

#include "twocs/errors.hpp"
#include "twocs/fock_rosly.hpp"
#include "twocs/gauge_hopf.hpp"
#include "twocs/lattice_2algebra.hpp"
#include "twocs/parallel.hpp"
#include "twocs/state_hopf.hpp"

namespace twocs {

namespace fs = std::filesystem;

namespace {

CheckReport residual_report(const std::string& name, double res, double tol) {
  CheckReport r = make_report(name);
  r.residual = res;
  r.checked = 1;
  if (!(res <= tol)) r.fail(fmt::format("residual {:.3e} above {:.1e}", res, tol));
  return r;
}

std::vector<CheckReport> suffixed(std::vector<CheckReport> reps, const std::string& suffix) {
  for (auto& r : reps) r.name += suffix;
  return reps;
}

Lie2Algebra with_trivial_h(const Lie2Algebra& l) {
  Lie2Algebra out;
  out.name = l.name + "_trivial_h";
  out.g_alg = l.g_alg;
  out.h_alg = MatrixLieAlgebra::zero();
  out.t_lin = Mat::Zero(l.dim_g(), 0);
  out.pairing = Mat::Zero(l.dim_g(), l.dim_g());
  return out;
}

}  // namespace

std::vector<TimedReport> run_tasks(const std::vector<Task>& tasks) {
  std::vector<std::vector<TimedReport>> slots(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  parallel_for(static_cast<int>(tasks.size()), [&](int i) {
    try {
      const auto t0 = std::chrono::steady_clock::now();
      auto reps = tasks[i].run();
      const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      for (auto& r : reps) slots[i].push_back({std::move(r), dt / static_cast<double>(std::max<std::size_t>(1, reps.size()))});
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<TimedReport> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

std::vector<CheckReport> validate_2group(const CrossedModule& cm) {
  return {check_structure_maps(cm), check_peiffer(cm), check_interchange(cm), check_inversions(cm)};
}

OrbitSummary orbit_summary(const TwoComplex& c, const CrossedModule& cm, std::int64_t budget) {
  OrbitSummary s;
  const auto part = gauge_orbits(c, cm, budget);
  s.configs = static_cast<int>(part.configs.size());
  s.orbits = part.num_orbits();
  const InvariantProjector proj(c, cm, part.configs);
  const auto ps = summarize_projector(proj);
  s.projector_rank = ps.rank_mod_p;
  // Above the dense limit the rank of an idempotent is read off its exact trace.
  if (s.projector_rank < 0 && ps.idempotent && ps.trace.denominator() == 1)
    s.projector_rank = static_cast<int>(ps.trace.numerator());
  s.observable_dimension = observable_dimension(c, cm, part.configs);
  s.report = make_report(fmt::format("orbit_agreement:{}:{}", c.name, cm.name()));
  s.report.checked = s.configs;
  if (!ps.idempotent) s.report.fail("projector is not idempotent");
  if (s.projector_rank >= 0 && s.projector_rank != s.orbits)
    s.report.fail(fmt::format("projector rank {} != orbit count {}", s.projector_rank, s.orbits));
  if (s.projector_rank < 0) s.report.fail("projector rank skipped (too many configurations)");
  if (s.observable_dimension != s.orbits)
    s.report.fail(fmt::format("observable dimension {} != orbit count {}", s.observable_dimension, s.orbits));
  s.report.residual = s.report.pass ? 0.0 : 1.0;
  return s;
}

std::vector<CheckReport> hopf_check(const CrossedModule& cm, const std::string& suite) {
  static const std::map<std::string, std::set<std::string>> groups{
      {"coassoc", {"coassociativity_h", "coassociativity_v", "counit_h", "counit_v", "sweedler_evaluation"}},
      {"cointerchange", {"cointerchange", "bimonoidal_h", "bimonoidal_v"}},
      {"antipode",
       {"antipode_h", "antipode_v", "antipodes_commute", "antipodes_involutive", "antipode_antihomomorphism"}},
      {"equivariance", {"hopf2_equivariance"}}};
  if (suite != "all" && !groups.count(suite)) throw SchemaError("unknown hopf suite '" + suite + "'");
  std::vector<CheckReport> out;
  for (auto& r : hopf_suite(cm))
    if (suite == "all" || groups.at(suite).count(r.name)) out.push_back(std::move(r));
  return out;
}

std::vector<CheckReport> ybe_check(const RMatrixSpec& r, const RepSpec& rep, double tol) {
  std::vector<CheckReport> out;
  if (r.kind == "classical") {
    const auto c = Classical2R::inn_lift(r.lie2, r.r0);
    auto rep2 = check_2cybe(c, tol);
    rep2.name = "2cybe";
    out.push_back(rep2);
    return out;
  }
  if (rep.dg != r.dim) throw SchemaError(fmt::format("rep dimension {} does not match R dimension {}", rep.dg, r.dim));
  Quantum2R q;
  try {
    q = bootstrap_quantum_2R(r.R, r.dim, rep.tau, rep.dh, tol);
  } catch (const DomainError& e) {
    CheckReport fail = make_report("bootstrap");
    fail.fail(e.what());
    fail.residual = 1.0;
    return {fail};
  }
  out.push_back(check_equivariance(q, tol));
  auto yb = check_2ybe(q, tol);
  yb.name = "2yb";
  out.push_back(yb);
  if (r.kind == "uq_sl2") {
    const UqSl2 u(*r.q);
    out.push_back(residual_report("quasi1", u.quasi1_residual(), tol));
    out.push_back(residual_report("quasi2", u.quasi2_residual(), tol));
    out.push_back(residual_report("intertwining", u.intertwining_residual(), tol));
    out.push_back(residual_report("antipode_contraction", u.antipode_residual(), tol));
  }
  return out;
}

std::vector<CheckReport> fock_rosly_check(const TwoComplex& c, const RMatrixSpec& r, const FockRoslyOptions& opt) {
  if (r.kind != "classical") throw SchemaError("fock-rosly needs a classical r-matrix file");
  opt.params.validate();
  const Mat rv = r.lie2.dim_h() == r.lie2.dim_g() ? r.r0 : Mat::Zero(r.lie2.dim_h(), r.lie2.dim_h());
  FockRoslyModel m(c, r.lie2, r.r0, rv, opt.params, opt.seed);
  std::vector<TracePoly> states;
  for (int f = 0; f < c.num_faces(); ++f)
    for (auto& s : m.state_functions(f)) states.push_back(std::move(s));
  const auto rep = check_bracket_jacobi_compat(m, states, {opt.triples, opt.quadruples, opt.seed, opt.tol});
  std::vector<CheckReport> out{rep.jacobi_h, rep.jacobi_v, rep.compat};
  out[0].name = "jacobi_h";
  out[1].name = "jacobi_v";
  out[2].name = "compat";
  FockRoslyModel heis(c, with_trivial_h(r.lie2), r.r0, Mat::Zero(0, 0), opt.params, opt.seed);
  out.push_back(residual_report("heis_reduction", heis_reduction_residual(heis, r.r0), 1e-12));
  return out;
}

std::vector<CheckReport> semiclassical_check(int levels) {
  if (levels < 2) throw DomainError("the ladder needs at least two levels");
  const Mat r = tensor_from_coeffs(MatrixLieAlgebra::sl2(), standard_sl2_r0_coeffs());
  auto good = semiclassical_limit_check(uq_sl2_family, r, levels);
  good.report.name = "ladder_uq_sl2";
  Mat wrong = r;
  wrong(0, 0) += 0.2;
  const auto bad = semiclassical_limit_check(uq_sl2_family, wrong, levels);
  CheckReport flagged = make_report("wrong_r_flagged");
  flagged.checked = levels;
  flagged.residual = bad.error.empty() ? 0.0 : bad.error.back();
  if (!bad.plateau) flagged.fail("perturbed r did not plateau");
  if (bad.report.pass) flagged.fail("perturbed r passed the ladder");
  return {good.report, flagged};
}

std::vector<fs::path> crossed_module_files(const fs::path& data) {
  std::vector<fs::path> out;
  const fs::path dir = data / "groups";
  if (!fs::is_directory(dir)) throw SchemaError("no groups directory under " + data.string());
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Task> full_report_tasks(const FullReportOptions& opt) {
  std::vector<CrossedModule> cms;
  for (const auto& p : crossed_module_files(opt.data)) cms.push_back(load_crossed_module(p));
  std::vector<TwoComplex> lattices;
  for (const char* n : {"fundamental", "square", "tetrahedron"})
    lattices.push_back(load_complex(opt.data / "lattices" / (std::string(n) + ".json")));

  std::vector<Task> tasks;
  for (const auto& cm : cms) {
    tasks.push_back({"validate:" + cm.name(), [cm] { return validate_2group(cm); }});
    for (const auto& c : lattices) {
      if (raw_decoration_count(c, cm) > kSweepRawLimit) continue;
      tasks.push_back({"orbits", [c, cm, b = opt.budget] {
                         auto s = orbit_summary(c, cm, b);
                         return std::vector<CheckReport>{s.report};
                       }});
    }
    tasks.push_back({"hopf", [cm] { return suffixed(hopf_check(cm), ":" + cm.name()); }});
    tasks.push_back({"gauge_hopf", [cm] { return suffixed(gauge_hopf_suite(cm), ":" + cm.name()); }});
    tasks.push_back({"lattice2", [cm, fundamental = lattices[0]] { return lattice2_suite(fundamental, cm); }});
  }
  const auto rep = rep_from_json(read_json(opt.data / "rmatrix" / "rep_identity.json"));
  for (const char* q : {"1.1", "1.3", "2.0"}) {
    const auto spec = rmatrix_from_json(read_json(opt.data / "rmatrix" / fmt::format("uq_sl2_q{}.json", q)));
    tasks.push_back({"ybe", [spec, rep, tol = std::min(opt.tol, 1e-10), q = std::string(q)] {
                       return suffixed(ybe_check(spec, rep, tol), ":q=" + q);
                     }});
  }
  const auto classical = rmatrix_from_json(read_json(opt.data / "rmatrix" / "inn_sl2_standard.json"));
  tasks.push_back({"2cybe", [classical] { return suffixed(ybe_check(classical, {}), ":inn_sl2"); }});
  const auto bowtie = load_complex(opt.data / "lattices" / "bowtie.json");
  tasks.push_back({"fock_rosly", [bowtie, classical, seed = opt.seed, tol = opt.tol] {
                     FockRoslyOptions o;
                     o.seed = seed;
                     o.tol = tol;
                     return suffixed(fock_rosly_check(bowtie, classical, o), ":bowtie");
                   }});
  tasks.push_back({"semiclassical", [] { return semiclassical_check(); }});
  return tasks;
}

}  // namespace twocs
