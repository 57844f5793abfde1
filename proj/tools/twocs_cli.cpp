#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "twocs/errors.hpp"
#include "twocs/gauge_hopf.hpp"
#include "twocs/io.hpp"
#include "twocs/lattice_2algebra.hpp"
#include "twocs/suites.hpp"

using namespace twocs;
namespace fs = std::filesystem;

namespace {

struct Globals {
  std::string format = "json";
  std::string output;
  std::int64_t budget = kDefaultBudget;
  std::uint64_t seed = 17;
  double tol = 1e-9;
  bool no_header = false;
};

void emit(const std::string& text, const Globals& g) {
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output, std::ios::binary);
  if (!out) throw SchemaError("cannot write " + g.output);
  out << text;
}

std::string document(const std::string& command, const json& body, const std::vector<TimedReport>& reports,
                     const Globals& g) {
  if (g.no_header) return body.dump(2) + "\n";
  return json{{"header", report_header(command, reports)}, {"body", body}}.dump(2) + "\n";
}

// Writes the check list and returns the exit status.
int finish_checks(const std::string& command, const std::vector<TimedReport>& reports, const Globals& g,
                  json extra = json::object()) {
  if (g.format == "csv") {
    emit(report_csv(reports), g);
  } else {
    json body = report_body(reports);
    for (auto& [k, v] : extra.items()) body[k] = v;
    emit(document(command, body, reports, g), g);
  }
  for (const auto& r : reports)
    if (!r.report.pass) return 1;
  return 0;
}

std::vector<TimedReport> timed(const std::string& name, std::function<std::vector<CheckReport>()> f) {
  return run_tasks({{name, std::move(f)}});
}

fs::path default_data() {
  if (const char* env = std::getenv("TWOCS_DATA")) return env;
  return TWOCS_DEFAULT_DATA;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite 2-group lattice gauge theory checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output,-o", g.output, "Write the report to a file");
  app.add_option("--budget", g.budget, "Maximum raw decorations enumerated")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for sampled checks");
  app.add_option("--tol", g.tol, "Tolerance for numeric checks")->check(CLI::PositiveNumber);
  app.add_flag("--no-header", g.no_header, "Omit the header (timestamps and wall times)");

  std::string group_file, lattice_file, suite = "all", rmatrix_file, rep_file, check = "all", state_file;
  int ladder = 7;
  double k = 100.0, k_prime = 0.0;
  bool list = false;

  auto* validate = app.add_subcommand("validate-2group", "Crossed-module axioms");
  validate->add_option("--group", group_file)->required()->check(CLI::ExistingFile);

  auto* flat = app.add_subcommand("enumerate-flat", "Count flat 2-connections");
  flat->add_option("--lattice", lattice_file)->required()->check(CLI::ExistingFile);
  flat->add_option("--group", group_file)->required()->check(CLI::ExistingFile);
  flat->add_flag("--list", list, "Include the configurations");

  auto* orbits = app.add_subcommand("orbits", "Gauge orbits, projector rank and observables");
  orbits->add_option("--lattice", lattice_file)->required()->check(CLI::ExistingFile);
  orbits->add_option("--group", group_file)->required()->check(CLI::ExistingFile);
  orbits->add_option("--state", state_file, "State file to test for invariance")->check(CLI::ExistingFile);

  auto* hopf = app.add_subcommand("hopf-check", "Hopf identities of graph states");
  hopf->add_option("--group", group_file)->required()->check(CLI::ExistingFile);
  hopf->add_option("--suite", suite)->check(CLI::IsMember({"coassoc", "cointerchange", "antipode", "equivariance", "all"}));

  auto* ghopf = app.add_subcommand("gauge-hopf-check", "Hopf identities of gauge transformations");
  ghopf->add_option("--group", group_file)->required()->check(CLI::ExistingFile);
  ghopf->add_option("--suite", suite)->check(CLI::IsMember({"sec", "covariance", "antipode", "bimonoid", "all"}));

  auto* ybe = app.add_subcommand("ybe-check", "2-Yang-Baxter suite");
  ybe->add_option("--rmatrix", rmatrix_file)->required()->check(CLI::ExistingFile);
  ybe->add_option("--rep", rep_file)->check(CLI::ExistingFile);

  auto* fr = app.add_subcommand("fock-rosly", "Fock-Rosly brackets");
  fr->add_option("--lattice", lattice_file)->required()->check(CLI::ExistingFile);
  fr->add_option("--r", rmatrix_file)->required()->check(CLI::ExistingFile);
  fr->add_option("--k", k, "Horizontal level");
  fr->add_option("--k-prime", k_prime, "Vertical level (defaults to k)");

  auto* semi = app.add_subcommand("semiclassical", "Semiclassical ladder");
  semi->add_option("--ladder", ladder)->check(CLI::Range(2, 30));

  auto* l2 = app.add_subcommand("lattice2", "Lattice 2-algebra suite");
  l2->add_option("--lattice", lattice_file)->required()->check(CLI::ExistingFile);
  l2->add_option("--group", group_file)->required()->check(CLI::ExistingFile);
  l2->add_option("--check", check)->check(CLI::IsMember({"covariance", "braid", "star", "observables", "all"}));

  std::string data_dir;
  auto* report = app.add_subcommand("report", "Every suite over the data library");
  report->add_option("--data", data_dir, "Data directory (default: TWOCS_DATA)")->check(CLI::ExistingDirectory);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) {
      const auto cm = load_crossed_module(group_file);
      return finish_checks("validate-2group", timed("validate", [&] { return validate_2group(cm); }), g);
    }
    if (*flat) {
      const auto c = load_complex(lattice_file);
      const auto cm = load_crossed_module(group_file);
      const auto configs = enumerate_flat(c, cm, g.budget);
      if (g.format == "csv") {
        emit(fmt::format("lattice,group,raw,configs\n{},{},{},{}\n", c.name, cm.name(), raw_decoration_count(c, cm),
                         configs.size()),
             g);
        return 0;
      }
      json body{{"lattice", c.name}, {"group", cm.name()}, {"raw", raw_decoration_count(c, cm)}, {"configs", configs.size()}};
      if (list) {
        json arr = json::array();
        for (const auto& cfg : configs) arr.push_back({{"h", cfg.h}, {"b", cfg.b}});
        body["flat"] = arr;
      }
      emit(document("enumerate-flat", body, {}, g), g);
      return 0;
    }
    if (*orbits) {
      const auto c = load_complex(lattice_file);
      const auto cm = load_crossed_module(group_file);
      OrbitSummary s;
      auto reps = timed("orbits", [&] {
        s = orbit_summary(c, cm, g.budget);
        std::vector<CheckReport> out{s.report};
        if (!state_file.empty()) {
          const auto part = gauge_orbits(c, cm, g.budget);
          const auto phi = state_from_json(read_json(state_file), static_cast<int>(part.configs.size()));
          CheckReport inv = make_report("state_invariance");
          for (const auto& orbit : part.orbits)
            for (int i : orbit) {
              ++inv.checked;
              const double d = std::abs(phi[i] - phi[orbit.front()]);
              inv.residual = std::max(inv.residual, d);
              if (d > g.tol) inv.fail(fmt::format("config {} differs from its orbit representative {}", i, orbit.front()));
            }
          out.push_back(inv);
        }
        return out;
      });
      return finish_checks("orbits", reps, g,
                           {{"configs", s.configs},
                            {"orbits", s.orbits},
                            {"projector_rank", s.projector_rank},
                            {"observable_dimension", s.observable_dimension}});
    }
    if (*hopf) {
      const auto cm = load_crossed_module(group_file);
      return finish_checks("hopf-check", timed("hopf", [&] { return hopf_check(cm, suite); }), g);
    }
    if (*ghopf) {
      const auto cm = load_crossed_module(group_file);
      return finish_checks("gauge-hopf-check", timed("gauge_hopf", [&] { return gauge_hopf_suite(cm, suite); }), g);
    }
    if (*ybe) {
      const auto spec = rmatrix_from_json(read_json(rmatrix_file));
      RepSpec rep;
      if (!rep_file.empty()) {
        rep = rep_from_json(read_json(rep_file));
      } else if (spec.kind != "classical") {
        rep.dg = rep.dh = spec.dim;
        rep.tau = Quantum2R::tau_identity(spec.dim);
      }
      return finish_checks("ybe-check", timed("ybe", [&] { return ybe_check(spec, rep, std::min(g.tol, 1e-10)); }), g);
    }
    if (*fr) {
      const auto c = load_complex(lattice_file);
      const auto spec = rmatrix_from_json(read_json(rmatrix_file));
      FockRoslyOptions o;
      o.params.k = k;
      if (k_prime > 0) o.params.k_prime = k_prime;
      o.seed = g.seed;
      o.tol = g.tol;
      return finish_checks("fock-rosly", timed("fock_rosly", [&] { return fock_rosly_check(c, spec, o); }), g);
    }
    if (*semi) {
      return finish_checks("semiclassical", timed("semiclassical", [&] { return semiclassical_check(ladder); }), g);
    }
    if (*l2) {
      const auto c = load_complex(lattice_file);
      const auto cm = load_crossed_module(group_file);
      return finish_checks("lattice2", timed("lattice2", [&] { return lattice2_suite(c, cm, check); }), g);
    }
    if (*report) {
      FullReportOptions o;
      o.data = data_dir.empty() ? default_data() : fs::path(data_dir);
      o.budget = g.budget;
      o.seed = g.seed;
      o.tol = g.tol;
      return finish_checks("report", run_tasks(full_report_tasks(o)), g);
    }
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
