#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "twocs/holonomy_gauge.hpp"
#include "twocs/io.hpp"
#include "twocs/rmatrix.hpp"

namespace twocs {

struct Task {
  std::string name;
  std::function<std::vector<CheckReport>()> run;
};

// Runs tasks on thread_count() workers; output keeps task order.
std::vector<TimedReport> run_tasks(const std::vector<Task>& tasks);

std::vector<CheckReport> validate_2group(const CrossedModule& cm);

struct OrbitSummary {
  int configs = 0;
  int orbits = 0;
  int projector_rank = -1;
  int observable_dimension = 0;
  CheckReport report;
};
OrbitSummary orbit_summary(const TwoComplex& c, const CrossedModule& cm, std::int64_t budget = kDefaultBudget);

// suite ∈ {coassoc, cointerchange, antipode, equivariance, all}.
std::vector<CheckReport> hopf_check(const CrossedModule& cm, const std::string& suite = "all");

// Degree-1 YBE suite for "uq_sl2" and "matrix" specs, 2-CYBE for "classical".
std::vector<CheckReport> ybe_check(const RMatrixSpec& r, const RepSpec& rep, double tol = 1e-10);

struct FockRoslyOptions {
  DeformationParams params;
  std::uint64_t seed = 17;
  double tol = 1e-9;
  int triples = 120;
  int quadruples = 24;
};
// Jacobi and compatibility on the matrix-element states of every face, and
// the reduction to the closed-form bracket with 𝔥 = 0.
std::vector<CheckReport> fock_rosly_check(const TwoComplex& c, const RMatrixSpec& r, const FockRoslyOptions& opt = {});

// Ladder for the U_q sl₂ family against the standard r, plus a perturbed r
// that must be flagged as a plateau.
std::vector<CheckReport> semiclassical_check(int levels = 7);

struct FullReportOptions {
  std::filesystem::path data;
  std::int64_t budget = kDefaultBudget;
  std::uint64_t seed = 17;
  double tol = 1e-9;
};
// Orbit sweep cap: pairs above it need the projector's columns in dense form
// beyond about 35 GB (tetrahedron × Inn(S₃)).
inline constexpr std::int64_t kSweepRawLimit = std::int64_t{1} << 24;

// Every suite over the shipped data library.
std::vector<Task> full_report_tasks(const FullReportOptions& opt);

// Crossed-module files in data/groups, sorted by file name.
std::vector<std::filesystem::path> crossed_module_files(const std::filesystem::path& data);

}  // namespace twocs
