#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "twocs/crossed_module.hpp"
#include "twocs/lie2_algebra.hpp"
#include "twocs/report.hpp"
#include "twocs/rmatrix.hpp"
#include "twocs/two_complex.hpp"

namespace twocs {

using json = nlohmann::json;

// File schemas carry "schema": "twocs/<kind>@1"; a missing tag is accepted.
inline constexpr int kSchemaVersion = 1;

// Reads a JSON file; SchemaError with the parser diagnostic on failure.
json read_json(const std::filesystem::path& p);

// Group: {"name", "order", "mul": [[...]], "labels"?} or
// {"name", "permutations": [[...]]} with the permutations as generators.
FiniteGroup group_from_json(const json& j);
json group_to_json(const FiniteGroup& g);

// Crossed module: {"name", "G", "H", "t": [...], "act": [[...]] (|G| × |H|),
// "convention"?}. G and H are group objects or paths relative to `base`.
CrossedModule crossed_module_from_json(const json& j, const std::filesystem::path& base = {});
json crossed_module_to_json(const CrossedModule& cm);
CrossedModule load_crossed_module(const std::filesystem::path& p);

// Lattice: {"name", "vertices", "edges": [[src, tgt] | {"src","tgt","frame"}],
// "faces": [{"root", "boundary": [[edge, orient], ...], "frame"?}],
// "cells"?: [{"start": [[edge, orient], ...], "steps": [[face, dir, at], ...]}]}.
// A bare {"library": name} selects a built-in complex.
TwoComplex complex_from_json(const json& j);
json complex_to_json(const TwoComplex& c);
TwoComplex load_complex(const std::filesystem::path& p);

// Complex matrices: rows of numbers or [re, im] pairs.
Mat matrix_from_json(const json& j);
json matrix_to_json(const Mat& m);

// Lie algebra: {"name", "basis": [matrix, ...]}. Lie 2-algebra: {"name",
// "g", "h", "t_lin", "act_lin": [...], "pairing"?} or {"builtin": name}.
MatrixLieAlgebra lie_algebra_from_json(const json& j);
Lie2Algebra lie2_algebra_from_json(const json& j);

// State: {"values": {"<config index>": value}} with value a number or
// [re, im]; "stalk_dims" optional. Indices must be below `size`.
std::vector<cplx> state_from_json(const json& j, int size);

// R-matrix file. kind "uq_sl2" {"q"} | "matrix" {"dim", "R"} |
// "classical" {"lie2", "r0"} (coefficients of the degree-0 image).
struct RMatrixSpec {
  std::string kind;
  std::optional<double> q;
  Mat R;
  int dim = 0;
  Lie2Algebra lie2;
  Mat r0;
};
RMatrixSpec rmatrix_from_json(const json& j);

// Representation of t*: kind "identity" {"dim"} | "trivial" {"dim"} |
// "matrix" {"dg", "dh", "tau"}.
struct RepSpec {
  int dg = 2;
  int dh = 2;
  Mat tau;
};
RepSpec rep_from_json(const json& j);

// Report rows. Per-check wall times live in the header so the body is
// reproducible.
struct TimedReport {
  CheckReport report;
  double wall_time = 0.0;
};

json report_body(const std::vector<TimedReport>& reports);
json report_header(const std::string& command, const std::vector<TimedReport>& reports);
std::string report_csv(const std::vector<TimedReport>& reports);

}  // namespace twocs
