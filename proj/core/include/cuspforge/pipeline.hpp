#pragma once
// Orchestration: runs the staged analysis on a loaded manifold (validation,
// cusp shapes, rigidity, slice coordinates, type verdicts, decomposition
// diagnostics, symmetry machinery) and renders the result as text or JSON.
// The exact pipeline is authoritative; float mode re-runs the dimension
// computations numerically and reports any disagreement.

#include <array>
#include <string>
#include <vector>

#include "cuspforge/io.hpp"
#include "cuspforge/pairing.hpp"

namespace cuspforge {

enum class Stage { Check, Rigidity, SliceCoords, Classify, Full };

struct PipelineOptions {
  bool float_mode = false;   // cross-check dimensions numerically
  double rank_tol = 1e-8;    // rank tolerance for the float pipeline
  unsigned prec_bits = 64;   // precision for exact-to-double conversion
};

struct CuspReportEntry {
  size_t index = 0;
  std::string shape_u, shape_v;  // exact scalars, printable
  double shape_u_f = 0, shape_v_f = 0;
  bool argument_ok = false;
  bool reframed = false;  // a shear was applied to pass the argument test
  bool has_coords = false;
  std::string c_a, c_b;  // exact slice coordinates
  double c_a_f = 0, c_b_f = 0;
  std::string verdict;
};

struct SymmetryReport {
  bool present = false;
  std::array<long, 2> gamma_plus{}, gamma_minus{};
  bool type1 = false;          // type-1 criterion on the p-curve
  bool eigenbasis_ok = false;  // phi-pullback eigenvector verification
  std::string note;
};

struct Report {
  std::string name;
  Stage stage = Stage::Check;
  size_t num_generators = 0, num_relators = 0, num_cusps = 0;
  std::vector<CuspReportEntry> cusps;
  bool has_rigidity = false;
  RigidityVerdict rigidity;
  bool has_translemma = false;
  TranslemmaReport translemma;
  SymmetryReport symmetry;
  bool float_checked = false;
  bool float_agrees = true;
  std::vector<std::string> notes;
};

// printable exact scalar: "p/q" for rationals, a power-basis polynomial in
// "a" otherwise
std::string scalar_string(const FieldElem& x);

Report run_pipeline(const ManifoldInput& in, Stage stage,
                    const PipelineOptions& opts = {});

std::string render_text(const Report& r);
std::string render_json(const Report& r);

// the lifted SO(3,1) holonomy re-serialized in the input schema
std::string render_lift_json(const ManifoldInput& in);

}  // namespace cuspforge
