// Command-line front end: staged analysis of a manifold input file plus
// cusp-model sampling.  Exit codes: 0 success, 1 mathematical failure
// (validation, degenerate data, float disagreement), 2 usage error.
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cuspforge/pipeline.hpp"

using namespace cuspforge;

namespace {

int run_stage(const std::string& file, Stage stage, bool json, bool flt,
              double rank_tol) {
  PipelineOptions opts;
  opts.float_mode = flt;
  opts.rank_tol = rank_tol;
  if (const char* bits = std::getenv("CUSPFORGE_PRECISION_BITS"))
    opts.prec_bits = static_cast<unsigned>(std::strtoul(bits, nullptr, 10));
  auto in = load_manifold(file);
  auto report = run_pipeline(in, stage, opts);
  std::cout << (json ? render_json(report) : render_text(report));
  if (report.float_checked && !report.float_agrees) return 1;
  return 0;
}

int run_cusp_gen(int type, double lambda1, double lambda2, int samples) {
  if (type < 0 || type > 2 || samples < 1) {
    std::cerr << "cusp-gen: type must be 0, 1 or 2 and samples >= 1\n";
    return 2;
  }
  auto t = static_cast<CuspType>(type);
  std::cout << "type,x,y,z";
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) std::cout << ",m" << i << j;
  std::cout << ",B_p0,B_Mp0\n";
  // fixed base point inside the domain for every type
  const double p0[3] = {2.0, 2.0, 0.0};
  for (int k = 0; k < samples; ++k) {
    double s = samples == 1 ? 0.0 : -1.0 + 2.0 * k / (samples - 1);
    double x = s, y = 0.5 * s, z = 0.25 * s;
    auto M = cusp_group_element(t, x, y, z);
    // image of [p0 : 1] in the affine patch
    double q[4] = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i)
      q[i] = M(i, 0) * p0[0] + M(i, 1) * p0[1] + M(i, 2) * p0[2] + M(i, 3);
    for (int i = 0; i < 3; ++i) q[i] /= q[3];
    std::cout << type << ',' << x << ',' << y << ',' << z;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) std::cout << ',' << M(i, j);
    std::cout << ',' << horosphere_value(t, lambda1, lambda2, p0[0], p0[1], p0[2])
              << ',' << horosphere_value(t, lambda1, lambda2, q[0], q[1], q[2])
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cuspforge: exact peripheral analysis of convex projective "
               "deformations of cusped hyperbolic 3-manifolds"};
  app.require_subcommand(1);

  bool json = false, flt = false;
  double rank_tol = 1e-8;

  std::string file;
  struct Cmd {
    const char* name;
    const char* desc;
    Stage stage;
    CLI::App* sub = nullptr;
  } cmds[] = {
      {"check", "validate the input and report cusp shapes", Stage::Check},
      {"rigidity", "infinitesimal rigidity rel boundary", Stage::Rigidity},
      {"slice-coords", "slice coordinates of the generic class",
       Stage::SliceCoords},
      {"classify", "achievable generalized-cusp types", Stage::Classify},
      {"report", "full report with decomposition diagnostics", Stage::Full},
  };
  for (auto& c : cmds) {
    c.sub = app.add_subcommand(c.name, c.desc);
    c.sub->add_option("input", file, "manifold input file")->required();
    c.sub->add_flag("--json", json, "machine-readable JSON output");
    c.sub->add_flag("--float", flt, "cross-check dimensions numerically");
    c.sub->add_option("--rank-tol", rank_tol,
                      "rank tolerance for the float pipeline");
  }
  auto* lift_cmd = app.add_subcommand("lift", "emit the SO(3,1) holonomy");
  lift_cmd->add_option("input", file, "manifold input file")->required();

  int gen_type = 2, gen_samples = 8;
  double lambda1 = 1.0, lambda2 = 1.0;
  auto* gen_cmd =
      app.add_subcommand("cusp-gen", "sample cusp-model group elements (CSV)");
  gen_cmd->add_option("--type", gen_type, "generalized cusp type (0, 1 or 2)");
  gen_cmd->add_option("--lambda1", lambda1, "first eigenvalue parameter");
  gen_cmd->add_option("--lambda2", lambda2, "second eigenvalue parameter");
  gen_cmd->add_option("--samples", gen_samples, "number of samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen_cmd->parsed()) return run_cusp_gen(gen_type, lambda1, lambda2,
                                               gen_samples);
    if (lift_cmd->parsed()) {
      std::cout << render_lift_json(load_manifold(file));
      return 0;
    }
    for (const auto& c : cmds)
      if (c.sub->parsed()) return run_stage(file, c.stage, json, flt, rank_tol);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
