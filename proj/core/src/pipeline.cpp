#include "cuspforge/pipeline.hpp"

#include <sstream>

#include "json.hpp"

namespace cuspforge {

using nlohmann::json;

namespace {

int level(Stage s) { return static_cast<int>(s); }

std::string rat_string(const Rat& q) { return q.get_str(); }

std::string verdict_string(TypeVerdict v) {
  switch (v) {
    case TypeVerdict::Type2Achievable:
      return "type-2 achievable";
    case TypeVerdict::Type1Or2Achievable:
      return "type-1-or-2 achievable";
    case TypeVerdict::NoConclusion:
      return "no conclusion (type 0 to first order)";
  }
  return "?";
}

// exact per-cusp peripheral cohomology dimensions at the normalized shape
template <class T>
std::array<size_t, 3> torus_dims(const T& u, const T& v, double tol) {
  Representation<T> tor{torus_presentation(),
                        {standard_parabolic(one_like(u), zero_like(u)),
                         standard_parabolic(u, v)}};
  return {h1(tor, Module::V, tol).h1_dim, h1(tor, Module::SO31, tol).h1_dim,
          h1(tor, Module::G, tol).h1_dim};
}

}  // namespace

std::string scalar_string(const FieldElem& x) {
  if (auto q = x.rational_value()) return rat_string(*q);
  std::ostringstream out;
  bool first = true;
  const auto& c = x.coeffs();
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first) out << " + ";
    out << rat_string(c[i]);
    if (i == 1) out << "*a";
    if (i > 1) out << "*a^" << i;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

Report run_pipeline(const ManifoldInput& in, Stage stage,
                    const PipelineOptions& opts) {
  Report r;
  r.name = in.name;
  r.stage = stage;
  r.num_generators = in.rep.pres.num_generators();
  r.num_relators = in.rep.pres.relators.size();
  r.num_cusps = in.rep.pres.num_cusps();

  // working copy; peripheral frames may be sheared below
  Representation<FieldElem> rep = in.rep;

  // cusp shapes
  std::vector<NormalizedPeripheral<FieldElem>> norms;
  for (size_t i = 0; i < r.num_cusps; ++i) {
    CuspReportEntry e;
    e.index = i;
    const auto& pp = rep.pres.peripherals[i];
    auto np = normalize_peripheral(rep.evaluate(pp.meridian),
                                   rep.evaluate(pp.longitude));
    e.argument_ok = cusp_shape_argument_ok(np.u, np.v);
    if (!e.argument_ok && level(stage) >= level(Stage::SliceCoords)) {
      if (auto fixed = find_reframe_shear(rep, i)) {
        rep.pres = *fixed;
        e.reframed = true;
        np = normalize_peripheral(
            rep.evaluate(rep.pres.peripherals[i].meridian),
            rep.evaluate(rep.pres.peripherals[i].longitude));
        e.argument_ok = cusp_shape_argument_ok(np.u, np.v);
        r.notes.push_back("cusp " + std::to_string(i) +
                          ": peripheral frame sheared to satisfy the shape "
                          "argument condition");
      } else {
        r.notes.push_back("cusp " + std::to_string(i) +
                          ": no shear fixes the shape argument condition");
      }
    }
    e.shape_u = scalar_string(np.u);
    e.shape_v = scalar_string(np.v);
    e.shape_u_f = np.u.to_double(opts.prec_bits);
    e.shape_v_f = np.v.to_double(opts.prec_bits);
    norms.push_back(np);
    r.cusps.push_back(e);
  }
  if (level(stage) < level(Stage::Rigidity)) return r;

  // rigidity
  r.rigidity = rigidity_verdict(rep);
  r.has_rigidity = true;
  auto coh = h1(rep, Module::V);

  // slice coordinates and type verdicts
  Cocycle<FieldElem> zclass{Module::V, {}};
  bool have_class = false;
  if (level(stage) >= level(Stage::SliceCoords)) {
    if (!r.rigidity.rigid) {
      r.notes.push_back(
          "not infinitesimally rigid rel boundary; slice coordinates skipped");
    } else {
      zclass = generic_class(rep, coh.h1_basis);
      have_class = true;
      auto coords = slice_coordinates(rep, zclass);
      auto verdicts = classify_types(coords);
      for (size_t i = 0; i < r.num_cusps; ++i) {
        auto& e = r.cusps[i];
        e.has_coords = true;
        e.c_a = scalar_string(coords.per_cusp[i].first);
        e.c_b = scalar_string(coords.per_cusp[i].second);
        e.c_a_f = coords.per_cusp[i].first.to_double(opts.prec_bits);
        e.c_b_f = coords.per_cusp[i].second.to_double(opts.prec_bits);
        if (level(stage) >= level(Stage::Classify))
          e.verdict = verdict_string(verdicts[i]);
      }
    }
  }

  // symmetry machinery and the type-1 criterion
  if (in.symmetry && level(stage) >= level(Stage::Classify) && have_class) {
    auto& sym = r.symmetry;
    sym.present = true;
    auto pm = involution_pm_basis(in.symmetry->peripheral_matrix);
    sym.gamma_plus = pm.plus;
    sym.gamma_minus = pm.minus;
    const auto& pp = rep.pres.peripherals[0];
    Word gp = pp.meridian.power(pm.plus[0]) * pp.longitude.power(pm.plus[1]);
    Word gm = pp.meridian.power(pm.minus[0]) * pp.longitude.power(pm.minus[1]);
    sym.type1 = type1_criterion(rep, zclass, gp);
    auto np = normalize_peripheral(rep.evaluate(gm), rep.evaluate(gp));
    if (!scalar_is_zero(np.u)) {
      sym.note = "cusp shape is not purely imaginary in the symmetric frame";
    } else {
      Representation<FieldElem> tor{
          torus_presentation(),
          {standard_parabolic(one_like(np.u), zero_like(np.u)),
           standard_parabolic(np.u, np.v)}};
      auto [zp, zm] = z_pm_cocycles(tor);
      auto A = solve_intertwiner(tor);
      if (!A) {
        sym.note = "no invertible intertwiner found";
      } else {
        sym.eigenbasis_ok = phi_eigen_check(tor, *A, zp, zm).ok;
      }
    }
  }

  // peripheral decomposition diagnostics
  if (level(stage) >= level(Stage::Full)) {
    r.translemma = translemma_check(rep);
    r.has_translemma = true;
  }

  // float cross-check of every dimension claim
  if (opts.float_mode) {
    r.float_checked = true;
    auto frep = to_float(rep, opts.prec_bits);
    auto fv = rigidity_verdict(frep, opts.rank_tol);
    if (fv.z1_dim != r.rigidity.z1_dim || fv.b1_dim != r.rigidity.b1_dim ||
        fv.h1_dim != r.rigidity.h1_dim || fv.rigid != r.rigidity.rigid) {
      r.float_agrees = false;
      r.notes.push_back("float pipeline disagrees on rigidity dimensions");
    }
    for (size_t i = 0; i < r.num_cusps; ++i) {
      auto ed = torus_dims(norms[i].u, norms[i].v, 1e-8);
      auto fd = torus_dims(norms[i].u.to_double(opts.prec_bits),
                           norms[i].v.to_double(opts.prec_bits), opts.rank_tol);
      if (ed != fd) {
        r.float_agrees = false;
        r.notes.push_back("float pipeline disagrees on peripheral dimensions "
                          "for cusp " +
                          std::to_string(i));
      }
    }
    if (r.has_translemma) {
      auto ft = translemma_check(frep, opts.rank_tol);
      if (ft.skipped != r.translemma.skipped ||
          ft.dim_tangent != r.translemma.dim_tangent ||
          ft.dim_res != r.translemma.dim_res ||
          ft.dim_span != r.translemma.dim_span) {
        r.float_agrees = false;
        r.notes.push_back("float pipeline disagrees on the decomposition "
                          "diagnostics");
      }
    }
  }
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream o;
  o << "manifold: " << r.name << "\n";
  o << "presentation: " << r.num_generators << " generators, "
    << r.num_relators << " relators, " << r.num_cusps << " cusps; holonomy "
    << "validated\n";
  for (const auto& e : r.cusps) {
    o << "cusp " << e.index << ": shape u = " << e.shape_u << " (" << e.shape_u_f
      << "), v = " << e.shape_v << " (" << e.shape_v_f << "), argument "
      << (e.argument_ok ? "ok" : "DEGENERATE")
      << (e.reframed ? " [reframed]" : "") << "\n";
  }
  if (r.has_rigidity) {
    o << "rigidity: " << (r.rigidity.rigid ? "RIGID" : "NOT RIGID")
      << " rel boundary; dim Z1 = " << r.rigidity.z1_dim
      << ", dim B1 = " << r.rigidity.b1_dim
      << ", dim H1 = " << r.rigidity.h1_dim << " (module v)\n";
  }
  for (const auto& e : r.cusps)
    if (e.has_coords) {
      o << "cusp " << e.index << ": slice coordinates c_a = " << e.c_a << " ("
        << e.c_a_f << "), c_b = " << e.c_b << " (" << e.c_b_f << ")";
      if (!e.verdict.empty()) o << "; " << e.verdict;
      o << "\n";
    }
  if (r.symmetry.present) {
    o << "symmetry: gamma+ = (" << r.symmetry.gamma_plus[0] << ","
      << r.symmetry.gamma_plus[1] << "), gamma- = ("
      << r.symmetry.gamma_minus[0] << "," << r.symmetry.gamma_minus[1]
      << "); type-1 criterion " << (r.symmetry.type1 ? "HOLDS" : "fails")
      << "; eigenbasis check "
      << (r.symmetry.eigenbasis_ok ? "passed" : "not verified");
    if (!r.symmetry.note.empty()) o << " (" << r.symmetry.note << ")";
    o << "\n";
    if (r.symmetry.type1) o << "type-1 achievable via symmetry criterion\n";
  }
  if (r.has_translemma) {
    if (r.translemma.skipped)
      o << "decomposition check skipped: " << r.translemma.note << "\n";
    else
      o << "decomposition: tangent " << r.translemma.dim_tangent << ", res "
        << r.translemma.dim_res << ", intersection "
        << r.translemma.dim_intersection << ", span " << r.translemma.dim_span
        << (r.translemma.ok ? " [ok]" : " [MISMATCH]") << "\n";
  }
  if (r.float_checked)
    o << "float cross-check: " << (r.float_agrees ? "agrees" : "DISAGREES")
      << "\n";
  for (const auto& n : r.notes) o << "note: " << n << "\n";
  return o.str();
}

std::string render_json(const Report& r) {
  json j;
  j["name"] = r.name;
  j["generators"] = r.num_generators;
  j["relators"] = r.num_relators;
  j["num_cusps"] = r.num_cusps;
  j["cusps"] = json::array();
  for (const auto& e : r.cusps) {
    json c;
    c["index"] = e.index;
    c["shape"] = {{"u", e.shape_u},
                  {"v", e.shape_v},
                  {"u_float", e.shape_u_f},
                  {"v_float", e.shape_v_f}};
    c["argument_ok"] = e.argument_ok;
    c["reframed"] = e.reframed;
    if (e.has_coords) {
      c["slice_coordinates"] = {{"c_a", e.c_a},
                                {"c_b", e.c_b},
                                {"c_a_float", e.c_a_f},
                                {"c_b_float", e.c_b_f}};
      if (!e.verdict.empty()) c["verdict"] = e.verdict;
    }
    j["cusps"].push_back(c);
  }
  if (r.has_rigidity) {
    j["rigidity"] = {{"rigid", r.rigidity.rigid},
                     {"z1_dim", r.rigidity.z1_dim},
                     {"b1_dim", r.rigidity.b1_dim},
                     {"h1_dim", r.rigidity.h1_dim},
                     {"module", "v"}};
  }
  if (r.symmetry.present) {
    j["symmetry"] = {
        {"gamma_plus", {r.symmetry.gamma_plus[0], r.symmetry.gamma_plus[1]}},
        {"gamma_minus", {r.symmetry.gamma_minus[0], r.symmetry.gamma_minus[1]}},
        {"type1_criterion", r.symmetry.type1},
        {"eigenbasis_ok", r.symmetry.eigenbasis_ok},
        {"note", r.symmetry.note}};
  }
  if (r.has_translemma) {
    j["decomposition"] = {{"skipped", r.translemma.skipped},
                          {"note", r.translemma.note},
                          {"dim_tangent", r.translemma.dim_tangent},
                          {"dim_res", r.translemma.dim_res},
                          {"dim_intersection", r.translemma.dim_intersection},
                          {"dim_span", r.translemma.dim_span},
                          {"ok", r.translemma.ok}};
  }
  if (r.float_checked) j["float_agrees"] = r.float_agrees;
  j["notes"] = r.notes;
  return j.dump(1) + "\n";
}

std::string render_lift_json(const ManifoldInput& in) {
  json j;
  j["schema"] = 1;
  j["name"] = in.name;
  j["provenance"] = in.provenance + " (lifted to SO(3,1))";
  json field;
  for (const auto& c : in.field->min_poly())
    field["min_poly"].push_back(rat_string(c));
  auto iv = in.field->root_enclosure(Rat(1, 1024));
  field["root_interval"] = {rat_string(iv.first), rat_string(iv.second)};
  j["field"] = field;
  const auto& pres = in.rep.pres;
  j["generators"] = pres.generator_names;
  j["relators"] = json::array();
  for (const auto& w : pres.relators)
    j["relators"].push_back(print_word(w, pres.generator_names));
  j["peripherals"] = json::array();
  for (const auto& p : pres.peripherals)
    j["peripherals"].push_back(
        {{"meridian", print_word(p.meridian, pres.generator_names)},
         {"longitude", print_word(p.longitude, pres.generator_names)}});
  j["form"] = "SO31";
  size_t deg = size_t(in.field->degree());
  for (size_t g = 0; g < pres.num_generators(); ++g) {
    json m = json::array();
    for (size_t i = 0; i < 4; ++i) {
      json row = json::array();
      for (size_t k = 0; k < 4; ++k) {
        json entry = json::array();
        const auto& c = in.rep.images[g](i, k).coeffs();
        for (size_t d = 0; d < deg; ++d)
          entry.push_back(rat_string(d < c.size() ? c[d] : Rat(0)));
        row.push_back(entry);
      }
      m.push_back(row);
    }
    j["matrices"][pres.generator_names[g]] = m;
  }
  return j.dump(1) + "\n";
}

}  // namespace cuspforge
