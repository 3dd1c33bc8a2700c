#include "cuspforge/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cuspforge {

using nlohmann::json;

namespace {

std::vector<Rat> rational_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw std::runtime_error(what + " must be an array");
  std::vector<Rat> out;
  for (const auto& e : j) out.push_back(parse_rational(e.get<std::string>()));
  return out;
}

FieldElem field_elem(const FieldPtr& f, const json& j, const std::string& what) {
  return FieldElem(f, rational_list(j, what));
}

}  // namespace

ManifoldInput parse_manifold(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("invalid JSON: ") + e.what());
  }

  ManifoldInput in;
  in.schema = doc.value("schema", 0);
  if (in.schema != 1)
    throw std::runtime_error("unsupported schema version (expected 1)");
  in.name = doc.value("name", "");
  in.provenance = doc.value("provenance", "");

  if (!doc.contains("field")) throw std::runtime_error("missing 'field'");
  auto mp = rational_list(doc["field"]["min_poly"], "field.min_poly");
  auto iv = rational_list(doc["field"]["root_interval"], "field.root_interval");
  if (mp.size() < 2 || iv.size() != 2)
    throw std::runtime_error("field descriptor needs a min_poly and an interval");
  in.field = NumberField::make(mp, iv[0], iv[1]);

  Presentation pres;
  for (const auto& g : doc.at("generators"))
    pres.generator_names.push_back(g.get<std::string>());
  for (const auto& r : doc.at("relators"))
    pres.relators.push_back(parse_word(r.get<std::string>(), pres.generator_names));
  for (const auto& p : doc.at("peripherals"))
    pres.peripherals.push_back(
        {parse_word(p.at("meridian").get<std::string>(), pres.generator_names),
         parse_word(p.at("longitude").get<std::string>(), pres.generator_names)});
  if (pres.generator_names.empty())
    throw std::runtime_error("presentation has no generators");

  in.form = doc.value("form", "");
  if (in.form != "SL2C" && in.form != "SO31")
    throw std::runtime_error("'form' must be \"SL2C\" or \"SO31\"");

  const auto& mats = doc.at("matrices");
  std::vector<Matrix<FieldElem>> images;
  for (const auto& gname : pres.generator_names) {
    if (!mats.contains(gname))
      throw std::runtime_error("missing matrix for generator '" + gname + "'");
    const auto& m = mats[gname];
    if (in.form == "SL2C") {
      Matrix<CP<FieldElem>> a =
          Matrix<CP<FieldElem>>::zero_sized(2, 2, CP<FieldElem>(FieldElem(0)));
      for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) {
          const auto& e = m.at(i).at(j);
          a(i, j) = CP<FieldElem>(field_elem(in.field, e.at(0), "matrix entry"),
                                  field_elem(in.field, e.at(1), "matrix entry"));
        }
      in.sl2_images.push_back(a);
      images.push_back(lift(a));
    } else {
      Matrix<FieldElem> a = Matrix<FieldElem>::zero_sized(4, 4, FieldElem(0));
      for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
          a(i, j) = field_elem(in.field, m.at(i).at(j), "matrix entry");
      images.push_back(a);
    }
  }
  in.rep = Representation<FieldElem>{pres, images};
  auto errs = in.rep.validate();
  if (!errs.empty())
    throw std::runtime_error("holonomy fails validation: " + errs.front());

  if (doc.contains("symmetry")) {
    SymmetryInput sym;
    const auto& s = doc["symmetry"];
    const auto& pm = s.at("peripheral_matrix");
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j)
        sym.peripheral_matrix[i][j] = pm.at(i).at(j).get<long>();
    if (s.contains("automorphism"))
      for (auto it = s["automorphism"].begin(); it != s["automorphism"].end();
           ++it)
        sym.automorphism[it.key()] = it.value().get<std::string>();
    in.symmetry = sym;
  }
  return in;
}

ManifoldInput load_manifold(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_manifold(ss.str());
}

Representation<double> to_float(const Representation<FieldElem>& rep,
                                unsigned prec_bits) {
  std::vector<Matrix<double>> images;
  for (const auto& m : rep.images) {
    Matrix<double> f = Matrix<double>::zero_sized(m.rows(), m.cols(), 0.0);
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j) f(i, j) = m(i, j).to_double(prec_bits);
    images.push_back(f);
  }
  return {rep.pres, images};
}

}  // namespace cuspforge
