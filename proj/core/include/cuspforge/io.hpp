#pragma once
// Input-file loading: a single JSON document per manifold with a field
// descriptor, a finitely presented group with peripheral structure, the
// holonomy matrices (SL(2,C) to be lifted, or SO(3,1) directly), and an
// optional peripheral symmetry block.  Rationals are strings "p/q"; field
// elements are coefficient vectors in the power basis.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cuspforge/numfield.hpp"
#include "cuspforge/rep.hpp"
#include "cuspforge/sl2c.hpp"

namespace cuspforge {

struct SymmetryInput {
  std::array<std::array<long, 2>, 2> peripheral_matrix{};
  std::map<std::string, std::string> automorphism;  // optional generator images
};

struct ManifoldInput {
  int schema = 0;
  std::string name;
  std::string provenance;
  std::string form;  // "SL2C" or "SO31"
  FieldPtr field;
  Representation<FieldElem> rep;  // the 4x4 holonomy (lifted when form is SL2C)
  std::vector<Matrix<CP<FieldElem>>> sl2_images;  // populated when form is SL2C
  std::optional<SymmetryInput> symmetry;
};

// parse a document; throws std::runtime_error with a description on schema
// violations and std::invalid_argument on malformed numbers/words.  The
// representation is validated (relators map to +-I, peripheral pairs
// commute) before returning.
ManifoldInput parse_manifold(const std::string& json_text);

// read a file and parse it
ManifoldInput load_manifold(const std::string& path);

// numeric copy of an exact representation for the floating pipeline
Representation<double> to_float(const Representation<FieldElem>& rep,
                                unsigned prec_bits = 64);

}  // namespace cuspforge
