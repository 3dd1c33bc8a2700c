#pragma once
// Scalar helpers shared by the normalization and slice layers: sign and
// square root dispatched over the supported scalar types (exact field
// elements, rationals, doubles).

#include <cmath>
#include <optional>

#include "cuspforge/numfield.hpp"

namespace cuspforge {

inline int scalar_sign(const FieldElem& x) { return x.sign(); }
inline int scalar_sign(const Rat& x) { return sgn(x); }
inline int scalar_sign(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline double scalar_to_double(const FieldElem& x) { return x.to_double(); }
inline double scalar_to_double(const Rat& x) { return x.get_d(); }
inline double scalar_to_double(double x) { return x; }

// Square root within the same scalar type; nullopt if none exists there.
inline std::optional<FieldElem> scalar_sqrt(const FieldElem& x) {
  return sqrt_in_field(x);
}

inline std::optional<Rat> scalar_sqrt(const Rat& x) {
  if (x < 0) return std::nullopt;
  mpz_class n = x.get_num(), d = x.get_den(), rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Rat(rn) / Rat(rd);
}

inline std::optional<double> scalar_sqrt(double x) {
  if (x < 0) return std::nullopt;
  return std::sqrt(x);
}

}  // namespace cuspforge
