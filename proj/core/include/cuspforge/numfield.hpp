#ifndef CUSPFORGE_NUMFIELD_HPP
#define CUSPFORGE_NUMFIELD_HPP

#include <memory>
#include <optional>
#include <vector>

#include "cuspforge/rational.hpp"

namespace cuspforge {

// Real algebraic number field Q(alpha), alpha given by a monic minimal
// polynomial (irreducibility is an input contract, checked only cheaply)
// plus a rational interval isolating one real root.
class NumberField {
 public:
  // min_poly: c0 + c1 x + ... + x^n, coefficients low-to-high, monic.
  static std::shared_ptr<const NumberField> make(std::vector<Rat> min_poly,
                                                 Rat lo, Rat hi);

  int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
  const std::vector<Rat>& min_poly() const { return min_poly_; }

  // Isolating interval refined by bisection until hi-lo <= width.
  std::pair<Rat, Rat> root_enclosure(const Rat& width) const;
  double root_double(unsigned prec_bits = 64) const;

 private:
  NumberField() = default;
  std::vector<Rat> min_poly_;
  mutable Rat lo_, hi_;  // refined in place (monotone shrinking, idempotent)
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element of Q(alpha), represented canonically by a coefficient vector of
// length deg in the power basis.  A null field pointer means a plain
// rational (degree-1 behaviour); mixed arithmetic promotes to the field.
class FieldElem {
 public:
  FieldElem() : c_{Rat(0)} {}
  FieldElem(const Rat& q) : c_{q} {}  // NOLINT: implicit by design
  FieldElem(int n) : c_{Rat(n)} {}    // NOLINT
  FieldElem(FieldPtr f, std::vector<Rat> coeffs);

  static FieldElem generator(const FieldPtr& f);  // alpha itself

  const FieldPtr& field() const { return f_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_rational() const { return !f_ || rational_value().has_value(); }
  std::optional<Rat> rational_value() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  FieldElem inverse() const;
  bool is_zero() const;
  // Exact sign: gcd zero-test against the minimal polynomial first, then
  // interval refinement (guaranteed to terminate).
  int sign() const;
  double to_double(unsigned prec_bits = 64) const;
  // Rational enclosure of the real value with hi-lo <= width.
  std::pair<Rat, Rat> enclosure(const Rat& width) const;

  std::string str() const;

 private:
  friend class NumberField;
  void reduce();  // mod min_poly, then trim
  FieldPtr f_;          // null => rational constant
  std::vector<Rat> c_;  // size degree() if f_, else size 1
};

// Exact square root in the field if one exists (heuristic search over the
// complex embeddings followed by an exact verification).
std::optional<FieldElem> sqrt_in_field(const FieldElem& beta);

// --- polynomial helpers over Q (low-to-high coefficient vectors) ---------
namespace polyq {
std::vector<Rat> trim(std::vector<Rat> p);
std::vector<Rat> add(const std::vector<Rat>& a, const std::vector<Rat>& b);
std::vector<Rat> mul(const std::vector<Rat>& a, const std::vector<Rat>& b);
std::vector<Rat> rem(std::vector<Rat> a, const std::vector<Rat>& b);
std::vector<Rat> gcd(std::vector<Rat> a, std::vector<Rat> b);  // monic
std::vector<Rat> derivative(const std::vector<Rat>& p);
Rat eval(const std::vector<Rat>& p, const Rat& x);
// Range of p over [lo,hi] by interval Horner.
std::pair<Rat, Rat> eval_interval(const std::vector<Rat>& p, const Rat& lo,
                                  const Rat& hi);
}  // namespace polyq

// scalar helpers shared with the generic linear algebra
inline FieldElem zero_like(const FieldElem&) { return FieldElem(); }
inline FieldElem one_like(const FieldElem&) { return FieldElem(1); }
inline bool scalar_is_zero(const FieldElem& x) { return x.is_zero(); }
inline double zero_like(double) { return 0.0; }
inline double one_like(double) { return 1.0; }
inline bool scalar_is_zero(double x) { return x == 0.0; }
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline bool scalar_is_zero(const Rat& x) { return x == 0; }

}  // namespace cuspforge

#endif
