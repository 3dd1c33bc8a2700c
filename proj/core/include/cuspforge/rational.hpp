#ifndef CUSPFORGE_RATIONAL_HPP
#define CUSPFORGE_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace cuspforge {

using Rat = mpq_class;

// Parse "p/q" or "p" (arbitrary precision). Throws on malformed input.
inline Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline double to_double(const Rat& q) { return q.get_d(); }

}  // namespace cuspforge

#endif
