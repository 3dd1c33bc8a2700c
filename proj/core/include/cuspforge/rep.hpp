#pragma once
// A representation of a finitely presented group: one matrix per generator,
// word evaluation, and validation against the presentation (relators map to
// +-identity, peripheral pairs commute).

#include <stdexcept>
#include <string>
#include <vector>

#include "cuspforge/linalg.hpp"
#include "cuspforge/word.hpp"

namespace cuspforge {

template <class T>
struct Representation {
  Presentation pres;
  std::vector<Matrix<T>> images;  // indexed like pres.generator_names

  size_t dim() const {
    if (images.empty()) throw std::logic_error("representation has no generators");
    return images[0].rows();
  }

  Matrix<T> evaluate(const Word& w) const {
    Matrix<T> r = Matrix<T>::identity_like(dim(), images[0].model());
    for (const auto& syl : w.syllables()) {
      if (syl.gen < 0 || size_t(syl.gen) >= images.size())
        throw std::out_of_range("word uses a generator outside the representation");
      Matrix<T> base =
          syl.exp > 0 ? images[size_t(syl.gen)] : inverse(images[size_t(syl.gen)]);
      long n = syl.exp > 0 ? syl.exp : -syl.exp;
      for (long k = 0; k < n; ++k) r = r * base;
    }
    return r;
  }

  // Empty vector means valid; otherwise human-readable complaints.
  // A positive tolerance allows approximate comparisons (needed for
  // floating-point scalar types, where products are never exact).
  std::vector<std::string> validate(bool allow_sign = true,
                                    double tol = 0.0) const {
    auto near = [tol](const Matrix<T>& a, const Matrix<T>& b) {
      if (a == b) return true;
      if constexpr (std::is_floating_point_v<T>) {
        if (tol <= 0.0) return false;
        for (size_t i = 0; i < a.rows(); ++i)
          for (size_t j = 0; j < a.cols(); ++j)
            if (std::abs(a(i, j) - b(i, j)) > tol) return false;
        return true;
      } else {
        return false;
      }
    };
    std::vector<std::string> errs;
    if (images.size() != pres.num_generators()) {
      errs.push_back("generator/matrix count mismatch");
      return errs;
    }
    const size_t n = dim();
    for (const auto& m : images)
      if (m.rows() != n || m.cols() != n) {
        errs.push_back("generator matrices have inconsistent sizes");
        return errs;
      }
    auto I = Matrix<T>::identity_like(n, images[0].model());
    for (size_t i = 0; i < pres.relators.size(); ++i) {
      auto r = evaluate(pres.relators[i]);
      if (!(near(r, I) || (allow_sign && near(r, -I))))
        errs.push_back("relator " + std::to_string(i) +
                       " does not map to the identity");
    }
    for (size_t i = 0; i < pres.peripherals.size(); ++i) {
      auto m = evaluate(pres.peripherals[i].meridian);
      auto l = evaluate(pres.peripherals[i].longitude);
      if (!near(m * l, l * m))
        errs.push_back("peripheral pair " + std::to_string(i) +
                       " does not commute");
    }
    return errs;
  }
};

}  // namespace cuspforge
