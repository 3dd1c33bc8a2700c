#pragma once
// Freely reduced words in a finitely generated free group, a whitespace
// token parser ("x y^-1"), finitely presented groups with peripheral
// structure, and Fox derivatives.

#include <string>
#include <utility>
#include <vector>

namespace cuspforge {

struct Syllable {
  int gen;   // generator index
  long exp;  // nonzero exponent
  bool operator==(const Syllable& o) const = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syl);  // freely reduces

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }
  // total letter count, counting multiplicity
  size_t length() const;
  bool operator==(const Word& o) const = default;

  Word inverse() const;
  Word operator*(const Word& o) const;
  Word power(long n) const;
  // conjugation-minimal representative: strips matching prefix/suffix
  Word cyclically_reduced(bool* changed = nullptr) const;

  // expansion into single letters (gen, +-1)
  std::vector<std::pair<int, int>> letters() const;

 private:
  std::vector<Syllable> syl_;
};

Word parse_word(const std::string& text,
                const std::vector<std::string>& generator_names);
std::string print_word(const Word& w,
                       const std::vector<std::string>& generator_names);

struct PeripheralPair {
  Word meridian;
  Word longitude;
};

struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;  // cyclically reduced on load
  std::vector<PeripheralPair> peripherals;

  size_t num_generators() const { return generator_names.size(); }
  size_t num_cusps() const { return peripherals.size(); }
};

// presentation of Z^2 = <m, l | [m, l]> used for all peripheral computations
Presentation torus_presentation();

// element of the integral group ring Z[F]: sum of (coefficient, word)
struct GroupRingTerm {
  long coeff;
  Word word;
};
using GroupRingElem = std::vector<GroupRingTerm>;

GroupRingElem groupring_add(const GroupRingElem& a, const GroupRingElem& b);
// left-multiply every term by the word u
GroupRingElem groupring_lmul(const Word& u, const GroupRingElem& e);

// Fox free-derivative d(w)/d(gen): satisfies d(g)/d(g) = 1, d(h)/d(g) = 0,
// d(uv)/d(g) = d(u)/d(g) + u d(v)/d(g), d(g^-1)/d(g) = -g^-1.
GroupRingElem fox_derivative(const Word& w, int gen);

}  // namespace cuspforge
