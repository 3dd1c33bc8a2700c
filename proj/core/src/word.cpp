#include "cuspforge/word.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cuspforge {

namespace {
void push_reduced(std::vector<Syllable>& out, const Syllable& s) {
  if (s.exp == 0) return;
  if (!out.empty() && out.back().gen == s.gen) {
    out.back().exp += s.exp;
    if (out.back().exp == 0) out.pop_back();
  } else {
    out.push_back(s);
  }
}
}  // namespace

Word::Word(std::vector<Syllable> syl) {
  for (const auto& s : syl) push_reduced(syl_, s);
}

size_t Word::length() const {
  size_t n = 0;
  for (const auto& s : syl_) n += static_cast<size_t>(std::abs(s.exp));
  return n;
}

Word Word::inverse() const {
  std::vector<Syllable> rev;
  rev.reserve(syl_.size());
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it)
    rev.push_back({it->gen, -it->exp});
  Word w;
  w.syl_ = std::move(rev);  // already reduced
  return w;
}

Word Word::operator*(const Word& o) const {
  std::vector<Syllable> all = syl_;
  all.insert(all.end(), o.syl_.begin(), o.syl_.end());
  return Word(std::move(all));
}

Word Word::power(long n) const {
  Word r;
  Word base = n < 0 ? inverse() : *this;
  for (long i = 0; i < std::abs(n); ++i) r = r * base;
  return r;
}

Word Word::cyclically_reduced(bool* changed) const {
  Word w = *this;
  bool did = false;
  while (w.syl_.size() >= 2 && w.syl_.front().gen == w.syl_.back().gen) {
    Syllable first = w.syl_.front(), last = w.syl_.back();
    long move = std::min(std::abs(first.exp), std::abs(last.exp));
    if ((first.exp > 0) == (last.exp > 0)) break;  // same sign: reduced
    std::vector<Syllable> inner(w.syl_.begin() + 1, w.syl_.end() - 1);
    first.exp += (first.exp > 0 ? -move : move);
    last.exp += (last.exp > 0 ? -move : move);
    std::vector<Syllable> next;
    push_reduced(next, first);
    for (const auto& s : inner) push_reduced(next, s);
    push_reduced(next, last);
    w = Word(std::move(next));
    did = true;
  }
  if (changed) *changed = did;
  return w;
}

std::vector<std::pair<int, int>> Word::letters() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& s : syl_) {
    int sign = s.exp > 0 ? 1 : -1;
    for (long i = 0; i < std::abs(s.exp); ++i) out.emplace_back(s.gen, sign);
  }
  return out;
}

Word parse_word(const std::string& text,
                const std::vector<std::string>& generator_names) {
  std::istringstream in(text);
  std::string tok;
  std::vector<Syllable> syl;
  while (in >> tok) {
    std::string name = tok;
    long exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string es = tok.substr(caret + 1);
      size_t used = 0;
      try {
        exp = std::stol(es, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed exponent in token: " + tok);
      }
      if (used != es.size())
        throw std::invalid_argument("malformed exponent in token: " + tok);
      if (exp == 0) throw std::invalid_argument("zero exponent in token: " + tok);
    }
    auto it = std::find(generator_names.begin(), generator_names.end(), name);
    if (it == generator_names.end())
      throw std::invalid_argument("unknown generator: " + name);
    syl.push_back({static_cast<int>(it - generator_names.begin()), exp});
  }
  return Word(std::move(syl));
}

std::string print_word(const Word& w,
                       const std::vector<std::string>& generator_names) {
  std::ostringstream out;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) out << ' ';
    first = false;
    out << generator_names.at(static_cast<size_t>(s.gen));
    if (s.exp != 1) out << '^' << s.exp;
  }
  return out.str();
}

Presentation torus_presentation() {
  Presentation p;
  p.generator_names = {"m", "l"};
  Word m({{0, 1}}), l({{1, 1}});
  p.relators = {m * l * m.inverse() * l.inverse()};
  p.peripherals = {{m, l}};
  return p;
}

namespace {
// canonical key for collecting group-ring terms
std::string word_key(const Word& w) {
  std::ostringstream out;
  for (const auto& s : w.syllables()) out << s.gen << ':' << s.exp << ';';
  return out.str();
}

void accumulate(std::map<std::string, GroupRingTerm>& acc,
                const GroupRingTerm& t) {
  if (t.coeff == 0) return;
  auto key = word_key(t.word);
  auto it = acc.find(key);
  if (it == acc.end()) {
    acc.emplace(key, t);
  } else {
    it->second.coeff += t.coeff;
    if (it->second.coeff == 0) acc.erase(it);
  }
}

GroupRingElem collect(const std::map<std::string, GroupRingTerm>& acc) {
  GroupRingElem out;
  out.reserve(acc.size());
  for (const auto& [k, t] : acc) out.push_back(t);
  return out;
}
}  // namespace

GroupRingElem groupring_add(const GroupRingElem& a, const GroupRingElem& b) {
  std::map<std::string, GroupRingTerm> acc;
  for (const auto& t : a) accumulate(acc, t);
  for (const auto& t : b) accumulate(acc, t);
  return collect(acc);
}

GroupRingElem groupring_lmul(const Word& u, const GroupRingElem& e) {
  std::map<std::string, GroupRingTerm> acc;
  for (const auto& t : e) accumulate(acc, {t.coeff, u * t.word});
  return collect(acc);
}

GroupRingElem fox_derivative(const Word& w, int gen) {
  // product rule over the letter expansion: d(uv) = d(u) + u d(v)
  std::map<std::string, GroupRingTerm> acc;
  Word prefix;
  for (const auto& [g, sign] : w.letters()) {
    Word letter({{g, sign}});
    if (g == gen) {
      if (sign > 0) {
        accumulate(acc, {1, prefix});
      } else {
        accumulate(acc, {-1, prefix * letter});
      }
    }
    prefix = prefix * letter;
  }
  return collect(acc);
}

}  // namespace cuspforge
