#include "cuspforge/numfield.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cuspforge {

namespace polyq {

std::vector<Rat> trim(std::vector<Rat> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::vector<Rat> add(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return trim(std::move(r));
}

std::vector<Rat> mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(std::move(r));
}

std::vector<Rat> rem(std::vector<Rat> a, const std::vector<Rat>& b) {
  a = trim(std::move(a));
  auto bb = trim(b);
  if (bb.empty()) throw std::invalid_argument("poly rem by zero");
  while (a.size() >= bb.size()) {
    Rat q = a.back() / bb.back();
    size_t off = a.size() - bb.size();
    for (size_t i = 0; i < bb.size(); ++i) a[off + i] -= q * bb[i];
    a = trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

std::vector<Rat> gcd(std::vector<Rat> a, std::vector<Rat> b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    auto r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    Rat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

std::vector<Rat> derivative(const std::vector<Rat>& p) {
  std::vector<Rat> r;
  for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rat((long)i));
  return trim(std::move(r));
}

Rat eval(const std::vector<Rat>& p, const Rat& x) {
  Rat v(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

static std::pair<Rat, Rat> imul(const std::pair<Rat, Rat>& a,
                                const std::pair<Rat, Rat>& b) {
  Rat p1 = a.first * b.first, p2 = a.first * b.second;
  Rat p3 = a.second * b.first, p4 = a.second * b.second;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

std::pair<Rat, Rat> eval_interval(const std::vector<Rat>& p, const Rat& lo,
                                  const Rat& hi) {
  std::pair<Rat, Rat> acc{Rat(0), Rat(0)};
  std::pair<Rat, Rat> x{lo, hi};
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = imul(acc, x);
    acc.first += *it;
    acc.second += *it;
  }
  return acc;
}

}  // namespace polyq

// --------------------------------------------------------------- field ---

std::shared_ptr<const NumberField> NumberField::make(std::vector<Rat> mp,
                                                     Rat lo, Rat hi) {
  mp = polyq::trim(std::move(mp));
  if (mp.size() < 2) throw std::invalid_argument("min_poly must have degree >= 1");
  if (mp.back() != 1) throw std::invalid_argument("min_poly must be monic");
  if (lo > hi) throw std::invalid_argument("bad root interval");
  // square-freeness (cheap necessary condition for irreducibility)
  auto g = polyq::gcd(mp, polyq::derivative(mp));
  if (g.size() > 1) throw std::invalid_argument("min_poly is not square-free");
  if (lo == hi) {
    if (polyq::eval(mp, lo) != 0)
      throw std::invalid_argument("point interval is not a root");
    if (mp.size() > 2)
      throw std::invalid_argument("rational root of min_poly of degree > 1");
  } else {
    Rat flo = polyq::eval(mp, lo), fhi = polyq::eval(mp, hi);
    if (flo == 0 || fhi == 0 || (flo > 0) == (fhi > 0))
      throw std::invalid_argument("interval endpoints must straddle the root");
    // cheap rational-root check on small integer constant terms
    if (mp.size() > 2 && mp[0].get_den() == 1) {
      mpz_class c0 = abs(mp[0].get_num());
      if (c0 != 0 && c0 < 100000) {
        for (mpz_class d = 1; d * d <= c0; ++d) {
          if (c0 % d != 0) continue;
          for (const mpz_class& cand : {d, mpz_class(c0 / d)}) {
            for (int s : {1, -1}) {
              Rat x(s * cand);
              if (polyq::eval(mp, x) == 0)
                throw std::invalid_argument("min_poly has a rational root");
            }
          }
        }
      }
    }
  }
  auto f = std::shared_ptr<NumberField>(new NumberField());
  f->min_poly_ = std::move(mp);
  f->lo_ = std::move(lo);
  f->hi_ = std::move(hi);
  return f;
}

std::pair<Rat, Rat> NumberField::root_enclosure(const Rat& width) const {
  if (lo_ == hi_) return {lo_, hi_};
  Rat flo = polyq::eval(min_poly_, lo_);
  while (hi_ - lo_ > width) {
    Rat mid = (lo_ + hi_) / 2;
    Rat fmid = polyq::eval(min_poly_, mid);
    if (fmid == 0) {  // exact hit: degenerate to a point (contract breach)
      lo_ = hi_ = mid;
      return {lo_, hi_};
    }
    if ((fmid > 0) == (flo > 0)) {
      lo_ = mid;
      flo = fmid;
    } else {
      hi_ = mid;
    }
  }
  return {lo_, hi_};
}

double NumberField::root_double(unsigned prec_bits) const {
  Rat w = Rat(1);
  for (unsigned i = 0; i < prec_bits; ++i) w /= 2;
  auto [a, b] = root_enclosure(w);
  return to_double((a + b) / 2);
}

// ------------------------------------------------------------- element ---

FieldElem::FieldElem(FieldPtr f, std::vector<Rat> coeffs)
    : f_(std::move(f)), c_(std::move(coeffs)) {
  if (!f_) throw std::invalid_argument("null field");
  reduce();
}

FieldElem FieldElem::generator(const FieldPtr& f) {
  if (f->degree() == 1) return FieldElem(-f->min_poly()[0]);
  std::vector<Rat> c(f->degree(), Rat(0));
  c[1] = 1;
  return FieldElem(f, std::move(c));
}

void FieldElem::reduce() {
  if (!f_) {
    if (c_.size() != 1) throw std::logic_error("rational elem size");
    return;
  }
  if ((int)c_.size() >= (int)f_->min_poly().size())
    c_ = polyq::rem(std::move(c_), f_->min_poly());
  c_.resize(std::max<size_t>(1, f_->degree()), Rat(0));
  if (f_->degree() >= 1) c_.resize(f_->degree(), Rat(0));
}

std::optional<Rat> FieldElem::rational_value() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return std::nullopt;
  return c_[0];
}

static void promote(FieldElem& a, const FieldElem& b, FieldPtr& f,
                    std::vector<Rat>& ac, std::vector<Rat>& bc) {
  const FieldPtr& fa = a.field();
  const FieldPtr& fb = b.field();
  if (fa && fb && fa != fb && fa->min_poly() != fb->min_poly())
    throw std::invalid_argument("field elements from different fields");
  f = fa ? fa : fb;
  ac = a.coeffs();
  bc = b.coeffs();
  if (f) {
    ac.resize(f->degree(), Rat(0));
    bc.resize(f->degree(), Rat(0));
  }
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  FieldPtr f;
  std::vector<Rat> a, b;
  promote(*this, o, f, a, b);
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  f_ = f;
  c_ = std::move(a);
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  FieldPtr f;
  std::vector<Rat> a, b;
  promote(*this, o, f, a, b);
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  f_ = f;
  c_ = std::move(a);
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  FieldPtr f;
  std::vector<Rat> a, b;
  promote(*this, o, f, a, b);
  auto prod = polyq::mul(polyq::trim(std::move(a)), polyq::trim(std::move(b)));
  f_ = f;
  c_ = std::move(prod);
  if (c_.empty()) c_.assign(1, Rat(0));
  reduce();
  return *this;
}

FieldElem FieldElem::inverse() const {
  if (!f_) {
    if (c_[0] == 0) throw std::domain_error("division by zero");
    return FieldElem(Rat(1) / c_[0]);
  }
  // extended Euclid: s*elem + t*min_poly = gcd
  std::vector<Rat> r0 = f_->min_poly(), r1 = polyq::trim(c_);
  if (r1.empty()) throw std::domain_error("division by zero");
  std::vector<Rat> s0 = {}, s1 = {Rat(1)};  // coefficients of elem
  while (!r1.empty()) {
    // quotient of r0 by r1
    std::vector<Rat> q;
    auto a = r0;
    while (a.size() >= r1.size()) {
      Rat lead = a.back() / r1.back();
      size_t off = a.size() - r1.size();
      if (q.size() < off + 1) q.resize(off + 1, Rat(0));
      q[off] = lead;
      for (size_t i = 0; i < r1.size(); ++i) a[off + i] -= lead * r1[i];
      a = polyq::trim(std::move(a));
      if (a.empty()) break;
    }
    std::vector<Rat> s2 = polyq::add(s0, [&] {
      auto t = polyq::mul(q, s1);
      for (auto& x : t) x = -x;
      return t;
    }());
    r0 = std::move(r1);
    r1 = std::move(a);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1)
    throw std::domain_error(
        "element not invertible (min_poly is reducible, input contract "
        "violated)");
  for (auto& x : s0) x /= r0[0];
  return FieldElem(f_, std::move(s0));
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  return *this *= o.inverse();
}

bool FieldElem::operator==(const FieldElem& o) const {
  FieldElem d = *this;
  d -= o;
  return d.is_zero();
}

bool FieldElem::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

int FieldElem::sign() const {
  if (is_zero()) return 0;
  if (!f_) return c_[0] > 0 ? 1 : -1;
  auto p = polyq::trim(c_);
  // exact zero test: elem(alpha) == 0 iff gcd(min_poly, elem) vanishes at
  // alpha, i.e. the gcd has its (simple) root inside the isolating interval
  auto g = polyq::gcd(f_->min_poly(), p);
  if (g.size() > 1) {
    auto [lo, hi] = f_->root_enclosure(Rat(1));  // current interval
    Rat glo = polyq::eval(g, lo), ghi = polyq::eval(g, hi);
    if (glo == 0 || ghi == 0 || (glo > 0) != (ghi > 0)) return 0;
  }
  Rat width = Rat(1);
  for (;;) {
    auto [lo, hi] = f_->root_enclosure(width);
    auto [vlo, vhi] = polyq::eval_interval(p, lo, hi);
    if (vlo > 0) return 1;
    if (vhi < 0) return -1;
    width /= 1024;
  }
}

std::pair<Rat, Rat> FieldElem::enclosure(const Rat& width) const {
  if (!f_) return {c_[0], c_[0]};
  auto p = polyq::trim(c_);
  if (p.empty()) return {Rat(0), Rat(0)};
  Rat w = width;
  for (;;) {
    auto [lo, hi] = f_->root_enclosure(w);
    auto [vlo, vhi] = polyq::eval_interval(p, lo, hi);
    if (vhi - vlo <= width) return {vlo, vhi};
    w /= 1024;
  }
}

double FieldElem::to_double(unsigned prec_bits) const {
  Rat w(1);
  for (unsigned i = 0; i < prec_bits && i < 400; ++i) w /= 2;
  auto [a, b] = enclosure(w);
  return cuspforge::to_double((a + b) / 2);
}

std::string FieldElem::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c_.size(); ++i)
    os << (i ? ", " : "") << c_[i].get_str();
  os << "]";
  return os.str();
}

}  // namespace cuspforge
