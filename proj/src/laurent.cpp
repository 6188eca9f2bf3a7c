#include "qvertex/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

namespace qvertex {

LaurentPoly::LaurentPoly(const Rat& constant) {
  if (constant != 0) terms_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(Exp e, const Rat& coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[e] = coeff;
  return p;
}

Exp LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::domain_error("LaurentPoly: min_exp of zero");
  return terms_.begin()->first;
}

Exp LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::domain_error("LaurentPoly: max_exp of zero");
  return terms_.rbegin()->first;
}

Rat LaurentPoly::coeff(Exp e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPoly::add_term(Exp e, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_[e] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  if (terms_.empty() || o.terms_.empty()) return r;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, Rat(ca * cb));
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

void LaurentPoly::shift_scale(Exp e, const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  std::map<Exp, Rat> shifted;
  for (const auto& [ee, cc] : terms_) shifted[ee + e] = Rat(cc * c);
  terms_ = std::move(shifted);
}

void LaurentPoly::scale_down(const Rat& c) {
  if (c == 0) throw std::domain_error("LaurentPoly: scale_down by zero");
  for (auto& [e, cc] : terms_) cc /= c;
}

bool LaurentPoly::on_lattice(Exp unit) const {
  for (const auto& [e, c] : terms_) {
    Exp m = e % unit;
    if (m != 0) return false;
  }
  return true;
}

static Rat rat_pow(const Rat& base, long k) {
  if (k == 0) return Rat(1);
  Rat b = base;
  if (k < 0) {
    if (b == 0) throw std::domain_error("LaurentPoly: negative power of zero");
    b = Rat(1) / b;
    k = -k;
  }
  Rat acc(1);
  while (k > 0) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  acc.canonicalize();
  return acc;
}

Rat LaurentPoly::eval_half(const Rat& u0) const {
  Rat sum(0);
  for (const auto& [e, c] : terms_) sum += c * rat_pow(u0, e / kLatticeHalf);
  sum.canonicalize();
  return sum;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "t^" << e;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// gcd machinery.  Monomials t^e are units of the Laurent ring, so gcds are
// computed on the underlying ordinary polynomials (exponents shifted to start
// at zero) and, to keep degrees small, after substituting y = t^g where g is
// the gcd of all occurring exponents.  Over the integers we run a primitive
// polynomial remainder sequence, which keeps coefficient growth in check.
// ---------------------------------------------------------------------------

namespace {

// Dense integer polynomial, index = exponent.  Invariant: back() != 0 unless
// empty (zero polynomial).
using ZPoly = std::vector<Int>;

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Divides by the content and makes the leading coefficient positive.
void zprimitive(ZPoly& p) {
  ztrim(p);
  if (p.empty()) return;
  Int g(0);
  for (const auto& c : p)
    if (c != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
  if (sgn(p.back()) < 0) g = -g;
  if (g != 1)
    for (auto& c : p)
      if (c != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// One fraction-free remainder stage: returns the primitive part of the
// pseudo-remainder of a by b (deg a >= deg b >= 0, both primitive).
ZPoly zprem(ZPoly a, const ZPoly& b) {
  const size_t db = b.size() - 1;
  const Int& lb = b.back();
  long guard = 0;
  while (a.size() >= b.size() && !a.empty()) {
    size_t da = a.size() - 1;
    Int la = a.back();
    // a <- lb*a - la*x^{da-db}*b ; kills the leading term of a.
    for (size_t i = 0; i < a.size(); ++i) a[i] *= lb;
    for (size_t i = 0; i <= db; ++i) a[i + da - db] -= la * b[i];
    ztrim(a);
    // Periodic content removal keeps the integers from snowballing.
    if (++guard % 8 == 0) zprimitive(a);
  }
  zprimitive(a);
  return a;
}

ZPoly zgcd(ZPoly a, ZPoly b) {
  zprimitive(a);
  zprimitive(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = zprem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  auto normalize_unit = [](const LaurentPoly& p) {
    LaurentPoly q = p;
    if (!q.is_zero()) {
      q.shift_scale(-q.min_exp(), Rat(1));
      q.scale_down(q.terms().rbegin()->second);
    }
    return q;
  };
  if (a.is_zero()) return normalize_unit(b);
  if (b.is_zero()) return normalize_unit(a);

  // Common exponent stride of both polynomials (after shifting to min 0).
  Exp g = 0;
  auto fold_stride = [&g](const LaurentPoly& p) {
    Exp base = p.min_exp();
    for (const auto& [e, c] : p.terms()) g = std::gcd(g, e - base);
  };
  fold_stride(a);
  fold_stride(b);
  if (g == 0) return LaurentPoly(Rat(1));  // both are monomials

  auto to_dense = [g](const LaurentPoly& p) {
    Exp base = p.min_exp();
    // Clear rational denominators: scale by their lcm.
    Int lcm(1);
    for (const auto& [e, c] : p.terms())
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly d(static_cast<size_t>((p.max_exp() - base) / g) + 1, Int(0));
    for (const auto& [e, c] : p.terms()) {
      Rat scaled = c * lcm;
      scaled.canonicalize();
      d[static_cast<size_t>((e - base) / g)] = scaled.get_num();
    }
    zprimitive(d);
    return d;
  };

  ZPoly gg = zgcd(to_dense(a), to_dense(b));
  LaurentPoly result;
  for (size_t i = 0; i < gg.size(); ++i)
    if (gg[i] != 0) result.add_term(static_cast<Exp>(i) * g, Rat(gg[i]));
  // Monic normalization.
  result.scale_down(result.terms().rbegin()->second);
  return result;
}

LaurentPoly laurent_divexact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
  if (a.is_zero()) return LaurentPoly();
  // Work on sparse maps directly: repeatedly kill the top term of the
  // remainder.  Quotients we care about stay as sparse as the inputs.
  std::map<Exp, Rat> rem = a.terms();
  const Exp eb = b.max_exp();
  const Rat cb = b.terms().rbegin()->second;
  // In an exact division the quotient cannot reach below this exponent.
  const Exp eq_min = a.min_exp() - b.min_exp();
  LaurentPoly quot;
  while (!rem.empty()) {
    const Exp etop = rem.rbegin()->first;
    Exp eq = etop - eb;
    if (eq < eq_min) throw std::domain_error("LaurentPoly: inexact division");
    Rat cq = rem.rbegin()->second / cb;
    cq.canonicalize();
    quot.add_term(eq, cq);
    for (const auto& [e, c] : b.terms()) {
      Exp ee = e + eq;
      auto it = rem.find(ee);
      Rat delta = c * cq;
      if (it == rem.end()) {
        rem[ee] = -delta;
      } else {
        it->second -= delta;
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  return quot;
}

}  // namespace qvertex
