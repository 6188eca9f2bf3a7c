#include "qvertex/qrat.hpp"

#include <sstream>

namespace qvertex {

ScalarMode ScalarMode::numeric_half(const Rat& u0) {
  if (u0 == 0 || u0 == 1 || u0 == -1)
    throw std::domain_error("ScalarMode: u0 must avoid 0 and +-1");
  ScalarMode m;
  m.kind = Kind::NumericHalf;
  m.u0 = u0;
  return m;
}

QRat::QRat(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("QRat: zero denominator");
  canonicalize_full();
}

void QRat::canonicalize_unit() {
  Exp s = den_.min_exp();
  if (s != 0) {
    den_.shift_scale(-s, Rat(1));
    if (!num_.is_zero()) num_.shift_scale(-s, Rat(1));
  }
  Rat lead = den_.terms().rbegin()->second;
  if (lead != 1) {
    den_.scale_down(lead);
    if (!num_.is_zero()) num_.scale_down(lead);
  }
}

void QRat::canonicalize_full() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(Rat(1));
    return;
  }
  canonicalize_unit();
  LaurentPoly g = laurent_gcd(num_, den_);
  if (!(g.size() == 1 && g.min_exp() == 0)) {
    num_ = laurent_divexact(num_, g);
    den_ = laurent_divexact(den_, g);
    canonicalize_unit();
  }
}

bool QRat::is_one() const {
  return num_.size() == 1 && den_.size() == 1 && !num_.is_zero() &&
         num_.min_exp() == 0 && num_.coeff(0) == 1 && den_.min_exp() == 0;
}

QRat QRat::operator-() const {
  QRat r = *this;
  r.num_ = -r.num_;
  return r;
}

QRat QRat::operator+(const QRat& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  QRat r;
  LaurentPoly g = laurent_gcd(den_, o.den_);
  bool g_trivial = g.size() == 1 && g.min_exp() == 0;
  LaurentPoly db = g_trivial ? o.den_ : laurent_divexact(o.den_, g);
  LaurentPoly da = g_trivial ? den_ : laurent_divexact(den_, g);
  r.num_ = num_ * db + o.num_ * da;
  if (r.num_.is_zero()) return QRat();
  r.den_ = den_ * db;
  if (!g_trivial) {
    // Any common factor of the sum and the new denominator divides g.
    LaurentPoly g2 = laurent_gcd(r.num_, g);
    if (!(g2.size() == 1 && g2.min_exp() == 0)) {
      r.num_ = laurent_divexact(r.num_, g2);
      r.den_ = laurent_divexact(r.den_, g2);
    }
  }
  r.canonicalize_unit();
  return r;
}

QRat QRat::operator-(const QRat& o) const { return *this + (-o); }

QRat QRat::operator*(const QRat& o) const {
  if (is_zero() || o.is_zero()) return QRat();
  auto reduced = [](const LaurentPoly& n, const LaurentPoly& d) {
    LaurentPoly g = laurent_gcd(n, d);
    bool triv = g.size() == 1 && g.min_exp() == 0;
    return std::pair<LaurentPoly, LaurentPoly>(triv ? n : laurent_divexact(n, g),
                                               triv ? d : laurent_divexact(d, g));
  };
  auto [na, db] = reduced(num_, o.den_);
  auto [nb, da] = reduced(o.num_, den_);
  QRat r;
  r.num_ = na * nb;
  r.den_ = da * db;
  r.canonicalize_unit();
  return r;
}

QRat QRat::inverse() const {
  if (is_zero()) throw DivisionByZero("QRat: inverse of zero");
  QRat r;
  r.num_ = den_;
  r.den_ = num_;
  r.canonicalize_unit();
  return r;
}

QRat QRat::operator/(const QRat& o) const {
  if (o.is_zero()) throw DivisionByZero("QRat: division by zero");
  return *this * o.inverse();
}

QRat QRat::pow(long k) const {
  if (k == 0) return QRat(1);
  QRat base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  QRat acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool QRat::half_lattice() const {
  return num_.on_lattice(kLatticeHalf) && den_.on_lattice(kLatticeHalf);
}

Rat QRat::eval_numeric(const Rat& u0) const {
  if (u0 == 0 || u0 == 1 || u0 == -1)
    throw std::domain_error("QRat: eval_numeric needs u0 off {0,1,-1}");
  if (!half_lattice())
    throw NonHalfLattice("QRat: exponent off the half lattice in eval_numeric");
  Rat dv = den_.eval_half(u0);
  if (dv == 0) throw DenominatorVanishes("QRat: denominator vanishes at u0");
  Rat r = num_.is_zero() ? Rat(0) : Rat(num_.eval_half(u0) / dv);
  r.canonicalize();
  return r;
}

std::string QRat::str() const {
  std::ostringstream os;
  bool den_one = den_.size() == 1 && den_.min_exp() == 0;
  if (den_one) {
    os << num_.str();
  } else {
    os << "(" << num_.str() << ") / (" << den_.str() << ")";
  }
  return os.str();
}

QRat qpow(const Rat& e, const ScalarMode& mode) {
  Rat scaled = e * kLatticeQ;
  scaled.canonicalize();
  if (scaled.get_den() != 1)
    throw NonLatticeExponent("qpow: exponent off the q^{1/48} lattice");
  if (!scaled.get_num().fits_slong_p())
    throw NonLatticeExponent("qpow: exponent out of range");
  Exp e48 = scaled.get_num().get_si();
  if (mode.kind == ScalarMode::Kind::NumericHalf && e48 % kLatticeHalf != 0)
    throw NonHalfLattice("qpow: exponent off the half lattice in numeric mode");
  return qpow48(e48);
}

QRat qpow48(Exp e48) { return QRat(LaurentPoly::monomial(e48), LaurentPoly(Rat(1))); }

QRat bracket(long n) {
  if (n == 0) return QRat();
  LaurentPoly p;
  p.add_term(kLatticeHalf * n, Rat(1));
  p.add_term(-kLatticeHalf * n, Rat(-1));
  return QRat(std::move(p), LaurentPoly(Rat(1)));
}

QRat qfact(long n) {
  if (n < 0) throw std::domain_error("qfact: negative argument");
  QRat acc(1);
  for (long k = 1; k <= n; ++k) acc *= bracket(k);
  return acc;
}

}  // namespace qvertex
