#pragma once

#include "qvertex/laurent.hpp"

namespace qvertex {

struct DivisionByZero : std::domain_error {
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};
struct NonHalfLattice : std::domain_error {
  explicit NonHalfLattice(const std::string& what) : std::domain_error(what) {}
};
struct DenominatorVanishes : std::domain_error {
  explicit DenominatorVanishes(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation regime for scalars.  Symbolic keeps everything as rational
/// functions of t = q^{1/48}.  NumericHalf pins q^{1/2} to a rational u0 and
/// only admits exponents on the half-integer lattice in q.
struct ScalarMode {
  enum class Kind { Symbolic, NumericHalf };
  Kind kind = Kind::Symbolic;
  Rat u0{0};

  static ScalarMode symbolic() { return ScalarMode{}; }
  static ScalarMode numeric_half(const Rat& u0);
};

/// Rational function in t = q^{1/48} held in a canonical form:
///   * den is an ordinary polynomial (minimum exponent 0) with monic leading
///     coefficient and a nonzero constant term,
///   * num and den share no polynomial factor (monomials count as units),
///   * zero is 0/1.
/// Because the form is canonical, structural equality coincides with equality
/// in the fraction field, which is what makes the cross-pipeline comparisons
/// of the vertex meaningful as plain ==.
class QRat {
 public:
  QRat() : den_(Rat(1)) {}
  QRat(int v) : num_(Rat(v)), den_(Rat(1)) {}            // NOLINT: implicit
  QRat(const Rat& v) : num_(v), den_(Rat(1)) {}          // NOLINT: implicit
  QRat(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  QRat operator-() const;
  QRat operator+(const QRat& o) const;
  QRat operator-(const QRat& o) const;
  QRat operator*(const QRat& o) const;
  QRat operator/(const QRat& o) const;
  QRat& operator+=(const QRat& o) { return *this = *this + o; }
  QRat& operator-=(const QRat& o) { return *this = *this - o; }
  QRat& operator*=(const QRat& o) { return *this = *this * o; }
  QRat& operator/=(const QRat& o) { return *this = *this / o; }
  bool operator==(const QRat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const QRat& o) const { return !(*this == o); }

  QRat inverse() const;
  /// Integer power (negative allowed for nonzero values).
  QRat pow(long k) const;

  /// True when every exponent of num and den sits on the half-integer
  /// lattice in q (i.e. is divisible by 24 lattice units).
  bool half_lattice() const;

  /// Substitutes q^{1/2} = u0.  Throws NonHalfLattice when an exponent is off
  /// the half lattice and DenominatorVanishes when den(u0) = 0.
  Rat eval_numeric(const Rat& u0) const;

  std::string str() const;

 private:
  LaurentPoly num_, den_;
  void canonicalize_full();
  void canonicalize_unit();  // shift/monic only; gcd already trivial
};

/// q^e for a rational exponent e given in units of q.  Throws
/// NonLatticeExponent unless 48 e is an integer; in NumericHalf mode also
/// rejects exponents off the half lattice.
QRat qpow(const Rat& e, const ScalarMode& mode = ScalarMode::symbolic());
/// q^{e48/48} directly on the integer lattice.
QRat qpow48(Exp e48);

/// Quantum integer [n] = q^{n/2} - q^{-n/2}; [0] = 0.
QRat bracket(long n);
/// Quantum factorial [n]! = [1][2]...[n]; [0]! = 1.  Requires n >= 0.
QRat qfact(long n);

}  // namespace qvertex
