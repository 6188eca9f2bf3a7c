#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace qvertex {

using Int = mpz_class;
using Rat = mpq_class;

/// Exponent on the refined lattice.  A stored exponent e represents q^{e/48};
/// 48 is the least common multiple of the exponent denominators that appear in
/// the vertex entries (quarters, sixths, sixteenths and forty-eighths), so all
/// exponent arithmetic is integer arithmetic.
using Exp = long;

/// Number of lattice units in q^1.
constexpr Exp kLatticeQ = 48;
/// Number of lattice units in q^{1/2}.  Exponents divisible by this value lie
/// on the half-integer lattice in q, which is where all end results live.
constexpr Exp kLatticeHalf = 24;

struct NonLatticeExponent : std::domain_error {
  explicit NonLatticeExponent(const std::string& what) : std::domain_error(what) {}
};

/// Sparse Laurent polynomial in the lattice variable t = q^{1/48} with exact
/// rational coefficients.  Invariant: no explicitly stored zero coefficients,
/// so the zero polynomial has an empty term map and equality is structural.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rat& constant);
  static LaurentPoly monomial(Exp e, const Rat& coeff = Rat(1));

  bool is_zero() const { return terms_.empty(); }
  /// Number of stored (nonzero) terms.
  size_t size() const { return terms_.size(); }
  /// Smallest exponent with nonzero coefficient; throws on the zero polynomial.
  Exp min_exp() const;
  /// Largest exponent with nonzero coefficient; throws on the zero polynomial.
  Exp max_exp() const;
  /// Coefficient of t^e (zero if absent).
  Rat coeff(Exp e) const;
  const std::map<Exp, Rat>& terms() const { return terms_; }

  /// Adds c * t^e, dropping the term if the sum cancels.
  void add_term(Exp e, const Rat& c);

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return terms_ != o.terms_; }

  /// Multiplies by c * t^e in place.
  void shift_scale(Exp e, const Rat& c);
  /// Divides every coefficient by c (c must be nonzero).
  void scale_down(const Rat& c);

  /// True when every exponent is divisible by the given lattice unit.
  bool on_lattice(Exp unit) const;

  /// Evaluates with q^{1/2} = u0, i.e. t^e = u0^{e/24}.  Every exponent must
  /// be divisible by 24; the caller checks that beforehand via on_lattice.
  Rat eval_half(const Rat& u0) const;

  /// Plain-text rendering such as "t^-24 - t^24", smallest exponent first.
  std::string str() const;

 private:
  std::map<Exp, Rat> terms_;
};

/// Greatest common divisor of two Laurent polynomials, ignoring monomial
/// units: the result is an ordinary polynomial with nonzero constant term,
/// normalized monic.  gcd(0, b) is b normalized the same way.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact division a / b; throws std::domain_error if b does not divide a.
LaurentPoly laurent_divexact(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace qvertex
