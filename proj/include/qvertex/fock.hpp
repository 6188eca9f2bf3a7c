#pragma once

#include "qvertex/partition.hpp"
#include "qvertex/qrat.hpp"
#include "qvertex/symfunc.hpp"

#include <map>
#include <vector>

namespace qvertex {

struct MissingCutoff : std::domain_error {
  explicit MissingCutoff(const std::string& what) : std::domain_error(what) {}
};
struct ShapeMismatch : std::domain_error {
  explicit ShapeMismatch(const std::string& what) : std::domain_error(what) {}
};

/// Basis vector of the charged fermionic Fock space, indexed by a charge and
/// a partition.  The corresponding semi-infinite wedge occupies the levels
/// a_i = i - 1/2 - shape_i - charge (i = 1, 2, ...), each level a
/// half-integer, strictly increasing, eventually consecutive.
struct BasisState {
  long charge = 0;
  Partition shape;

  bool operator==(const BasisState& o) const {
    return charge == o.charge && shape == o.shape;
  }
  bool operator<(const BasisState& o) const {
    if (charge != o.charge) return charge < o.charge;
    return shape < o.shape;
  }
  std::string str() const;
};

/// Finitely supported linear combination of basis states with QRat
/// coefficients.  An optional degree cutoff drops components whose shape
/// exceeds the cutoff as they are produced, which is what keeps the
/// half-infinite operators (Gamma_-, fermion fields) finite.
class FockVector {
 public:
  FockVector() = default;
  explicit FockVector(long degree_cutoff) : cutoff_(degree_cutoff) {}

  long degree_cutoff() const { return cutoff_; }
  void set_degree_cutoff(long c) { cutoff_ = c; }

  bool is_zero() const { return terms_.empty(); }
  const std::map<BasisState, QRat>& terms() const { return terms_; }
  QRat coeff(const BasisState& b) const;
  void add(const BasisState& b, const QRat& c);
  FockVector& operator+=(const FockVector& o);
  FockVector operator+(const FockVector& o) const;
  FockVector operator-(const FockVector& o) const;
  FockVector scaled(const QRat& c) const;
  bool operator==(const FockVector& o) const { return terms_ == o.terms_; }
  bool operator!=(const FockVector& o) const { return terms_ != o.terms_; }

  static FockVector vacuum(long charge = 0, long degree_cutoff = -1);
  static FockVector basis(BasisState b, long degree_cutoff = -1);

 private:
  long cutoff_ = -1;
  std::map<BasisState, QRat> terms_;
};

/// Doubled occupied levels 2*a_i of the first `count` wedge factors.
std::vector<long> wedge_levels(const BasisState& b, size_t count);

/// Charge measured from the level picture: (number of occupied negative
/// levels) - (number of vacant positive levels).  Always equals the stored
/// charge; exists so tests can say so.
long charge_eigenvalue(const BasisState& b);

/// Four times the eigenvalue of the level-squared (cut-and-join) operator
/// K = sum_s s^2 :psi_s psi*_{-s}: on the basis state.  On charge zero this
/// is 4 * kappa(shape); on other charges it is a genuine quarter-integer
/// times 4.
long k4_eigenvalue(const BasisState& b);

/// psi_r with r = r2/2 (r2 odd): exterior multiplication by the level r.
FockVector apply_psi(long r2, const FockVector& v);
/// psi*_r with r = r2/2 (r2 odd): contraction removing the level -r.
FockVector apply_psi_star(long r2, const FockVector& v);
/// Boson mode alpha_n (n != 0): sum over single-level moves by n.
FockVector apply_alpha(long n, const FockVector& v);
/// K applied as multiplication by its eigenvalue.
FockVector apply_K(const FockVector& v);
/// Multiplies each component by q^{c * K-eigenvalue} (c in units of q).
FockVector scale_qK(const Rat& c, const FockVector& v);

/// Half-vertex operators: Gamma_-(t) |mu> = sum_{la >= mu} s_{la/mu}(t) |la>
/// needs an explicit degree cutoff (MissingCutoff otherwise); Gamma_+(t) is
/// lower-triangular and needs none.
FockVector apply_gamma_minus(const SpecPoint& t, const FockVector& v, long cutoff);
FockVector apply_gamma_plus(const SpecPoint& t, const FockVector& v);

/// Single-variable half-vertex operators: the alphabet is the one-letter
/// {z} with z given as an exact scalar, so the skew coefficients are
/// z^{|la|-|mu|} over horizontal strips.
FockVector apply_gamma_minus_var(const QRat& z, const FockVector& v, long cutoff);
FockVector apply_gamma_plus_var(const QRat& z, const FockVector& v);

/// Formal single-variable expansions graded by the letter's degree:
/// result[k] collects the states reached by a horizontal strip of size k.
std::map<long, FockVector> gamma_minus_graded(const FockVector& v, long cutoff);
std::map<long, FockVector> gamma_plus_graded(const FockVector& v);

/// Fermion fields psi(z) = sum_r psi_r z^{-r-1/2} and its conjugate, with
/// the mode sum bounded by the vector's/result's degree cutoff.
FockVector apply_psi_field(const QRat& z, const FockVector& v, long cutoff);
FockVector apply_psi_star_field(const QRat& z, const FockVector& v, long cutoff);

/// Orthonormal-basis pairing of two vectors (bilinear, exact).
QRat fock_inner(const FockVector& a, const FockVector& b);

/// Finite formal combination sum_r c_r psi_r (star = false) or
/// sum_r c_r psi*_r (star = true); modes stored doubled (odd integers).
struct LinearFermion {
  bool star = false;
  std::vector<std::pair<long, QRat>> modes;  // (2r, coefficient)
};

/// Vacuum two-point function of a pair of linear fermions.
QRat pair_vev(const LinearFermion& a, const LinearFermion& b);
/// Vacuum expectation of a product by the signed-pairing expansion
/// (odd-length products vanish identically).
QRat wick_vev_bruteforce(const std::vector<LinearFermion>& ws);
/// Same value as a determinant; requires the strictly alternating shape
/// phi_1 phi*_1 phi_2 phi*_2 ... (ShapeMismatch otherwise).
QRat wick_vev_det(const std::vector<LinearFermion>& ws);

}  // namespace qvertex
