#pragma once

#include "qvertex/miwa.hpp"
#include "qvertex/partition.hpp"
#include "qvertex/qrat.hpp"

namespace qvertex {

/// Principal specialization point for symmetric functions.
///   Rho      : alphabet (q^{-1/2}, q^{-3/2}, q^{-5/2}, ...)
///   NegRho   : alphabet (q^{1/2},  q^{3/2},  q^{5/2},  ...)
///   Shifted  : alphabet (q^{mu_1 - 1/2}, q^{mu_2 - 3/2}, ...), i.e. Rho with
///              the first length(mu) letters bumped by the parts of mu.
/// Shifted with an empty partition normalizes to Rho, so equality of points
/// is equality of alphabets.
class SpecPoint {
 public:
  enum class Kind { Rho, NegRho, Shifted };

  static SpecPoint rho() { return SpecPoint(Kind::Rho, Partition()); }
  static SpecPoint neg_rho() { return SpecPoint(Kind::NegRho, Partition()); }
  static SpecPoint shifted(Partition mu) {
    return mu.empty() ? rho() : SpecPoint(Kind::Shifted, std::move(mu));
  }

  Kind kind() const { return kind_; }
  const Partition& mu() const { return mu_; }

  bool operator==(const SpecPoint& o) const { return kind_ == o.kind_ && mu_ == o.mu_; }
  bool operator<(const SpecPoint& o) const {
    if (kind_ != o.kind_) return kind_ < o.kind_;
    return mu_ < o.mu_;
  }

 private:
  SpecPoint(Kind k, Partition mu) : kind_(k), mu_(std::move(mu)) {}
  Kind kind_;
  Partition mu_;
};

/// Power sum p_n at the specialization point (n >= 1).
QRat power_sum_spec(long n, const SpecPoint& s);

/// Complete homogeneous h_k at the point (0 for k < 0, 1 for k = 0).
/// Rho and NegRho use hook-type closed forms; Shifted points come from the
/// finite product correction to the generating series of Rho.
QRat h_spec(long k, const SpecPoint& s);

/// Same value computed through the Newton recurrence from power sums; an
/// independent route used to cross-check h_spec.
QRat h_spec_newton(long k, const SpecPoint& s);

/// Elementary symmetric e_k at the point, via the signed Newton recurrence.
QRat e_spec(long k, const SpecPoint& s);

/// Skew Schur function s_{la/eta} at the point, as the Jacobi-Trudi
/// determinant det(h_{la_i - eta_j - i + j}) of size length(la).
/// Returns 0 when eta is not contained in la.
QRat skew_schur_spec(const Partition& la, const Partition& eta, const SpecPoint& s);

enum class RhoSign { Plus, Minus };  // q^{rho} vs q^{-rho}

/// Schur function at q^{rho} (Plus) or q^{-rho} (Minus) in hook-product form:
/// s_mu(q^{rho}) = q^{kappa/4} / prod [hooks], and at q^{-rho} the same with
/// kappa negated and an overall sign (-1)^{|mu|}.
QRat schur_rho_hook(const Partition& mu, RhoSign sign = RhoSign::Plus);

/// Schur function s_nu(q^{mu+rho}) computed through the lowering identity
/// (-1)^{|nu|} q^{kappa_nu/2} sum_eta s_{mu/eta}(q^{-rho}) s_{nu/eta}(q^{-rho})
///                            / s_mu(q^{-rho}),
/// an independent oracle for skew_schur_spec at Shifted points.
QRat schur_lower_spec(const Partition& nu, const Partition& mu);

/// Closed finite sum for the one-row case s_{(m)}(q^{(n)+rho}).
QRat hook_sum_row(long m, long n);
/// Closed finite sum for the one-column case s_{(1^n)}(q^{(1^m)+rho}).
QRat hook_sum_col(long m, long n);

/// Schur polynomial s_mu in the Miwa variables t_1..t_K.
/// Requires K >= |mu| (CutoffTooSmall otherwise).
MiwaPoly schur_miwa(const Partition& mu, int K);

/// Complete homogeneous h_k in the Miwa variables t_1..t_K, i.e. the z^k
/// coefficient of exp(sum_j t_j z^j).
MiwaPoly h_miwa(long k, int K);

/// Determinant of a square QRat matrix by fraction-aware Gaussian
/// elimination; the empty matrix has determinant 1.
QRat qrat_det(std::vector<std::vector<QRat>> m);

}  // namespace qvertex
