#pragma once

#include "qvertex/miwa.hpp"
#include "qvertex/vertex.hpp"

namespace qvertex {

/// Truncated generating series of vertex values in Schur polynomials,
/// specialized to an exact rational q^{1/2} = u0:
///   tau = sum_{triples} W(mu1,mu2,mu3; framing)(u0) prod_j s_{mu^j}(t^j)
/// over triples of total size <= cutoff (the one-component case keeps
/// mu2 = mu3 = empty).  Variables are laid out block by block: variable
/// (j-1)*cutoff + (k-1) is t^j_k and carries weight k.
struct TauSeries {
  int components = 1;  // 1 or 3
  long cutoff = 0;     // truncation: total weighted degree <= cutoff
  Framing framing;
  Rat u0;
  MiwaPoly poly{0};

  size_t var(int comp, long k) const;  // flat index of t^comp_k
};

TauSeries build_tau(int components, const Framing& framing, long cutoff,
                    const Rat& u0);

/// Coefficients of z^0, z^-1, ..., z^-zorder of the series after the Miwa
/// shift t^comp_k -> t^comp_k + sign * z^-k / k (other components and the
/// coefficient ring untouched).  The expansion is exact: it terminates at
/// order cutoff anyway.
std::vector<MiwaPoly> shift_miwa(const TauSeries& tau, int comp, int sign,
                                 long zorder);

/// One checked coefficient of a residual series..  For the bilinear checks
/// the monomial ranges over the doubled variable set (all t blocks, then all
/// s blocks); for the KP-equation check over the single set.
struct BilinearEntry {
  MiwaPoly::Key monomial;
  Rat value;
  bool cutoff_stable = false;
};

struct BilinearReport {
  long degree = 0;
  long cutoff = 0;
  std::vector<BilinearEntry> entries;

  size_t checked() const { return entries.size(); }
  size_t stable() const;
  size_t nonzero_stable() const;
  /// The acceptance predicate: every cutoff-stable coefficient is zero.
  bool pass() const { return nonzero_stable() == 0; }
};

/// Coefficient of z^-1 of e^{xi(t - s, z)} tau(t - [z^-1]) tau(s + [z^-1]),
/// per monomial of weighted degree <= degree in (t, s) jointly.  A
/// coefficient is cutoff_stable when rebuilding tau at cutoff+1 reproduces
/// it bit-exactly.
BilinearReport hirota_residue_1kp(const TauSeries& tau, long degree, long zorder);

/// Same residue summed over the three components j, with the shift and the
/// exponential factor acting on the j-th block:
///   sum_j Res_z e^{sum_k (t^j_k - s^j_k) z^k} tau(t^j - [z^-1]) tau(s^j + [z^-1]).
BilinearReport hirota_residue_3kp(const TauSeries& tau, long degree, long zorder);

/// Residual of (3/4) u_{t2 t2} - d/dt1 (u_{t3} - (3/2) u u_{t1}
/// - (1/4) u_{t1 t1 t1}) with u = 2 d^2/dt1^2 log tau; one-component only.
BilinearReport kp_equation_check(const TauSeries& tau, long degree);

/// Inverts the Schur expansion: exact coefficients of prod_j s_{mu^j}(t^j)
/// for all component tuples of total size <= cutoff, recovered from the
/// monomial coefficients by an exact linear solve.  Round-trips build_tau.
std::map<std::vector<Partition>, Rat> schur_coefficients(const TauSeries& tau);

/// Human-readable monomial such as "t1_2^3 s2_1" (doubled = true when the
/// key covers the t and s blocks of a bilinear report).
std::string monomial_str(const MiwaPoly::Key& key, int components, long cutoff,
                         bool doubled);

}  // namespace qvertex
