#pragma once

#include "qvertex/partition.hpp"
#include "qvertex/qrat.hpp"
#include "qvertex/symfunc.hpp"

#include <array>

namespace qvertex {

/// Integer framing attached to the three legs.
struct Framing {
  long a1 = 0, a2 = 0, a3 = 0;

  long at(int i) const;  // 1-based leg index
  bool operator==(const Framing& o) const {
    return a1 == o.a1 && a2 == o.a2 && a3 == o.a3;
  }
  bool operator<(const Framing& o) const {
    if (a1 != o.a1) return a1 < o.a1;
    if (a2 != o.a2) return a2 < o.a2;
    return a3 < o.a3;
  }
  std::string str() const;
};

/// One framed vertex evaluation: three legs plus a framing.
struct VertexKey {
  Partition mu1, mu2, mu3;
  Framing framing;

  bool operator==(const VertexKey& o) const {
    return mu1 == o.mu1 && mu2 == o.mu2 && mu3 == o.mu3 && framing == o.framing;
  }
  bool operator<(const VertexKey& o) const;
  std::string str() const;
};

/// Row/column bookkeeping for the block determinants: rows and columns are
/// indexed by the concatenated diagonal cells of the three legs, so index k
/// belongs to leg(k) and points at that leg's bar(k)-th Frobenius coordinate
/// (both 0-based here).
struct FIndex {
  std::array<Frobenius, 3> fr;
  size_t total = 0;
  std::vector<int> leg;     // 1, 2 or 3
  std::vector<size_t> bar;  // position within the leg

  static FIndex build(const Partition& mu1, const Partition& mu2,
                      const Partition& mu3);
};

/// Unframed pair coefficient A^{ij}_{mn}:
///   A^{ii}_{mn} = (-1)^n q^{m(m+1)/4 - n(n+1)/4} / ([m+n+1] [m]! [n]!)
///   A^{i,i+1}_{mn} = (-1)^n   q^{... + 1/6} sum_l q^{+(l+1)(m+n-l)/2}/([m-l]![n-l]!)
///   A^{i,i-1}_{mn} = (-1)^{n+1} q^{... - 1/6} sum_l q^{-(l+1)(m+n-l)/2}/([m-l]![n-l]!)
/// with the leg indices read cyclically (j = 4 means 1, j = 0 means 3).
QRat a_coeff(int i, int j, long m, long n);

/// A^{ij}_{mn}(q; a) = q^{(a_i m(m+1) - a_j n(n+1))/2} A^{ij}_{mn}(q).
QRat a_coeff_framed(int i, int j, long m, long n, const Framing& fr);

/// Closed-form entry F^{ij}_{mn}(q; a) of the fermionic vertex state, the
/// nine-case proposition: diagonal entries
///   F^{ii}_{mn} = q^{(2a_i+1)(m(m+1)-n(n+1))/4} / ([m+n+1] [m]! [n]!),
/// and off-diagonal entries with prefactor
/// q^{(2a_i+1)(m+1/2)^2/4 - (2a_j+1)(n+1/2)^2/4} times a hook-type sum whose
/// k-th term carries q^{±((k+1)(m+n-k)/2 + c_ij)}, c_ij = 3/16 for 12, 23,
/// 21, 32 and 1/8 for 31, 13; the 21, 32, 13 cases carry an overall minus.
QRat f_entry(int i, int j, long m, long n, const Framing& fr);

/// The monomial f_ij with F^{ij}_{mn} = (-1)^n f_ij A^{ij}_{mn}(q; a):
/// 1 on the diagonal, q^{(a_i-a_j)/8 ± 1/48} for neighbours and
/// q^{(a_i-a_j)/8 ± 1/24} for the 31/13 pair.
QRat entry_ratio(int i, int j, const Framing& fr);

/// Product of entry_ratio over consecutive pairs of the cycle (wrapping);
/// equals 1 for every cycle.
QRat cycle_product_check(const std::vector<int>& cycle, const Framing& fr);

/// (r1+r2+r3)-square matrices of the two determinantal pipelines:
/// F~_{kl} = F^{ij}_{m^i_k n^j_l} and B_{kl} = (-1)^{n^j_l} A^{ij}_{m^i_k n^j_l}(q;a)
/// with i = leg(k), j = leg(l) and Frobenius coordinates per FIndex.
std::vector<std::vector<QRat>> build_f_matrix(const VertexKey& key);
std::vector<std::vector<QRat>> build_b_matrix(const VertexKey& key);

/// Exact determinant of a square QRat matrix (empty matrix: 1).
QRat det(std::vector<std::vector<QRat>> m);

/// Framed topological vertex by the skew-Schur formula
///   W = (-1)^{|mu2|} q^{a1 k1/2 + a2 k2/2 + (a3+1) k3/2} s_{mu2^t}(q^{-rho})
///       sum_eta s_{mu1/eta}(q^{mu2^t + rho}) s_{mu3^t/eta}(q^{mu2 + rho})
/// (k_i = kappa(mu_i); eta runs over partitions inside both mu1 and mu3^t).
/// The framing-independent part is memoized per leg triple.
QRat w_skew(const VertexKey& key);

/// Same value as det(build_f_matrix(key)).
QRat w_det_f(const VertexKey& key);

/// Same value as det(build_b_matrix(key)).
QRat w_bogoliubov(const VertexKey& key);

}  // namespace qvertex
