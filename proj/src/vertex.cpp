#include "qvertex/vertex.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qvertex {

long Framing::at(int i) const {
  switch (i) {
    case 1: return a1;
    case 2: return a2;
    case 3: return a3;
    default: throw std::invalid_argument("Framing::at: leg index out of range");
  }
}

std::string Framing::str() const {
  std::ostringstream os;
  os << "(" << a1 << "," << a2 << "," << a3 << ")";
  return os.str();
}

bool VertexKey::operator<(const VertexKey& o) const {
  if (mu1 != o.mu1) return mu1 < o.mu1;
  if (mu2 != o.mu2) return mu2 < o.mu2;
  if (mu3 != o.mu3) return mu3 < o.mu3;
  return framing < o.framing;
}

std::string VertexKey::str() const {
  std::ostringstream os;
  os << mu1.str() << "," << mu2.str() << "," << mu3.str() << ",a=" << framing.str();
  return os.str();
}

FIndex FIndex::build(const Partition& mu1, const Partition& mu2,
                     const Partition& mu3) {
  FIndex ix;
  ix.fr = {frobenius(mu1), frobenius(mu2), frobenius(mu3)};
  for (int i = 0; i < 3; ++i)
    for (size_t p = 0; p < ix.fr[i].rank(); ++p) {
      ix.leg.push_back(i + 1);
      ix.bar.push_back(p);
    }
  ix.total = ix.leg.size();
  return ix;
}

namespace {

// Classifies an ordered leg pair: 0 diagonal, +1 successor (12, 23, 31),
// -1 predecessor (21, 32, 13).  Indices are cyclic: j = 4 reads as 1 and
// j = 0 as 3.
int pair_class(int i, int& j) {
  if (j == 4) j = 1;
  if (j == 0) j = 3;
  if (i < 1 || i > 3 || j < 1 || j > 3)
    throw std::invalid_argument("leg index out of range");
  if (i == j) return 0;
  if (j == i % 3 + 1) return +1;
  return -1;
}

}  // namespace

QRat a_coeff(int i, int j, long m, long n) {
  if (m < 0 || n < 0) throw std::invalid_argument("a_coeff: negative index");
  const int cls = pair_class(i, j);
  if (cls == 0) {
    QRat val = qpow48(12 * (m * (m + 1) - n * (n + 1))) /
               (bracket(m + n + 1) * qfact(m) * qfact(n));
    return (n % 2 == 0) ? val : -val;
  }
  const Exp pre = 12 * (m * (m + 1) - n * (n + 1)) + (cls > 0 ? 8 : -8);
  QRat sum;
  for (long l = 0; l <= std::min(m, n); ++l) {
    Exp e = 24 * (l + 1) * (m + n - l);
    sum += qpow48(cls > 0 ? e : -e) / (qfact(m - l) * qfact(n - l));
  }
  QRat val = qpow48(pre) * sum;
  const bool neg = (cls > 0) ? (n % 2 == 1) : (n % 2 == 0);
  return neg ? -val : val;
}

QRat a_coeff_framed(int i, int j, long m, long n, const Framing& fr) {
  int jj = j;
  pair_class(i, jj);  // normalizes cyclic indices, validates
  const Exp e = 24 * (fr.at(i) * m * (m + 1) - fr.at(jj) * n * (n + 1));
  return qpow48(e) * a_coeff(i, j, m, n);
}

QRat f_entry(int i, int j, long m, long n, const Framing& fr) {
  if (m < 0 || n < 0) throw std::invalid_argument("f_entry: negative index");
  int jj = j;
  const int cls = pair_class(i, jj);
  const long ai = fr.at(i), aj = fr.at(jj);
  if (cls == 0) {
    const Exp e = 12 * (2 * ai + 1) * (m * (m + 1) - n * (n + 1));
    return qpow48(e) / (bracket(m + n + 1) * qfact(m) * qfact(n));
  }
  // Off-diagonal: q^{(2ai+1)(m+1/2)^2/4 - (2aj+1)(n+1/2)^2/4} times the
  // hook-type sum; the successor cases carry +, the predecessor cases -.
  const Exp pre = 3 * (2 * ai + 1) * (2 * m + 1) * (2 * m + 1) -
                  3 * (2 * aj + 1) * (2 * n + 1) * (2 * n + 1);
  const Exp tail = (i == 3 || jj == 3) && (i == 1 || jj == 1) ? 6 : 9;  // 1/8 vs 3/16
  QRat sum;
  for (long k = 0; k <= std::min(m, n); ++k) {
    Exp e = 24 * (k + 1) * (m + n - k) + tail;
    sum += qpow48(cls > 0 ? e : -e) / (qfact(n - k) * qfact(m - k));
  }
  QRat val = qpow48(pre) * sum;
  return cls > 0 ? val : -val;
}

QRat entry_ratio(int i, int j, const Framing& fr) {
  int jj = j;
  const int cls = pair_class(i, jj);
  if (cls == 0) return QRat(1);
  Exp e = 6 * (fr.at(i) - fr.at(jj));
  if ((i == 3 || jj == 3) && (i == 1 || jj == 1))
    e += (cls > 0) ? -2 : +2;  // the 31 / 13 pair
  else
    e += (cls > 0) ? +1 : -1;
  return qpow48(e);
}

QRat cycle_product_check(const std::vector<int>& cycle, const Framing& fr) {
  if (cycle.empty()) throw std::invalid_argument("cycle_product_check: empty cycle");
  QRat prod(1);
  for (size_t s = 0; s < cycle.size(); ++s)
    prod *= entry_ratio(cycle[s], cycle[(s + 1) % cycle.size()], fr);
  return prod;
}

std::vector<std::vector<QRat>> build_f_matrix(const VertexKey& key) {
  FIndex ix = FIndex::build(key.mu1, key.mu2, key.mu3);
  std::vector<std::vector<QRat>> mat(ix.total, std::vector<QRat>(ix.total));
  for (size_t k = 0; k < ix.total; ++k)
    for (size_t l = 0; l < ix.total; ++l)
      mat[k][l] = f_entry(ix.leg[k], ix.leg[l], ix.fr[ix.leg[k] - 1].ms[ix.bar[k]],
                          ix.fr[ix.leg[l] - 1].ns[ix.bar[l]], key.framing);
  return mat;
}

std::vector<std::vector<QRat>> build_b_matrix(const VertexKey& key) {
  FIndex ix = FIndex::build(key.mu1, key.mu2, key.mu3);
  std::vector<std::vector<QRat>> mat(ix.total, std::vector<QRat>(ix.total));
  for (size_t k = 0; k < ix.total; ++k)
    for (size_t l = 0; l < ix.total; ++l) {
      long n = ix.fr[ix.leg[l] - 1].ns[ix.bar[l]];
      QRat a = a_coeff_framed(ix.leg[k], ix.leg[l],
                              ix.fr[ix.leg[k] - 1].ms[ix.bar[k]], n, key.framing);
      mat[k][l] = (n % 2 == 0) ? a : -a;
    }
  return mat;
}

QRat det(std::vector<std::vector<QRat>> m) { return qrat_det(std::move(m)); }

namespace {

// The framing enters w_skew only through the monomial prefactor
// q^{a1 k1/2 + a2 k2/2 + a3 k3/2}, so the rest is shared by all framings of
// a leg triple and worth memoizing: the sweeps visit each triple many times.
QRat w_skew_unframed(const Partition& mu1, const Partition& mu2,
                     const Partition& mu3) {
  thread_local std::map<std::array<Partition, 3>, QRat> cache;
  const std::array<Partition, 3> ckey{mu1, mu2, mu3};
  if (auto it = cache.find(ckey); it != cache.end()) return it->second;

  const Partition mu2t = mu2.conjugate();
  const Partition mu3t = mu3.conjugate();
  const SpecPoint left = SpecPoint::shifted(mu2t);
  const SpecPoint right = SpecPoint::shifted(mu2);

  QRat sum;
  const long bound = std::min(mu1.size(), mu3t.size());
  for (const Partition& eta : enumerate_upto(bound)) {
    if (!mu1.contains(eta) || !mu3t.contains(eta)) continue;
    QRat s1 = skew_schur_spec(mu1, eta, left);
    if (s1.is_zero()) continue;
    QRat s2 = skew_schur_spec(mu3t, eta, right);
    if (s2.is_zero()) continue;
    sum += s1 * s2;
  }

  QRat val = schur_rho_hook(mu2t, RhoSign::Minus) * sum * qpow48(24 * kappa(mu3));
  if (mu2.size() % 2 == 1) val = -val;
  cache.emplace(ckey, val);
  return val;
}

}  // namespace

QRat w_skew(const VertexKey& key) {
  const Exp e = 24 * (key.framing.a1 * kappa(key.mu1) +
                      key.framing.a2 * kappa(key.mu2) +
                      key.framing.a3 * kappa(key.mu3));
  return qpow48(e) * w_skew_unframed(key.mu1, key.mu2, key.mu3);
}

QRat w_det_f(const VertexKey& key) { return det(build_f_matrix(key)); }

QRat w_bogoliubov(const VertexKey& key) { return det(build_b_matrix(key)); }

}  // namespace qvertex
