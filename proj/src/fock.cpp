#include "qvertex/fock.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace qvertex {

std::string BasisState::str() const {
  std::ostringstream os;
  os << "[c=" << charge << " " << shape.str() << "]";
  return os.str();
}

QRat FockVector::coeff(const BasisState& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? QRat() : it->second;
}

void FockVector::add(const BasisState& b, const QRat& c) {
  if (c.is_zero()) return;
  if (cutoff_ >= 0 && b.shape.size() > cutoff_) return;
  auto it = terms_.find(b);
  if (it == terms_.end()) {
    terms_.emplace(b, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [b, c] : o.terms_) add(b, c);
  return *this;
}

FockVector FockVector::operator+(const FockVector& o) const {
  FockVector r = *this;
  r += o;
  return r;
}

FockVector FockVector::operator-(const FockVector& o) const {
  FockVector r = *this;
  for (const auto& [b, c] : o.terms_) r.add(b, -c);
  return r;
}

FockVector FockVector::scaled(const QRat& c) const {
  FockVector r(cutoff_);
  if (c.is_zero()) return r;
  for (const auto& [b, cc] : terms_) r.terms_.emplace(b, cc * c);
  return r;
}

FockVector FockVector::vacuum(long charge, long degree_cutoff) {
  return basis(BasisState{charge, Partition()}, degree_cutoff);
}

FockVector FockVector::basis(BasisState b, long degree_cutoff) {
  FockVector v(degree_cutoff);
  v.add(b, QRat(1));
  return v;
}

std::vector<long> wedge_levels(const BasisState& b, size_t count) {
  std::vector<long> lv(count);
  for (size_t i = 1; i <= count; ++i)
    lv[i - 1] = 2 * static_cast<long>(i) - 1 - 2 * b.shape.part(i - 1) - 2 * b.charge;
  return lv;
}

namespace {

// Rebuilds the (charge, shape) encoding from an explicit strictly increasing
// list of doubled levels whose implicit continuation is the dense tail of
// the original window.
BasisState state_from_levels(const std::vector<long>& lv, long charge) {
  std::vector<long> parts;
  for (size_t i = 1; i <= lv.size(); ++i) {
    long twice = 2 * static_cast<long>(i) - 1 - 2 * charge - lv[i - 1];
    if (twice % 2 != 0) throw std::logic_error("state_from_levels: level parity broken");
    long part = twice / 2;
    if (part < 0) throw std::logic_error("state_from_levels: window too small");
    if (part == 0) break;  // dense from here on
    parts.push_back(part);
  }
  return BasisState{charge, Partition(std::move(parts))};
}

size_t window_size(const BasisState& b, long extra) {
  return b.shape.length() + static_cast<size_t>(std::labs(b.charge)) +
         static_cast<size_t>(extra) + 3;
}

}  // namespace

FockVector apply_psi(long r2, const FockVector& v) {
  if (!(r2 & 1)) throw std::invalid_argument("apply_psi: doubled mode must be odd");
  FockVector out(v.degree_cutoff());
  for (const auto& [b, c] : v.terms()) {
    auto lv = wedge_levels(b, window_size(b, (std::labs(r2) + 1) / 2));
    auto it = std::lower_bound(lv.begin(), lv.end(), r2);
    if (it != lv.end() && *it == r2) continue;       // level occupied
    if (it == lv.end()) continue;                    // dense tail: occupied
    size_t pos = static_cast<size_t>(it - lv.begin());
    lv.insert(it, r2);
    QRat signed_c = (pos % 2 == 0) ? c : -c;
    out.add(state_from_levels(lv, b.charge + 1), signed_c);
  }
  return out;
}

FockVector apply_psi_star(long r2, const FockVector& v) {
  if (!(r2 & 1)) throw std::invalid_argument("apply_psi_star: doubled mode must be odd");
  FockVector out(v.degree_cutoff());
  const long target = -r2;
  for (const auto& [b, c] : v.terms()) {
    auto lv = wedge_levels(b, window_size(b, (std::labs(r2) + 1) / 2));
    auto it = std::lower_bound(lv.begin(), lv.end(), target);
    if (it == lv.end() || *it != target) continue;   // level vacant
    size_t pos = static_cast<size_t>(it - lv.begin());
    lv.erase(it);
    QRat signed_c = (pos % 2 == 0) ? c : -c;
    out.add(state_from_levels(lv, b.charge - 1), signed_c);
  }
  return out;
}

FockVector apply_alpha(long n, const FockVector& v) {
  if (n == 0) throw std::invalid_argument("apply_alpha: n must be nonzero");
  FockVector out(v.degree_cutoff());
  for (const auto& [b, c] : v.terms()) {
    auto lv = wedge_levels(b, window_size(b, std::labs(n)));
    for (size_t k = 0; k < lv.size(); ++k) {
      long target = lv[k] + 2 * n;
      auto it = std::lower_bound(lv.begin(), lv.end(), target);
      if (it != lv.end() && *it == target) continue;  // blocked
      if (it == lv.end()) continue;                   // dense tail: blocked
      std::vector<long> moved = lv;
      moved.erase(moved.begin() + static_cast<long>(k));
      auto ins = std::lower_bound(moved.begin(), moved.end(), target);
      size_t pos = static_cast<size_t>(ins - moved.begin());
      moved.insert(ins, target);
      int sign = ((k + pos) % 2 == 0) ? +1 : -1;
      out.add(state_from_levels(moved, b.charge), sign > 0 ? c : -c);
    }
  }
  return out;
}

long charge_eigenvalue(const BasisState& b) {
  auto lv = wedge_levels(b, window_size(b, 0));
  long neg_occ = 0;
  for (long a : lv)
    if (a < 0) ++neg_occ;
  long pos_vac = 0;
  for (long p = 1; p <= lv.back(); p += 2)
    if (!std::binary_search(lv.begin(), lv.end(), p)) ++pos_vac;
  return neg_occ - pos_vac;
}

long k4_eigenvalue(const BasisState& b) {
  auto lv = wedge_levels(b, window_size(b, 0));
  long k4 = 0;
  for (long a : lv)
    if (a < 0) k4 += a * a;
  for (long p = 1; p <= lv.back(); p += 2)
    if (!std::binary_search(lv.begin(), lv.end(), p)) k4 -= p * p;
  return k4;
}

FockVector apply_K(const FockVector& v) {
  FockVector out(v.degree_cutoff());
  for (const auto& [b, c] : v.terms()) {
    Rat ev(k4_eigenvalue(b), 4);
    ev.canonicalize();
    out.add(b, c * QRat(ev));
  }
  return out;
}

FockVector scale_qK(const Rat& c, const FockVector& v) {
  FockVector out(v.degree_cutoff());
  for (const auto& [b, cc] : v.terms()) {
    Rat e = c * Rat(k4_eigenvalue(b), 4);
    e.canonicalize();
    out.add(b, cc * qpow(e));
  }
  return out;
}

namespace {

bool horizontal_strip(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return false;
  for (size_t i = 0; i + 1 < outer.length(); ++i)
    if (inner.part(i) < outer.part(i + 1)) return false;
  return true;
}

}  // namespace

FockVector apply_gamma_minus(const SpecPoint& t, const FockVector& v, long cutoff) {
  if (cutoff < 0)
    throw MissingCutoff("apply_gamma_minus: raising half-vertex needs a cutoff");
  FockVector out(cutoff);
  auto all = enumerate_upto(cutoff);
  for (const auto& [b, c] : v.terms())
    for (const Partition& la : all) {
      if (!la.contains(b.shape)) continue;
      QRat s = skew_schur_spec(la, b.shape, t);
      if (!s.is_zero()) out.add(BasisState{b.charge, la}, c * s);
    }
  return out;
}

FockVector apply_gamma_plus(const SpecPoint& t, const FockVector& v) {
  FockVector out(v.degree_cutoff());
  for (const auto& [b, c] : v.terms())
    for (const Partition& la : enumerate_upto(b.shape.size())) {
      if (!b.shape.contains(la)) continue;
      QRat s = skew_schur_spec(b.shape, la, t);
      if (!s.is_zero()) out.add(BasisState{b.charge, la}, c * s);
    }
  return out;
}

std::map<long, FockVector> gamma_minus_graded(const FockVector& v, long cutoff) {
  if (cutoff < 0) throw MissingCutoff("gamma_minus_graded: needs a cutoff");
  std::map<long, FockVector> out;
  auto all = enumerate_upto(cutoff);
  for (const auto& [b, c] : v.terms())
    for (const Partition& la : all) {
      if (!horizontal_strip(la, b.shape)) continue;
      out[la.size() - b.shape.size()].add(BasisState{b.charge, la}, c);
    }
  return out;
}

std::map<long, FockVector> gamma_plus_graded(const FockVector& v) {
  std::map<long, FockVector> out;
  for (const auto& [b, c] : v.terms())
    for (const Partition& la : enumerate_upto(b.shape.size())) {
      if (!horizontal_strip(b.shape, la)) continue;
      out[b.shape.size() - la.size()].add(BasisState{b.charge, la}, c);
    }
  return out;
}

FockVector apply_gamma_minus_var(const QRat& z, const FockVector& v, long cutoff) {
  FockVector out(cutoff);
  for (const auto& [k, w] : gamma_minus_graded(v, cutoff)) out += w.scaled(z.pow(k));
  return out;
}

FockVector apply_gamma_plus_var(const QRat& z, const FockVector& v) {
  FockVector out(v.degree_cutoff());
  for (const auto& [k, w] : gamma_plus_graded(v)) out += w.scaled(z.pow(k));
  return out;
}

FockVector apply_psi_field(const QRat& z, const FockVector& v, long cutoff) {
  if (cutoff < 0) throw MissingCutoff("apply_psi_field: needs a degree cutoff");
  FockVector out(cutoff);
  for (const auto& [b, c] : v.terms()) {
    FockVector single(cutoff);
    single.add(b, c);
    // Modes below lo produce shapes beyond the cutoff; modes above the
    // window's dense tail act as zero.
    long lo = -(2 * (cutoff + std::labs(b.charge) + 2) + 5);
    long hi = wedge_levels(b, window_size(b, cutoff)).back();
    for (long r2 = lo; r2 <= hi; r2 += 2) {
      FockVector term = apply_psi(r2, single);
      if (term.is_zero()) continue;
      out += term.scaled(z.pow(-(r2 + 1) / 2));
    }
  }
  return out;
}

FockVector apply_psi_star_field(const QRat& z, const FockVector& v, long cutoff) {
  if (cutoff < 0) throw MissingCutoff("apply_psi_star_field: needs a degree cutoff");
  FockVector out(cutoff);
  for (const auto& [b, c] : v.terms()) {
    FockVector single(cutoff);
    single.add(b, c);
    long lo = -(2 * (cutoff + std::labs(b.charge) + 2) + 5);
    long hi = wedge_levels(b, window_size(b, cutoff)).back();
    for (long r2 = lo; r2 <= hi; r2 += 2) {
      FockVector term = apply_psi_star(r2, single);
      if (term.is_zero()) continue;
      out += term.scaled(z.pow(-(r2 + 1) / 2));
    }
  }
  return out;
}

QRat fock_inner(const FockVector& a, const FockVector& b) {
  QRat acc;
  const auto& small = a.terms().size() <= b.terms().size() ? a : b;
  const auto& large = a.terms().size() <= b.terms().size() ? b : a;
  for (const auto& [st, c] : small.terms()) {
    QRat oc = large.coeff(st);
    if (!oc.is_zero()) acc += c * oc;
  }
  return acc;
}

QRat pair_vev(const LinearFermion& a, const LinearFermion& b) {
  // <psi_r psi*_s> = <psi*_r psi_s> = [r > 0 and s = -r]; like flavors pair
  // to zero.
  if (a.star == b.star) return QRat();
  QRat acc;
  for (const auto& [r2a, ca] : a.modes) {
    if (r2a <= 0 || ca.is_zero()) continue;
    for (const auto& [r2b, cb] : b.modes)
      if (r2b == -r2a) acc += ca * cb;
  }
  return acc;
}

QRat wick_vev_bruteforce(const std::vector<LinearFermion>& ws) {
  if (ws.size() % 2 != 0) return QRat();
  if (ws.empty()) return QRat(1);
  // Pair the first factor with each later one; the sign is the parity of
  // the factors jumped over.
  QRat acc;
  for (size_t j = 1; j < ws.size(); ++j) {
    QRat p = pair_vev(ws[0], ws[j]);
    if (p.is_zero()) continue;
    std::vector<LinearFermion> rest;
    rest.reserve(ws.size() - 2);
    for (size_t k = 1; k < ws.size(); ++k)
      if (k != j) rest.push_back(ws[k]);
    QRat sub = wick_vev_bruteforce(rest);
    if (sub.is_zero()) continue;
    QRat term = p * sub;
    acc += (j % 2 == 1) ? term : -term;
  }
  return acc;
}

QRat wick_vev_det(const std::vector<LinearFermion>& ws) {
  if (ws.size() % 2 != 0)
    throw ShapeMismatch("wick_vev_det: product length must be even");
  const size_t n = ws.size() / 2;
  for (size_t i = 0; i < ws.size(); ++i)
    if (ws[i].star != (i % 2 == 1))
      throw ShapeMismatch("wick_vev_det: factors must alternate psi, psi*");
  if (n == 0) return QRat(1);
  std::vector<std::vector<QRat>> m(n, std::vector<QRat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      m[i][j] = j >= i ? pair_vev(ws[2 * i], ws[2 * j + 1])
                       : -pair_vev(ws[2 * j + 1], ws[2 * i]);
  return qrat_det(std::move(m));
}

}  // namespace qvertex
