#include "qvertex/symfunc.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace qvertex {

namespace {

// Per-thread memo tables.  Worker threads each grow their own copy; the
// tables are small (desk-scale partitions) and this keeps the API lock-free.
thread_local std::map<SpecPoint, std::vector<QRat>> t_h_cache;
thread_local std::map<std::tuple<std::vector<long>, std::vector<long>, SpecPoint>, QRat>
    t_skew_cache;
thread_local std::map<std::pair<std::vector<long>, int>, MiwaPoly> t_miwa_cache;

QRat h_rho_closed(long k, bool negated) {
  // h_k at q^{rho}: q^{k(k-1)/4} / [k]!; at q^{-rho} the mirror image with a
  // sign (-1)^k.
  QRat v = qpow48((negated ? -12 : 12) * k * (k - 1)) / qfact(k);
  if (negated && (k & 1)) v = -v;
  return v;
}

// Extends the cached prefix h_0..h_k for the point s.
const std::vector<QRat>& h_prefix(const SpecPoint& s, long k) {
  auto& vec = t_h_cache[s];
  if (static_cast<long>(vec.size()) > k) return vec;
  if (s.kind() != SpecPoint::Kind::Shifted) {
    for (long j = static_cast<long>(vec.size()); j <= k; ++j)
      vec.push_back(h_rho_closed(j, s.kind() == SpecPoint::Kind::NegRho));
    return vec;
  }
  // Shifted point: generating series of Rho times a finite product
  //   prod_i (1 - q^{-i+1/2} z) / (1 - q^{mu_i - i + 1/2} z),
  // one factor per row of mu.  Recompute the whole prefix; the series ops
  // are in-place recurrences on the coefficient vector.
  std::vector<QRat> h(static_cast<size_t>(k) + 1);
  for (long j = 0; j <= k; ++j) h[static_cast<size_t>(j)] = h_rho_closed(j, false);
  const Partition& mu = s.mu();
  for (size_t i = 1; i <= mu.length(); ++i) {
    QRat a = qpow48(24 * (1 - 2 * static_cast<Exp>(i)));
    for (long j = k; j >= 1; --j)
      h[static_cast<size_t>(j)] -= a * h[static_cast<size_t>(j - 1)];
  }
  for (size_t i = 1; i <= mu.length(); ++i) {
    QRat b = qpow48(48 * mu.part(i - 1) + 24 * (1 - 2 * static_cast<Exp>(i)));
    for (long j = 1; j <= k; ++j)
      h[static_cast<size_t>(j)] += b * h[static_cast<size_t>(j - 1)];
  }
  vec = std::move(h);
  return vec;
}

}  // namespace

QRat power_sum_spec(long n, const SpecPoint& s) {
  if (n < 1) throw std::domain_error("power_sum_spec: n must be >= 1");
  QRat base = bracket(n).inverse();
  switch (s.kind()) {
    case SpecPoint::Kind::Rho:
      return base;
    case SpecPoint::Kind::NegRho:
      return -base;
    case SpecPoint::Kind::Shifted: {
      // Only the first length(mu) letters differ from Rho, so the geometric
      // tail is the Rho value plus a finite correction.
      QRat acc = base;
      const Partition& mu = s.mu();
      for (size_t i = 1; i <= mu.length(); ++i) {
        acc += qpow48(24 * n * (2 * (mu.part(i - 1) - static_cast<Exp>(i)) + 1));
        acc -= qpow48(24 * n * (1 - 2 * static_cast<Exp>(i)));
      }
      return acc;
    }
  }
  throw std::logic_error("power_sum_spec: unreachable");
}

QRat h_spec(long k, const SpecPoint& s) {
  if (k < 0) return QRat();
  if (k == 0) return QRat(1);
  return h_prefix(s, k)[static_cast<size_t>(k)];
}

QRat h_spec_newton(long k, const SpecPoint& s) {
  if (k < 0) return QRat();
  std::vector<QRat> h(static_cast<size_t>(k) + 1);
  h[0] = QRat(1);
  for (long m = 1; m <= k; ++m) {
    QRat acc;
    for (long j = 1; j <= m; ++j)
      acc += power_sum_spec(j, s) * h[static_cast<size_t>(m - j)];
    h[static_cast<size_t>(m)] = acc * QRat(Rat(1, m));
  }
  return h[static_cast<size_t>(k)];
}

QRat e_spec(long k, const SpecPoint& s) {
  if (k < 0) return QRat();
  std::vector<QRat> e(static_cast<size_t>(k) + 1);
  e[0] = QRat(1);
  for (long m = 1; m <= k; ++m) {
    QRat acc;
    for (long j = 1; j <= m; ++j) {
      QRat term = power_sum_spec(j, s) * e[static_cast<size_t>(m - j)];
      if (j % 2 == 0) term = -term;
      acc += term;
    }
    e[static_cast<size_t>(m)] = acc * QRat(Rat(1, m));
  }
  return e[static_cast<size_t>(k)];
}

QRat skew_schur_spec(const Partition& la, const Partition& eta, const SpecPoint& s) {
  if (!la.contains(eta)) return QRat();
  const size_t n = la.length();
  if (n == 0) return QRat(1);
  auto key = std::make_tuple(la.parts(), eta.parts(), s);
  auto hit = t_skew_cache.find(key);
  if (hit != t_skew_cache.end()) return hit->second;

  std::vector<std::vector<QRat>> m(n, std::vector<QRat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      m[i][j] = h_spec(la.part(i) - eta.part(j) - static_cast<long>(i) +
                           static_cast<long>(j),
                       s);
  QRat v = qrat_det(std::move(m));
  t_skew_cache.emplace(std::move(key), v);
  return v;
}

QRat schur_rho_hook(const Partition& mu, RhoSign sign) {
  long kap = kappa(mu);
  QRat denom(1);
  for (long h : hooks(mu)) denom *= bracket(h);
  QRat v = qpow48(sign == RhoSign::Plus ? 12 * kap : -12 * kap) / denom;
  if (sign == RhoSign::Minus && (mu.size() & 1)) v = -v;
  return v;
}

QRat schur_lower_spec(const Partition& nu, const Partition& mu) {
  SpecPoint neg = SpecPoint::neg_rho();
  QRat sum;
  for (const Partition& eta : enumerate_upto(std::min(nu.size(), mu.size()))) {
    if (!mu.contains(eta) || !nu.contains(eta)) continue;
    sum += skew_schur_spec(mu, eta, neg) * skew_schur_spec(nu, eta, neg);
  }
  QRat v = qpow48(24 * kappa(nu)) * sum / skew_schur_spec(mu, Partition(), neg);
  if (nu.size() & 1) v = -v;
  return v;
}

QRat hook_sum_row(long m, long n) {
  if (m < 0 || n < 0) throw std::domain_error("hook_sum_row: negative arguments");
  QRat acc;
  for (long k = 0; k <= std::min(m, n); ++k) {
    Exp e = -24 * k * k - 24 * k + 24 * k * m + 24 * k * n + 12 * m * m - 12 * m;
    acc += qpow48(e) * qfact(n) / (qfact(n - k) * qfact(m - k));
  }
  return acc;
}

QRat hook_sum_col(long m, long n) {
  if (m < 0 || n < 0) throw std::domain_error("hook_sum_col: negative arguments");
  QRat acc;
  for (long k = 0; k <= std::min(m, n); ++k) {
    Exp e = 24 * k * k + 24 * k - 24 * k * m - 24 * k * n - 12 * n * n + 12 * n;
    acc += qpow48(e) * qfact(m) / (qfact(n - k) * qfact(m - k));
  }
  return acc;
}

MiwaPoly h_miwa(long k, int K) {
  if (k < 0) return MiwaPoly(K);
  // z^k coefficient of exp(sum_j t_j z^j): build the truncated series one
  // variable at a time.
  std::vector<MiwaPoly> series(static_cast<size_t>(k) + 1, MiwaPoly(K));
  MiwaPoly one(K);
  one.add_term(MiwaPoly::Key(static_cast<size_t>(K), 0), Rat(1));
  series[0] = one;
  for (int j = 1; j <= K && j <= static_cast<int>(k); ++j) {
    std::vector<MiwaPoly> next = series;
    for (long deg = j; deg <= k; deg += j) {
      // multiply by t_j^m / m! where m = deg / j
      long mfac = deg / j;
      Rat inv_fact(1);
      for (long f = 2; f <= mfac; ++f) inv_fact /= f;
      MiwaPoly::Key powkey(static_cast<size_t>(K), 0);
      powkey[static_cast<size_t>(j - 1)] = static_cast<int>(mfac);
      MiwaPoly tpow(K);
      tpow.add_term(powkey, inv_fact);
      for (long base = 0; base + deg <= k; ++base) {
        if (series[static_cast<size_t>(base)].is_zero()) continue;
        next[static_cast<size_t>(base + deg)] +=
            series[static_cast<size_t>(base)] * tpow;
      }
    }
    series = std::move(next);
  }
  return series[static_cast<size_t>(k)];
}

namespace {

MiwaPoly miwa_det(const std::vector<std::vector<MiwaPoly>>& m, int K) {
  const size_t n = m.size();
  MiwaPoly one(K);
  one.add_term(MiwaPoly::Key(static_cast<size_t>(K), 0), Rat(1));
  if (n == 0) return one;
  // Expansion by minors along rows, memoized over column subsets.
  std::map<unsigned, MiwaPoly> memo;
  memo.emplace(0u, one);
  // cols = bitmask of columns already used; row index = popcount(cols).
  std::function<const MiwaPoly&(unsigned)> solve = [&](unsigned cols) -> const MiwaPoly& {
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    size_t row = static_cast<size_t>(__builtin_popcount(cols)) - 1;
    MiwaPoly acc(K);
    // Cofactor sign along row `row`: (-1)^(row + column position).
    int sign = (row % 2 == 0) ? 1 : -1;
    for (size_t j = 0; j < n; ++j) {
      unsigned bit = 1u << j;
      if (!(cols & bit)) continue;
      const MiwaPoly& sub = solve(cols & ~bit);
      if (!m[row][j].is_zero() && !sub.is_zero()) {
        MiwaPoly term = m[row][j] * sub;
        acc += sign > 0 ? term : -term;
      }
      sign = -sign;
    }
    return memo.emplace(cols, std::move(acc)).first->second;
  };
  return solve((1u << n) - 1);
}

}  // namespace

MiwaPoly schur_miwa(const Partition& mu, int K) {
  if (K < mu.size())
    throw CutoffTooSmall("schur_miwa: need at least |mu| Miwa variables");
  auto key = std::make_pair(mu.parts(), K);
  auto hit = t_miwa_cache.find(key);
  if (hit != t_miwa_cache.end()) return hit->second;
  const size_t n = mu.length();
  std::vector<std::vector<MiwaPoly>> m(n, std::vector<MiwaPoly>(n, MiwaPoly(K)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      m[i][j] = h_miwa(mu.part(i) - static_cast<long>(i) + static_cast<long>(j), K);
  MiwaPoly v = miwa_det(m, K);
  t_miwa_cache.emplace(std::move(key), v);
  return v;
}

QRat qrat_det(std::vector<std::vector<QRat>> m) {
  const size_t n = m.size();
  if (n == 0) return QRat(1);
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("qrat_det: matrix not square");
  QRat det(1);
  bool negate = false;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return QRat();
    if (piv != col) {
      std::swap(m[piv], m[col]);
      negate = !negate;
    }
    const QRat& p = m[col][col];
    det *= p;
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      QRat factor = m[r][col] / p;
      for (size_t c = col + 1; c < n; ++c) {
        if (!m[col][c].is_zero()) m[r][c] -= factor * m[col][c];
      }
      m[r][col] = QRat();
    }
  }
  return negate ? -det : det;
}

}  // namespace qvertex
