#include "qvertex/kp.hpp"

#include "qvertex/symfunc.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace qvertex {

size_t TauSeries::var(int comp, long k) const {
  if (comp < 1 || comp > components || k < 1 || k > cutoff)
    throw std::invalid_argument("TauSeries::var: index out of range");
  return static_cast<size_t>((comp - 1) * cutoff + (k - 1));
}

namespace {

std::vector<long> block_weights(int blocks, long N) {
  std::vector<long> w;
  w.reserve(static_cast<size_t>(blocks) * static_cast<size_t>(N));
  for (int j = 0; j < blocks; ++j)
    for (long k = 1; k <= N; ++k) w.push_back(k);
  return w;
}

MiwaPoly make_poly(int nvars, long bound, const std::vector<long>& w) {
  return w.empty() ? MiwaPoly(nvars, bound) : MiwaPoly(nvars, bound, w);
}

MiwaPoly like(const MiwaPoly& p) {
  return make_poly(p.nvars(), p.bound(), p.weights());
}

// Re-keys a polynomial into a larger ring at the given variable offset.
MiwaPoly embed(const MiwaPoly& p, size_t offset, int total,
               const std::vector<long>& w, long bound) {
  MiwaPoly out = make_poly(total, bound, w);
  MiwaPoly::Key key(static_cast<size_t>(total), 0);
  for (const auto& [k, c] : p.terms()) {
    std::fill(key.begin(), key.end(), 0);
    for (size_t i = 0; i < k.size(); ++i) key[offset + i] = k[i];
    out.add_term(key, c);
  }
  return out;
}

MiwaPoly constant_one(int nvars, long bound, const std::vector<long>& w) {
  MiwaPoly out = make_poly(nvars, bound, w);
  out.add_term(MiwaPoly::Key(static_cast<size_t>(nvars), 0), Rat(1));
  return out;
}

MiwaPoly deriv(const MiwaPoly& p, size_t i) {
  MiwaPoly out = like(p);
  if (i >= static_cast<size_t>(p.nvars())) return out;  // absent variable
  for (const auto& [k, c] : p.terms()) {
    if (k[i] == 0) continue;
    MiwaPoly::Key kk = k;
    --kk[i];
    out.add_term(kk, Rat(c * k[i]));
  }
  return out;
}

void gen_keys(const std::vector<long>& w, long budget, size_t i,
              MiwaPoly::Key& cur, std::vector<MiwaPoly::Key>& out) {
  if (i == w.size()) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; static_cast<long>(e) * w[i] <= budget; ++e) {
    cur[i] = e;
    gen_keys(w, budget - e * w[i], i + 1, cur, out);
  }
  cur[i] = 0;
}

std::vector<MiwaPoly::Key> all_keys(const std::vector<long>& w, long budget) {
  std::vector<MiwaPoly::Key> out;
  MiwaPoly::Key cur(w.size(), 0);
  gen_keys(w, budget, 0, cur, out);
  return out;
}

// Key over `blocks` blocks of size N, padded to blocks of size N + 1.
MiwaPoly::Key pad_blocks(const MiwaPoly::Key& k, int blocks, long N) {
  MiwaPoly::Key out(static_cast<size_t>(blocks) * static_cast<size_t>(N + 1), 0);
  for (int j = 0; j < blocks; ++j)
    for (long p = 0; p < N; ++p)
      out[static_cast<size_t>(j * (N + 1) + p)] = k[static_cast<size_t>(j * N + p)];
  return out;
}

}  // namespace

TauSeries build_tau(int components, const Framing& framing, long cutoff,
                    const Rat& u0) {
  if (components != 1 && components != 3)
    throw std::invalid_argument("build_tau: components must be 1 or 3");
  if (cutoff < 0) throw std::invalid_argument("build_tau: negative cutoff");
  const int V = static_cast<int>(components * cutoff);
  const auto w = block_weights(components, cutoff);
  TauSeries tau;
  tau.components = components;
  tau.cutoff = cutoff;
  tau.framing = framing;
  tau.u0 = u0;
  tau.poly = make_poly(V, cutoff, w);

  const auto shapes = enumerate_upto(cutoff);
  if (components == 1) {
    for (const auto& mu : shapes) {
      Rat c = w_skew({mu, Partition(), Partition(), framing}).eval_numeric(u0);
      tau.poly += embed(schur_miwa(mu, static_cast<int>(cutoff)), 0, V, w, cutoff)
                      .scaled(c);
    }
    return tau;
  }
  // Pre-embed the Schur polynomials per block; triples reuse them heavily.
  std::array<std::vector<MiwaPoly>, 3> blocks;
  for (int j = 0; j < 3; ++j)
    for (const auto& mu : shapes)
      blocks[j].push_back(embed(schur_miwa(mu, static_cast<int>(cutoff)),
                                static_cast<size_t>(j) * cutoff, V, w, cutoff));
  for (size_t i1 = 0; i1 < shapes.size(); ++i1)
    for (size_t i2 = 0; i2 < shapes.size(); ++i2) {
      if (shapes[i1].size() + shapes[i2].size() > cutoff) continue;
      MiwaPoly s12 = blocks[0][i1] * blocks[1][i2];
      for (size_t i3 = 0; i3 < shapes.size(); ++i3) {
        if (shapes[i1].size() + shapes[i2].size() + shapes[i3].size() > cutoff)
          continue;
        Rat c = w_skew({shapes[i1], shapes[i2], shapes[i3], framing})
                    .eval_numeric(u0);
        tau.poly += (s12 * blocks[2][i3]).scaled(c);
      }
    }
  return tau;
}

std::vector<MiwaPoly> shift_miwa(const TauSeries& tau, int comp, int sign,
                                 long zorder) {
  if (comp < 1 || comp > tau.components)
    throw std::invalid_argument("shift_miwa: bad component");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("shift_miwa: sign must be +1 or -1");
  if (zorder < 0) throw std::invalid_argument("shift_miwa: negative order");
  const long N = tau.cutoff;
  const int V = tau.poly.nvars();
  const auto& w = tau.poly.weights();
  std::vector<MiwaPoly> out(static_cast<size_t>(zorder) + 1,
                            make_poly(V, tau.poly.bound(), w));
  const size_t off = static_cast<size_t>(comp - 1) * static_cast<size_t>(N);

  // t_k^e expands to sum_b C(e,b) t_k^{e-b} (sign z^-k / k)^b; walk the
  // block's variables accumulating partial expansions.
  using Partial = std::tuple<MiwaPoly::Key, long, Rat>;  // key, z-order, coeff
  for (const auto& [key, c] : tau.poly.terms()) {
    std::vector<Partial> acc{{key, 0, c}};
    for (long k = 1; k <= N; ++k) {
      const size_t idx = off + static_cast<size_t>(k - 1);
      if (key[idx] == 0) continue;
      std::vector<Partial> next;
      for (const auto& [kk, a, cc] : acc) {
        const int e = kk[idx];
        Rat term = cc;
        for (int b = 0; b <= e; ++b) {
          if (b > 0) term *= Rat(sign * (e - b + 1), static_cast<long>(b) * k);
          const long za = a + k * b;
          if (za > zorder) break;
          MiwaPoly::Key nk = kk;
          nk[idx] = e - b;
          next.emplace_back(std::move(nk), za, term);
        }
      }
      acc = std::move(next);
    }
    for (auto& [kk, a, cc] : acc) out[static_cast<size_t>(a)].add_term(kk, cc);
  }
  return out;
}

size_t BilinearReport::stable() const {
  size_t n = 0;
  for (const auto& e : entries)
    if (e.cutoff_stable) ++n;
  return n;
}

size_t BilinearReport::nonzero_stable() const {
  size_t n = 0;
  for (const auto& e : entries)
    if (e.cutoff_stable && e.value != 0) ++n;
  return n;
}

namespace {

// Coefficient of z^m in e^{sum_k (t^j_k - s^j_k) z^k}, as a polynomial in the
// doubled ring (t blocks then s blocks).
MiwaPoly exp_factor(int comp, long m, int components, long N,
                    const std::vector<long>& w2, long bound) {
  const int V2 = static_cast<int>(2 * components * N);
  if (m == 0) return constant_one(V2, bound, w2);
  MiwaPoly out = make_poly(V2, bound, w2);
  const size_t toff = static_cast<size_t>(comp - 1) * static_cast<size_t>(N);
  const size_t soff = toff + static_cast<size_t>(components) * static_cast<size_t>(N);
  const MiwaPoly h = h_miwa(m, static_cast<int>(N));
  for (const auto& [k, c] : h.terms()) {
    // substitute u_k = t^j_k - s^j_k and expand each power binomially
    std::vector<std::pair<MiwaPoly::Key, Rat>> acc{
        {MiwaPoly::Key(static_cast<size_t>(V2), 0), c}};
    for (size_t i = 0; i < k.size(); ++i) {
      const int e = k[i];
      if (e == 0) continue;
      std::vector<std::pair<MiwaPoly::Key, Rat>> next;
      for (const auto& [kk, cc] : acc) {
        Rat term = cc;
        for (int b = 0; b <= e; ++b) {
          if (b > 0) term *= Rat(-(e - b + 1), b);
          MiwaPoly::Key nk = kk;
          nk[toff + i] += e - b;
          nk[soff + i] += b;
          next.emplace_back(std::move(nk), term);
        }
      }
      acc = std::move(next);
    }
    for (auto& [kk, cc] : acc) out.add_term(kk, cc);
  }
  return out;
}

// Coefficient of z^-1 in sum_j e^{xi(t^j - s^j, z)} tau(t^j - [z^-1])
// tau(s^j + [z^-1]), truncated to weighted degree <= d.
MiwaPoly bilinear_residual(const TauSeries& tau, long d, long Z) {
  const long N = tau.cutoff;
  const int C = tau.components;
  const int V = C * static_cast<int>(N);
  const int V2 = 2 * V;
  const auto w2 = block_weights(2 * C, N);
  MiwaPoly R = make_poly(V2, d, w2);
  const long zmax = std::min(Z, N);
  for (int j = 1; j <= C; ++j) {
    const auto P = shift_miwa(tau, j, -1, zmax);
    const auto Q = shift_miwa(tau, j, +1, zmax);
    std::vector<MiwaPoly> Pe, Qe;
    for (long a = 0; a <= zmax; ++a) {
      Pe.push_back(embed(P[static_cast<size_t>(a)], 0, V2, w2, d));
      Qe.push_back(embed(Q[static_cast<size_t>(a)], static_cast<size_t>(V), V2, w2, d));
    }
    for (long m = 0; m <= d; ++m) {
      const MiwaPoly E = exp_factor(j, m, C, N, w2, d);
      if (E.is_zero()) continue;
      for (long a = 0; a <= zmax; ++a) {
        const long b = m + 1 - a;
        if (b < 0 || b > zmax) continue;
        if (Pe[static_cast<size_t>(a)].is_zero() || Qe[static_cast<size_t>(b)].is_zero())
          continue;
        R += Pe[static_cast<size_t>(a)] * Qe[static_cast<size_t>(b)] * E;
      }
    }
  }
  return R;
}

BilinearReport bilinear_report(const TauSeries& tau, long d, long Z) {
  if (d < 0 || d > tau.cutoff)
    throw std::invalid_argument("bilinear check: need 0 <= degree <= cutoff");
  if (Z < d + 2) throw std::invalid_argument("bilinear check: z-order < degree + 2");
  const MiwaPoly r0 = bilinear_residual(tau, d, Z);
  const TauSeries bigger =
      build_tau(tau.components, tau.framing, tau.cutoff + 1, tau.u0);
  const MiwaPoly r1 = bilinear_residual(bigger, d, Z);

  BilinearReport rep;
  rep.degree = d;
  rep.cutoff = tau.cutoff;
  const auto w2 = block_weights(2 * tau.components, tau.cutoff);
  for (const auto& key : all_keys(w2, d)) {
    BilinearEntry e;
    e.monomial = key;
    e.value = r0.coeff(key);
    e.cutoff_stable =
        (e.value == r1.coeff(pad_blocks(key, 2 * tau.components, tau.cutoff)));
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace

BilinearReport hirota_residue_1kp(const TauSeries& tau, long degree, long zorder) {
  if (tau.components != 1)
    throw std::invalid_argument("hirota_residue_1kp: tau must be one-component");
  return bilinear_report(tau, degree, zorder);
}

BilinearReport hirota_residue_3kp(const TauSeries& tau, long degree, long zorder) {
  if (tau.components != 3)
    throw std::invalid_argument("hirota_residue_3kp: tau must be three-component");
  return bilinear_report(tau, degree, zorder);
}

namespace {

MiwaPoly kp_residual(const TauSeries& tau) {
  const long N = tau.cutoff;
  const int V = tau.poly.nvars();
  const auto& w = tau.poly.weights();
  const MiwaPoly one = constant_one(V, N, w);
  const MiwaPoly g = tau.poly - one;

  MiwaPoly logt = make_poly(V, N, w);
  MiwaPoly p = one;
  for (long k = 1; k <= N; ++k) {
    p = p * g;
    if (p.is_zero()) break;
    logt += p.scaled(Rat(k % 2 == 1 ? 1 : -1, k));
  }

  const MiwaPoly u = deriv(deriv(logt, 0), 0).scaled(Rat(2));
  const MiwaPoly lhs = deriv(deriv(u, 1), 1).scaled(Rat(3, 4));
  const MiwaPoly inner = deriv(u, 2) - (u * deriv(u, 0)).scaled(Rat(3, 2)) -
                         deriv(deriv(deriv(u, 0), 0), 0).scaled(Rat(1, 4));
  return lhs - deriv(inner, 0);
}

}  // namespace

BilinearReport kp_equation_check(const TauSeries& tau, long degree) {
  if (tau.components != 1)
    throw std::invalid_argument("kp_equation_check: tau must be one-component");
  if (degree < 0 || degree > tau.cutoff)
    throw std::invalid_argument("kp_equation_check: need 0 <= degree <= cutoff");
  const MiwaPoly r0 = kp_residual(tau);
  const TauSeries bigger = build_tau(1, tau.framing, tau.cutoff + 1, tau.u0);
  const MiwaPoly r1 = kp_residual(bigger);

  BilinearReport rep;
  rep.degree = degree;
  rep.cutoff = tau.cutoff;
  const auto w = block_weights(1, tau.cutoff);
  for (const auto& key : all_keys(w, degree)) {
    BilinearEntry e;
    e.monomial = key;
    e.value = r0.coeff(key);
    long wd = 0;
    for (size_t i = 0; i < key.size(); ++i) wd += w[i] * static_cast<long>(key[i]);
    // A residual coefficient at weighted degree g draws on log-tau
    // coefficients up to weighted degree g + 6 (the deepest term is four
    // t1-derivatives below u = 2 d^2/dt1^2 log tau).  When that range pokes
    // past the truncation, adjacent cutoffs can agree simply because both
    // are missing the same tail, so agreement alone is not conclusive.
    e.cutoff_stable = (wd + 6 <= tau.cutoff) &&
                      (e.value == r1.coeff(pad_blocks(key, 1, tau.cutoff)));
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

std::map<std::vector<Partition>, Rat> schur_coefficients(const TauSeries& tau) {
  const long N = tau.cutoff;
  const int C = tau.components;
  const int V = tau.poly.nvars();
  const auto w = block_weights(C, N);
  const auto shapes = enumerate_upto(N);

  std::vector<std::vector<Partition>> basis;
  std::vector<MiwaPoly> basis_poly;
  if (C == 1) {
    for (const auto& mu : shapes) {
      basis.push_back({mu});
      basis_poly.push_back(embed(schur_miwa(mu, static_cast<int>(N)), 0, V, w, N));
    }
  } else {
    std::array<std::vector<MiwaPoly>, 3> blocks;
    for (int j = 0; j < 3; ++j)
      for (const auto& mu : shapes)
        blocks[j].push_back(embed(schur_miwa(mu, static_cast<int>(N)),
                                  static_cast<size_t>(j) * N, V, w, N));
    for (size_t i1 = 0; i1 < shapes.size(); ++i1)
      for (size_t i2 = 0; i2 < shapes.size(); ++i2)
        for (size_t i3 = 0; i3 < shapes.size(); ++i3) {
          if (shapes[i1].size() + shapes[i2].size() + shapes[i3].size() > N)
            continue;
          basis.push_back({shapes[i1], shapes[i2], shapes[i3]});
          basis_poly.push_back(blocks[0][i1] * blocks[1][i2] * blocks[2][i3]);
        }
  }

  const auto monos = all_keys(w, N);
  if (monos.size() != basis.size())
    throw std::logic_error("schur_coefficients: basis is not square");
  const size_t n = monos.size();
  std::map<MiwaPoly::Key, size_t> row;
  for (size_t i = 0; i < n; ++i) row[monos[i]] = i;

  // Dense exact solve of (basis matrix) x = (tau coefficients).
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1, Rat(0)));
  for (size_t jcol = 0; jcol < n; ++jcol)
    for (const auto& [k, c] : basis_poly[jcol].terms()) m[row.at(k)][jcol] = c;
  for (const auto& [k, c] : tau.poly.terms()) m[row.at(k)][n] = c;

  for (size_t col = 0, prow = 0; col < n && prow < n; ++col) {
    size_t piv = prow;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("schur_coefficients: singular basis");
    std::swap(m[piv], m[prow]);
    const Rat inv = Rat(1) / m[prow][col];
    for (size_t j = col; j <= n; ++j) m[prow][j] = Rat(m[prow][j] * inv);
    for (size_t i = 0; i < n; ++i) {
      if (i == prow || m[i][col] == 0) continue;
      const Rat f = m[i][col];
      for (size_t j = col; j <= n; ++j) m[i][j] = Rat(m[i][j] - f * m[prow][j]);
    }
    ++prow;
  }
  std::map<std::vector<Partition>, Rat> out;
  for (size_t i = 0; i < n; ++i) out[basis[i]] = m[i][n];
  return out;
}

std::string monomial_str(const MiwaPoly::Key& key, int components, long cutoff,
                         bool doubled) {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < key.size(); ++i) {
    if (key[i] == 0) continue;
    const int block = static_cast<int>(i / static_cast<size_t>(cutoff));
    const long k = static_cast<long>(i % static_cast<size_t>(cutoff)) + 1;
    const bool is_s = doubled && block >= components;
    const int comp = is_s ? block - components + 1 : block + 1;
    if (any) os << " ";
    os << (is_s ? "s" : "t") << comp << "_" << k;
    if (key[i] != 1) os << "^" << key[i];
    any = true;
  }
  return any ? os.str() : "1";
}

}  // namespace qvertex
