#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qvertex/fock.hpp"

#include <random>

using namespace qvertex;

namespace {

FockVector vac() { return FockVector::vacuum(); }

FockVector state(long charge, std::vector<long> parts) {
  return FockVector::basis(BasisState{charge, Partition(std::move(parts))});
}

// random linear fermion over a bounded mode window, exercising both flavors
LinearFermion random_fermion(std::mt19937& rng, bool star) {
  std::uniform_int_distribution<long> r2(-9, 9);
  std::uniform_int_distribution<int> num(-4, 4);
  LinearFermion w;
  w.star = star;
  int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    long mode = 2 * r2(rng) + 1;  // doubled half-integers are odd
    int c = num(rng);
    if (c == 0) c = 1;
    w.modes.emplace_back(mode, QRat(c) + qpow48(24 * (rng() % 3)));
  }
  return w;
}

}  // namespace

TEST_CASE("wedge levels and eigenvalues") {
  // vacuum occupies 1/2, 3/2, ... (doubled: 1, 3, ...)
  auto lv = wedge_levels(BasisState{0, Partition()}, 3);
  CHECK(lv == std::vector<long>({1, 3, 5}));
  // a box lowers the corresponding level: a_i = i - 1/2 - mu_i - charge
  auto lv1 = wedge_levels(BasisState{0, Partition({1})}, 3);
  CHECK(lv1 == std::vector<long>({-1, 3, 5}));
  // charge shifts every level down
  auto lvc = wedge_levels(BasisState{1, Partition()}, 3);
  CHECK(lvc == std::vector<long>({-1, 1, 3}));

  for (long c : {-2L, -1L, 0L, 1L, 2L})
    for (const auto& mu : enumerate_upto(5))
      CHECK(charge_eigenvalue(BasisState{c, mu}) == c);

  // the level-squared operator restricts to 4 kappa on charge zero
  for (const auto& mu : enumerate_upto(6))
    CHECK(k4_eigenvalue(BasisState{0, mu}) == 4 * kappa(mu));
  // off charge zero it picks up the cube term: c(4c^2 - 1)/3 extra quarters
  CHECK(k4_eigenvalue(BasisState{1, Partition()}) == 1);
  CHECK(k4_eigenvalue(BasisState{-1, Partition()}) == -1);
  CHECK(k4_eigenvalue(BasisState{2, Partition()}) == 10);
}

TEST_CASE("fermion modes on the vacuum") {
  // psi_{-m-1/2} psi*_{-n-1/2} |0> = (-1)^n |(m|n)> at charge zero
  for (long m = 0; m <= 4; ++m)
    for (long n = 0; n <= 4; ++n) {
      FockVector v = apply_psi(-2 * m - 1, apply_psi_star(-2 * n - 1, vac()));
      Partition hook = from_frobenius(Frobenius{{m}, {n}});
      FockVector want =
          FockVector::basis(BasisState{0, hook}).scaled(QRat(n % 2 ? -1 : 1));
      CHECK(v == want);
    }
  // annihilation on the vacuum
  CHECK(apply_psi(1, vac()).is_zero());       // level 1/2 already occupied
  CHECK(apply_psi_star(1, vac()).is_zero());  // level -1/2 vacant, nothing to remove
  CHECK(apply_psi(-3, vac()).coeff(BasisState{1, Partition({1})}) == QRat(1));
}

TEST_CASE("clifford relations") {
  std::vector<FockVector> probes = {vac(), state(0, {2, 1}), state(1, {1, 1}),
                                    state(-1, {3})};
  for (long r2 : {-5L, -1L, 1L, 3L})
    for (long s2 : {-5L, -1L, 1L, 3L})
      for (const auto& v : probes) {
        FockVector anti = apply_psi(r2, apply_psi_star(s2, v)) +
                          apply_psi_star(s2, apply_psi(r2, v));
        if (r2 == -s2)
          CHECK(anti == v);  // {psi_r, psi*_{-r}} = 1
        else
          CHECK(anti.is_zero());
        CHECK((apply_psi(r2, apply_psi(s2, v)) +
               apply_psi(s2, apply_psi(r2, v)))
                  .is_zero());
        CHECK((apply_psi_star(r2, apply_psi_star(s2, v)) +
               apply_psi_star(s2, apply_psi_star(r2, v)))
                  .is_zero());
      }
}

TEST_CASE("charge grading") {
  FockVector v = state(0, {2, 1});
  FockVector up = apply_psi(-5, v);
  FockVector down = apply_psi_star(-5, v);
  FockVector flat = apply_alpha(-2, v);
  CHECK_FALSE(up.is_zero());
  CHECK_FALSE(down.is_zero());
  for (const auto& [b, c] : up.terms()) CHECK(b.charge == 1);
  for (const auto& [b, c] : down.terms()) CHECK(b.charge == -1);
  for (const auto& [b, c] : flat.terms()) CHECK(b.charge == 0);
}

TEST_CASE("boson modes") {
  // alpha_n |0> = 0 for n > 0; creation fills single-row/hook series
  CHECK(apply_alpha(1, vac()).is_zero());
  CHECK(apply_alpha(2, vac()).is_zero());
  CHECK(apply_alpha(-1, vac()).coeff(BasisState{0, Partition({1})}) == QRat(1));

  // [alpha_m, alpha_n] = m delta_{m+n,0} on assorted states
  std::vector<FockVector> probes = {vac(), state(0, {3, 1}), state(1, {2, 2})};
  for (long m : {-3L, -2L, -1L, 1L, 2L, 3L})
    for (long n : {-3L, -2L, -1L, 1L, 2L, 3L})
      for (const auto& v : probes) {
        FockVector comm = apply_alpha(m, apply_alpha(n, v)) -
                          apply_alpha(n, apply_alpha(m, v));
        if (m + n == 0)
          CHECK(comm == v.scaled(QRat(Rat(m))));
        else
          CHECK(comm.is_zero());
      }

  // power-sum expansion: alpha_{-n}|0> = sum over border strips of size n
  FockVector p2 = apply_alpha(-2, vac());
  CHECK(p2.coeff(BasisState{0, Partition({2})}) == QRat(1));
  CHECK(p2.coeff(BasisState{0, Partition({1, 1})}) == QRat(-1));
}

TEST_CASE("cut-and-join scaling") {
  for (const auto& mu : enumerate_upto(5)) {
    FockVector v = FockVector::basis(BasisState{0, mu});
    CHECK(apply_K(v) == v.scaled(QRat(Rat(kappa(mu)))));
    // q^{c K} with c = 1/2 multiplies by q^{kappa/2}
    CHECK(scale_qK(Rat(1, 2), v) == v.scaled(qpow(Rat(kappa(mu), 2))));
  }
}

TEST_CASE("half-vertex operators generate schur coefficients") {
  const long N = 4;
  FockVector g = apply_gamma_minus(SpecPoint::rho(), vac(), N);
  for (const auto& mu : enumerate_upto(N))
    CHECK(g.coeff(BasisState{0, mu}) == schur_rho_hook(mu));

  // skew action on a nonempty start
  FockVector g2 = apply_gamma_minus(SpecPoint::rho(), state(0, {1}), N);
  for (const auto& mu : enumerate_upto(3))
    CHECK(g2.coeff(BasisState{0, mu}) ==
          skew_schur_spec(mu, Partition({1}), SpecPoint::rho()));

  CHECK_THROWS_AS(apply_gamma_minus(SpecPoint::rho(), vac(), -1), MissingCutoff);

  // adjointness: <Gamma_+(s) v, w> = <v, Gamma_-(s) w> on shapes up to 4
  for (const auto& la : enumerate_upto(4))
    for (const auto& mu : enumerate_upto(4)) {
      FockVector v = FockVector::basis(BasisState{0, la});
      FockVector w = FockVector::basis(BasisState{0, mu});
      QRat lhs = fock_inner(apply_gamma_plus(SpecPoint::shifted(Partition({2, 1})), v), w);
      QRat rhs = fock_inner(v, apply_gamma_minus(SpecPoint::shifted(Partition({2, 1})), w,
                                                 static_cast<long>(mu.size()) + 4));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("graded commutation of the half-vertex operators") {
  // Gamma_+(z) Gamma_-(w) = 1/(1 - zw) Gamma_-(w) Gamma_+(z): comparing the
  // (a, b) components, LHS grade (a, b) equals the sum over k of the grade
  // (a - k, b - k) components of the product in the other order.
  const long order = 8;
  std::vector<FockVector> probes = {vac(), state(0, {2, 1})};
  for (const auto& v : probes) {
    const long cuts = order + v.terms().begin()->first.shape.size();
    // operator product Gamma_+(z) Gamma_-(w): Gamma_- acts first
    std::map<long, std::map<long, FockVector>> prod_pm;
    for (const auto& [b, gv] : gamma_minus_graded(v, cuts))
      for (const auto& [a, w] : gamma_plus_graded(gv))
        if (a + b <= order) prod_pm[a][b] = w;
    // reversed product Gamma_-(w) Gamma_+(z)
    std::map<long, std::map<long, FockVector>> prod_mp;
    for (const auto& [a, gv] : gamma_plus_graded(v))
      for (const auto& [b, w] : gamma_minus_graded(gv, cuts))
        if (a + b <= order) prod_mp[a][b] = w;

    auto component = [](std::map<long, std::map<long, FockVector>>& m, long a,
                       long b) {
      auto ita = m.find(a);
      if (ita == m.end()) return FockVector();
      auto itb = ita->second.find(b);
      return itb == ita->second.end() ? FockVector() : itb->second;
    };
    for (long a = 0; a <= order; ++a)
      for (long b = 0; a + b <= order; ++b) {
        FockVector want;
        for (long k = 0; k <= std::min(a, b); ++k)
          want += component(prod_mp, a - k, b - k);
        CHECK(component(prod_pm, a, b) == want);
      }
  }
}

TEST_CASE("fermion field two-point function") {
  // <0| psi(z) psi*(w) |0> = sum_{k >= 0} z^{-k-1} w^k, truncated by cutoff
  const long N = 6;
  QRat z = qpow48(2 * kLatticeQ);  // q^2
  QRat w = qpow48(3 * kLatticeQ);  // q^3
  QRat got = fock_inner(vac(), apply_psi_field(z, apply_psi_star_field(w, vac(), N), N));
  QRat want(0);
  for (long k = 0; k <= N; ++k) want += z.pow(-k - 1) * w.pow(k);
  CHECK(got == want);
  // and the reversed order has support on the other mode half
  QRat rev = fock_inner(vac(), apply_psi_star_field(w, apply_psi_field(z, vac(), N), N));
  QRat want_rev(0);
  for (long k = 0; k <= N; ++k) want_rev += z.pow(k) * w.pow(-k - 1);
  CHECK(rev == want_rev);
}

TEST_CASE("pair expectations") {
  LinearFermion a{false, {{-3, QRat(2)}, {5, QRat(1)}}};   // psi modes -3/2, 5/2
  LinearFermion b{true, {{-5, QRat(3)}, {3, QRat(7)}}};    // psi* modes -5/2, 3/2
  // only psi_r psi*_{-r} with r > 0 pair against the vacuum
  CHECK(pair_vev(a, b) == QRat(3));       // 1 * 3 from r = 5/2
  CHECK(pair_vev(b, a) == QRat(14));      // 7 * 2 from the starred side first
  CHECK(pair_vev(a, a) == QRat(0));       // same flavor never pairs
  CHECK(wick_vev_bruteforce({a}) == QRat(0));  // odd length vanishes
}

TEST_CASE("wick brute force vs determinant") {
  std::mt19937 rng(20240817u);
  for (size_t pairs = 1; pairs <= 5; ++pairs) {
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<LinearFermion> ws;
      for (size_t k = 0; k < pairs; ++k) {
        ws.push_back(random_fermion(rng, false));
        ws.push_back(random_fermion(rng, true));
      }
      CHECK(wick_vev_bruteforce(ws) == wick_vev_det(ws));
    }
  }
  // the determinant route insists on the alternating shape
  LinearFermion f = random_fermion(rng, false);
  LinearFermion g = random_fermion(rng, true);
  CHECK_THROWS_AS(wick_vev_det({f, f, g, g}), ShapeMismatch);
  CHECK_THROWS_AS(wick_vev_det({f, g, g}), ShapeMismatch);
}
