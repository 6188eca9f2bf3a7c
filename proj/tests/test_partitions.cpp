#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qvertex/partition.hpp"

#include <algorithm>
#include <set>

using namespace qvertex;

TEST_CASE("construction validates") {
  CHECK_NOTHROW(Partition({3, 3, 1}));
  CHECK(Partition().empty());
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("parts and conjugate") {
  Partition p({4, 2, 1});
  CHECK(p.size() == 7);
  CHECK(p.length() == 3);
  CHECK(p.part(0) == 4);
  CHECK(p.part(5) == 0);
  CHECK(p.conjugate() == Partition({3, 2, 1, 1}));
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  // conjugation is an involution
  for (const auto& mu : enumerate_upto(6)) {
    CHECK(mu.conjugate().conjugate() == mu);
    for (long k = 1; k <= 7; ++k)
      CHECK(mu.conj_part(k) == mu.conjugate().part(static_cast<size_t>(k - 1)));
  }
}

TEST_CASE("containment") {
  CHECK(Partition({3, 2}).contains(Partition({2, 2})));
  CHECK(Partition({3, 2}).contains(Partition()));
  CHECK_FALSE(Partition({3, 2}).contains(Partition({1, 1, 1})));
  CHECK_FALSE(Partition({2}).contains(Partition({3})));
}

TEST_CASE("frobenius coordinates") {
  Frobenius f = frobenius(Partition({4, 3, 1}));
  REQUIRE(f.rank() == 2);
  CHECK(f.ms == std::vector<long>({3, 1}));
  CHECK(f.ns == std::vector<long>({2, 0}));
  CHECK(from_frobenius(f) == Partition({4, 3, 1}));

  CHECK(frobenius(Partition()).rank() == 0);
  CHECK(from_frobenius(Frobenius{}) == Partition());

  // single hook (m|n) has m + n + 1 cells
  Frobenius hook{{4}, {2}};
  CHECK(from_frobenius(hook) == Partition({5, 1, 1}));

  for (const auto& mu : enumerate_upto(8)) CHECK(from_frobenius(frobenius(mu)) == mu);

  CHECK_THROWS_AS(from_frobenius(Frobenius{{1, 2}, {0}}), InvalidFrobenius);
  CHECK_THROWS_AS(from_frobenius(Frobenius{{2, 1}, {0, -1}}), InvalidFrobenius);
  CHECK_THROWS_AS(from_frobenius(Frobenius{{1, 1}, {1, 0}}), InvalidFrobenius);
}

TEST_CASE("kappa") {
  CHECK(kappa(Partition()) == 0);
  CHECK(kappa(Partition({1})) == 0);
  CHECK(kappa(Partition({2})) == 2);
  CHECK(kappa(Partition({1, 1})) == -2);
  CHECK(kappa(Partition({3, 1})) == 4);
  for (const auto& mu : enumerate_upto(7)) {
    CHECK(kappa(mu) % 2 == 0);
    CHECK(kappa(mu.conjugate()) == -kappa(mu));
    CHECK(kappa_frobenius(frobenius(mu)) == kappa(mu));
  }
}

TEST_CASE("hooks") {
  auto h = hooks(Partition({2, 1}));
  std::sort(h.begin(), h.end());
  CHECK(h == std::vector<long>({1, 1, 3}));
  auto h2 = hooks(Partition({3, 2}));
  std::sort(h2.begin(), h2.end());
  CHECK(h2 == std::vector<long>({1, 1, 2, 3, 4}));
  for (const auto& mu : enumerate_upto(7))
    CHECK(hooks(mu).size() == static_cast<size_t>(mu.size()));
  // a hook partition (m|n) has one cell of hook length m + n + 1
  auto hk = hooks(from_frobenius(Frobenius{{3}, {2}}));
  CHECK(*std::max_element(hk.begin(), hk.end()) == 6);
}

TEST_CASE("enumeration") {
  const long counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (long n = 0; n <= 8; ++n)
    CHECK(partitions_of(n).size() == static_cast<size_t>(counts[n]));

  auto all = enumerate_upto(8);
  size_t expect = 0;
  for (long c : counts) expect += static_cast<size_t>(c);
  CHECK(all.size() == expect);

  // ordered by size, then descending lexicographic; no duplicates
  std::set<std::vector<long>> seen;
  long prev_size = -1;
  std::vector<long> prev_parts;
  for (const auto& mu : all) {
    CHECK(mu.size() >= prev_size);
    if (mu.size() == prev_size) CHECK(mu.parts() < prev_parts);
    prev_size = mu.size();
    prev_parts = mu.parts();
    CHECK(seen.insert(mu.parts()).second);
  }
  CHECK(all.front() == Partition());

  // max_part restriction
  for (const auto& mu : partitions_of(6, 2)) CHECK(mu.part(0) <= 2);
  CHECK(partitions_of(6, 2).size() == 4);  // 2+2+2, 2+2+1+1, 2+1^4, 1^6
}
