// Enumeration layer: change-position encoding, exhaustive/limited listing,
// exact counts, and reproducible uniform sampling.
#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "knaster/enumerate.hpp"
#include "oracles.hpp"

using knaster::LinearGraph;
using knaster::Morphism;

TEST_CASE("change positions invert epi_from_changes") {
  for (int cod = 2; cod <= 4; ++cod) {
    for (int dom = cod; dom <= 7; ++dom) {
      for (const auto& v : oracle::all_epis(dom, cod)) {
        Morphism m = knaster::validate(cod, v);
        std::vector<int> ch = knaster::change_positions(m);
        CHECK(knaster::epi_from_changes(dom, cod, ch) == m);
        CHECK(static_cast<int>(ch.size()) % (cod - 1) == 0);
      }
    }
  }
}

TEST_CASE("epi_from_changes rejects bad change sets") {
  using knaster::DomainError;
  // 3 changes is not a multiple of cod-1 = 2.
  CHECK_THROWS_AS(knaster::epi_from_changes(5, 3, {1, 2, 3}), DomainError);
  CHECK_THROWS_AS(knaster::epi_from_changes(5, 2, {}), DomainError);
  CHECK_THROWS_AS(knaster::epi_from_changes(5, 2, {0}), DomainError);
  CHECK_THROWS_AS(knaster::epi_from_changes(5, 2, {2, 2}), DomainError);
  CHECK(knaster::epi_from_changes(5, 3, {1, 2}).values == std::vector<int>{0, 1, 2, 2, 2});
}

TEST_CASE("enumerate_epi equals the oracle listing in lexicographic order") {
  for (int cod = 2; cod <= 4; ++cod) {
    for (int dom = 2; dom <= 8; ++dom) {
      std::vector<std::vector<int>> expect = oracle::all_epis(dom, cod);
      std::vector<Morphism> got = knaster::enumerate_epi(LinearGraph{dom}, LinearGraph{cod});
      REQUIRE(got.size() == expect.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].values == expect[i]);
      }
      CHECK(knaster::count_epi(LinearGraph{dom}, LinearGraph{cod}) == expect.size());
    }
  }
}

TEST_CASE("two-vertex counts follow the closed form") {
  std::uint64_t expect = 1;  // 2^{n-1} - 1 at n = 2 is 1
  for (int n = 2; n <= 10; ++n) {
    expect = (std::uint64_t{1} << (n - 1)) - 1;
    CHECK(knaster::count_epi(LinearGraph{n}, LinearGraph{2}) == expect);
    CHECK(oracle::count_epis(n, 2) == expect);
  }
}

TEST_CASE("degree-restricted enumeration partitions the full set") {
  for (int cod = 2; cod <= 4; ++cod) {
    for (int dom = cod; dom <= 8; ++dom) {
      LinearGraph d{dom}, c{cod};
      std::uint64_t total = 0;
      std::vector<Morphism> stitched;
      for (int deg = 1; deg * (cod - 1) <= dom - 1; ++deg) {
        std::vector<Morphism> part = knaster::enumerate_epi_of_degree(d, c, deg);
        CHECK(knaster::count_epi_of_degree(d, c, deg) == part.size());
        for (const Morphism& m : part) {
          CHECK(knaster::degree(m) == deg);
          stitched.push_back(m);
        }
        total += part.size();
      }
      CHECK(total == knaster::count_epi(d, c));
      // Same multiset: sort both by value string.
      std::vector<Morphism> full = knaster::enumerate_epi(d, c);
      auto by_values = [](const Morphism& a, const Morphism& b) {
        return a.values < b.values;
      };
      std::sort(stitched.begin(), stitched.end(), by_values);
      std::sort(full.begin(), full.end(), by_values);
      CHECK(stitched == full);
    }
  }
}

TEST_CASE("prefix listings are genuine prefixes") {
  LinearGraph d{9}, c{2};
  std::vector<Morphism> full = knaster::enumerate_epi(d, c);
  for (std::size_t cap : {std::size_t{0}, std::size_t{1}, std::size_t{7}, full.size(), full.size() + 10}) {
    std::vector<Morphism> pre = knaster::enumerate_epi_prefix(d, c, cap);
    REQUIRE(pre.size() == std::min(cap, full.size()));
    for (std::size_t i = 0; i < pre.size(); ++i) CHECK(pre[i] == full[i]);
  }
  std::vector<Morphism> deg3 = knaster::enumerate_epi_of_degree(d, c, 3);
  std::vector<Morphism> pre3 = knaster::enumerate_epi_of_degree_prefix(d, c, 3, 5);
  REQUIRE(pre3.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(pre3[i] == deg3[i]);
}

TEST_CASE("sampling is exact, reproducible, and covers the whole set") {
  LinearGraph d{6}, c{2};
  std::mt19937_64 r1(42), r2(42);
  for (int i = 0; i < 20; ++i) {
    Morphism a = knaster::sample_epi(d, c, r1);
    Morphism b = knaster::sample_epi(d, c, r2);
    CHECK(a == b);
    CHECK(knaster::validate(a.cod, a.values) == a);
  }

  // With 31 epimorphisms and 2000 draws, missing one has probability
  // (30/31)^2000 < 10^-28; treat coverage as certain.
  std::set<std::vector<int>> seen;
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) seen.insert(knaster::sample_epi(d, c, rng).values);
  CHECK(seen.size() == knaster::count_epi(d, c));

  std::mt19937_64 rd(3);
  for (int i = 0; i < 50; ++i) {
    Morphism m = knaster::sample_epi_of_degree(d, c, 3, rd);
    CHECK(knaster::degree(m) == 3);
  }

  std::mt19937_64 re(0);
  CHECK_THROWS_WITH_AS(knaster::sample_epi(LinearGraph{2}, LinearGraph{3}, re),
                       doctest::Contains("NoMorphism"), knaster::DomainError);
}

TEST_CASE("uniform_u64 stays in range and exhausts small ranges") {
  std::mt19937_64 rng(1);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 200; ++i) {
    std::uint64_t v = knaster::uniform_u64(rng, 5);
    CHECK(v < 5);
    seen.insert(v);
  }
  CHECK(seen.size() == 5);
}

TEST_CASE("deterministic_shuffle permutes and reproduces") {
  std::vector<int> a{1, 2, 3, 4, 5, 6, 7}, b = a, orig = a;
  std::mt19937_64 r1(9), r2(9);
  knaster::deterministic_shuffle(a, r1);
  knaster::deterministic_shuffle(b, r2);
  CHECK(a == b);
  std::sort(b.begin(), b.end());
  CHECK(b == orig);
}
