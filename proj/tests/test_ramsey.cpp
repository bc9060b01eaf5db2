// Ramsey layer: injection correspondence, exhaustively certified Ramsey
// numbers (cross-checked against raw bitmask oracles), witness objects,
// monochromatic search, and the 2-adic coloring.
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "doctest.h"
#include "knaster/enumerate.hpp"
#include "knaster/ramsey.hpp"
#include "oracles.hpp"

using knaster::AnnotatedObject;
using knaster::Coloring;
using knaster::DomainError;
using knaster::IncreasingInjection;
using knaster::LinearGraph;
using knaster::Morphism;
using knaster::Rational;

TEST_CASE("to_injection records the change set of a morphism") {
  Morphism f = knaster::validate(2, {0, 1, 0, 0, 1});
  IncreasingInjection p = knaster::to_injection(f);
  CHECK(p.n == 5);
  CHECK(p.k == 3);
  CHECK(p.values == std::vector<int>{1, 2, 4});
}

TEST_CASE("monotone_from_injection rebuilds degree-1 maps from fiber starts") {
  for (int m = 2; m <= 4; ++m) {
    for (int n = m; n <= 8; ++n) {
      for (const Morphism& f :
           knaster::enumerate_epi_of_degree(LinearGraph{n}, LinearGraph{m}, 1)) {
        std::vector<int> fiber_starts = knaster::change_positions(f);
        IncreasingInjection p;
        p.values.push_back(0);  // the unconstrained first entry
        p.values.insert(p.values.end(), fiber_starts.begin(), fiber_starts.end());
        p.k = m;
        p.n = n;
        CHECK(knaster::monotone_from_injection(p, m, n) == f);
      }
    }
  }

  IncreasingInjection bad{2, 5, {3, 1}};
  CHECK_THROWS_WITH_AS(knaster::monotone_from_injection(bad, 2, 5),
                       doctest::Contains("InvalidParams"), DomainError);
  IncreasingInjection shape{3, 5, {0, 2, 4}};
  CHECK_THROWS_WITH_AS(knaster::monotone_from_injection(shape, 2, 5),
                       doctest::Contains("InvalidParams"), DomainError);
}

TEST_CASE("singleton Ramsey numbers follow the pigeonhole formula") {
  for (int m = 2; m <= 3; ++m) {
    for (int d = 1; d <= 3; ++d) {
      int expect = d * (m - 1) + 1;
      knaster::RamseyResult r = knaster::ramsey_number(1, m, d, 12);
      CHECK(r.known);
      CHECK(r.value == expect);
      CHECK(oracle::every_singleton_coloring_has_m_same(expect, m, d));
      CHECK(!oracle::every_singleton_coloring_has_m_same(expect - 1, m, d));
    }
  }
}

TEST_CASE("pair Ramsey number 6 matches the raw bitmask oracle") {
  knaster::RamseyResult r = knaster::ramsey_number(2, 3, 2, 6);
  CHECK(r.known);
  CHECK(r.value == 6);
  CHECK(oracle::every_pair_coloring_has_mono_triangle(6));
  CHECK(!oracle::every_pair_coloring_has_mono_triangle(5));

  // A cap below the answer reports the search as inconclusive, not false.
  knaster::RamseyResult capped = knaster::ramsey_number(2, 3, 2, 5);
  CHECK(!capped.known);
  CHECK(capped.value == 5);
}

TEST_CASE("infeasibly large searches come back not-known, never guessed") {
  // 3-uniform, two colors, target 4: the true value (13) sits past the point
  // where exhaustive search stays affordable, so the result must be unknown.
  knaster::RamseyResult r = knaster::ramsey_number(3, 4, 2, 10);
  CHECK(!r.known);
  CHECK(r.value <= 10);
  CHECK(r.value >= 7);
}

TEST_CASE("witness object sizes and vacuity") {
  knaster::WitnessResult w =
      knaster::witness({LinearGraph{2}, 1}, {LinearGraph{4}, 1}, 3, 10);
  REQUIRE(w.kind == knaster::WitnessResult::Kind::Found);
  CHECK(w.c.graph.n == 10);
  CHECK(w.c.weight == Rational(1));

  knaster::WitnessResult pair =
      knaster::witness({LinearGraph{2}, 1}, {LinearGraph{3}, 2}, 2, 10);
  REQUIRE(pair.kind == knaster::WitnessResult::Kind::Found);
  CHECK(pair.c.graph.n == 6);
  CHECK(pair.c.weight == Rational(2));

  // Non-integer weight ratio: no morphism B -> A exists at all.
  CHECK(knaster::witness({LinearGraph{2}, 1}, {LinearGraph{3}, Rational(1, 2)}, 2, 10)
            .kind == knaster::WitnessResult::Kind::Vacuous);
  // Forced change count exceeds the vertices available in B.
  CHECK(knaster::witness({LinearGraph{4}, 1}, {LinearGraph{4}, 2}, 2, 10).kind ==
        knaster::WitnessResult::Kind::Vacuous);

  CHECK(knaster::witness({LinearGraph{3}, 1}, {LinearGraph{4}, 1}, 2, 5).kind ==
        knaster::WitnessResult::Kind::Unknown);
}

namespace {

// Index of each forced-degree morphism C -> A in the lexicographic
// enumeration that colorings are keyed by.
std::map<std::vector<int>, int> coloring_index(const LinearGraph& c,
                                               const LinearGraph& a, int deg) {
  std::map<std::vector<int>, int> out;
  int i = 0;
  for (const Morphism& m : knaster::enumerate_epi_of_degree(c, a, deg)) {
    out[m.values] = i++;
  }
  return out;
}

// Every h: B -> A of the forced degree must give compose(h, g) the same
// color; returns that color.
int verified_common_color(const Morphism& g, const LinearGraph& b,
                          const LinearGraph& a, int deg_ba,
                          const std::map<std::vector<int>, int>& index,
                          const Coloring& coloring) {
  int common = -1;
  for (const Morphism& h : knaster::enumerate_epi_of_degree(b, a, deg_ba)) {
    int col = coloring.assignment[static_cast<std::size_t>(
        index.at(knaster::compose(h, g).values))];
    if (common == -1) common = col;
    REQUIRE(col == common);
  }
  return common;
}

}  // namespace

TEST_CASE("find_monochromatic returns a verified constant-color morphism") {
  AnnotatedObject a{LinearGraph{2}, 1};
  AnnotatedObject b{LinearGraph{4}, 1};
  AnnotatedObject c{LinearGraph{10}, 1};
  auto index = coloring_index(c.graph, a.graph, 1);
  REQUIRE(index.size() == 9);

  Coloring constant;
  constant.d = 3;
  constant.assignment.assign(9, 1);
  knaster::MonoSearchResult r = knaster::find_monochromatic(c, b, a, constant);
  CHECK(r.color == 1);
  CHECK(r.g.dom == 10);
  CHECK(r.g.cod == 4);
  CHECK(verified_common_color(r.g, b.graph, a.graph, 1, index, constant) == 1);

  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    Coloring random;
    random.d = 3;
    for (int i = 0; i < 9; ++i) {
      random.assignment.push_back(static_cast<int>(knaster::uniform_u64(rng, 3)));
    }
    knaster::MonoSearchResult s = knaster::find_monochromatic(c, b, a, random);
    CHECK(verified_common_color(s.g, b.graph, a.graph, 1, index, random) == s.color);
  }
}

TEST_CASE("find_monochromatic fails honestly when every pair is bichromatic") {
  AnnotatedObject a{LinearGraph{2}, 1};
  AnnotatedObject b{LinearGraph{3}, 1};
  AnnotatedObject c{LinearGraph{4}, 1};
  // The three degree-1 maps C -> B each hit a different pair of the three
  // colorable elements; coloring them 0, 1, 2 leaves no constant composite.
  Coloring rainbow;
  rainbow.d = 3;
  rainbow.assignment = {0, 1, 2};
  CHECK_THROWS_WITH_AS(knaster::find_monochromatic(c, b, a, rainbow),
                       doctest::Contains("NoWitness"), DomainError);
}

TEST_CASE("rho is the 2-adic valuation") {
  CHECK(knaster::rho(1) == 0);
  CHECK(knaster::rho(2) == 1);
  CHECK(knaster::rho(12) == 2);
  CHECK(knaster::rho(std::uint64_t{1} << 40) == 40);
  CHECK_THROWS_WITH_AS(knaster::rho(0), doctest::Contains("InvalidParams"), DomainError);

  Morphism f = knaster::validate(2, {0, 1, 0, 1, 0});  // degree 4
  CHECK(knaster::degree_coloring(f, 3) == 2);
  CHECK(knaster::degree_coloring(f, 2) == 0);
}

TEST_CASE("2-adic coloring attains every color through small test domains") {
  std::mt19937_64 rng(1);
  knaster::InfiniteDegreeReport id_only =
      knaster::infinite_degree_check(2, LinearGraph{8}, 0, rng);
  CHECK(id_only.colors == 2);
  CHECK(id_only.all_colors_every_time);
  CHECK(id_only.checked >= 1);

  knaster::InfiniteDegreeReport sampled =
      knaster::infinite_degree_check(2, LinearGraph{15}, 5, rng);
  CHECK(sampled.all_colors_every_time);
  CHECK(sampled.checked == 5);

  CHECK_THROWS_WITH_AS(knaster::infinite_degree_check(2, LinearGraph{4}, 0, rng),
                       doctest::Contains("NoMorphism"), DomainError);
  CHECK_THROWS_WITH_AS(knaster::infinite_degree_check(0, LinearGraph{8}, 0, rng),
                       doctest::Contains("InvalidParams"), DomainError);
}
