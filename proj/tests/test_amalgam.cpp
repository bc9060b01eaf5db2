// Amalgamation pipeline: padding, stretching, slope splitting, parallel
// merges, block schedules, the full amalgamation law, and joint projection.
#include <cstdlib>
#include <utility>
#include <vector>

#include "doctest.h"
#include "knaster/amalgam.hpp"
#include "knaster/enumerate.hpp"

using knaster::DomainError;
using knaster::LinearGraph;
using knaster::Morphism;
using knaster::Piece;
using knaster::SlopeClass;

TEST_CASE("pad inserts an interval fiber at one vertex") {
  Morphism f = knaster::validate(2, {0, 1, 0});
  Morphism p = knaster::pad(f, 1, 2);
  CHECK(p.dom == 5);
  CHECK(p.cod == 3);
  CHECK(p.values == std::vector<int>{0, 1, 1, 1, 2});
  CHECK(knaster::compose(f, p).values == std::vector<int>{0, 1, 1, 1, 0});

  CHECK(knaster::pad(f, 0, 1).values == std::vector<int>{0, 0, 1, 2});
  CHECK(knaster::pad(f, 2, 0).values == std::vector<int>{0, 1, 2});
  CHECK_THROWS_WITH_AS(knaster::pad(f, 3, 1), doctest::Contains("VertexOutOfRange"),
                       DomainError);
  CHECK_THROWS_WITH_AS(knaster::pad(f, 0, -1), doctest::Contains("InvalidParams"),
                       DomainError);
}

TEST_CASE("stretch repeats each value by its multiplicity") {
  Morphism f = knaster::validate(2, {0, 1, 0});
  knaster::StretchResult s = knaster::stretch(f, {1, 3, 2});
  CHECK(s.phi.values == std::vector<int>{0, 1, 1, 1, 2, 2});
  CHECK(s.stretched == knaster::compose(f, s.phi));
  CHECK(s.stretched.values == std::vector<int>{0, 1, 1, 1, 0, 0});
  CHECK(knaster::degree(s.phi) == 1);
  CHECK(knaster::degree(s.stretched) == knaster::degree(f));

  CHECK_THROWS_WITH_AS(knaster::stretch(f, {1, 1}), doctest::Contains("InvalidParams"),
                       DomainError);
  CHECK_THROWS_WITH_AS(knaster::stretch(f, {1, 0, 1}),
                       doctest::Contains("ZeroMultiplicity"), DomainError);
}

TEST_CASE("normalize_condition_star duplicates interior turning values") {
  // 0,1,0,1: interior turns at indices 1 and 2 get doubled.
  Morphism f = knaster::validate(2, {0, 1, 0, 1});
  knaster::StretchResult s = knaster::normalize_condition_star(f);
  CHECK(s.stretched == knaster::compose(f, s.phi));
  // The stretched string must now split into monotone full sweeps.
  knaster::SlopeSplit split = knaster::slope_split(s.stretched);
  CHECK(split.piece_count() == knaster::degree(f));

  // Already-normal maps pass through slope_split directly.
  Morphism tentlike = knaster::validate(2, {0, 1, 1, 0});
  knaster::SlopeSplit direct = knaster::slope_split(tentlike);
  CHECK(direct.piece_count() == 2);
  CHECK(direct.forward[0].values == std::vector<int>{0, 1});
  CHECK(direct.forward[1].values == std::vector<int>{1, 0});
  CHECK(direct.forward[1].cls == SlopeClass::Dec);
  CHECK(direct.reversed[1].values == std::vector<int>{0, 1});
}

TEST_CASE("slope_split rejects strings without consecutive full sweeps") {
  // Valid epimorphism, but the middle sweep's turn is not duplicated, so no
  // partition into consecutive monotone surjections exists.
  Morphism f = knaster::validate(2, {0, 1, 0, 1});
  CHECK_THROWS_WITH_AS(knaster::slope_split(f), doctest::Contains("StarViolation"),
                       DomainError);
}

TEST_CASE("piece_class alternates and flips under negation") {
  CHECK(knaster::piece_class(1) == SlopeClass::Inc);
  CHECK(knaster::piece_class(2) == SlopeClass::Dec);
  CHECK(knaster::piece_class(3) == SlopeClass::Inc);
  CHECK(knaster::piece_class(-1) == SlopeClass::Dec);
  CHECK(knaster::piece_class(-2) == SlopeClass::Inc);
  CHECK_THROWS_AS(knaster::piece_class(0), DomainError);
}

TEST_CASE("build_blocks schedules compatible classes at every position") {
  knaster::BlockSchedule bs = knaster::build_blocks(2, 1);
  CHECK(bs.alpha == std::vector<int>{1, 2});
  CHECK(bs.beta == std::vector<int>{1, -1});

  for (int l1 = 1; l1 <= 4; ++l1) {
    for (int l2 = 1; l2 <= 4; ++l2) {
      knaster::BlockSchedule b = knaster::build_blocks(l1, l2);
      REQUIRE(b.alpha.size() == static_cast<std::size_t>(l1 * l2));
      REQUIRE(b.beta.size() == static_cast<std::size_t>(l1 * l2));
      for (std::size_t i = 0; i < b.alpha.size(); ++i) {
        CHECK(knaster::piece_class(b.alpha[i]) == knaster::piece_class(b.beta[i]));
      }
      // alpha walks blocks of the f-side piece indices, beta of the g-side.
      for (int v : b.alpha) CHECK((v != 0 && std::abs(v) <= l1));
      for (int v : b.beta) CHECK((v != 0 && std::abs(v) <= l2));
    }
  }
}

TEST_CASE("amalgamate_parallel merges by maximum multiplicity") {
  Piece f{SlopeClass::Inc, {0, 0, 1, 2}};
  Piece g{SlopeClass::Inc, {0, 1, 1, 2, 2}};
  knaster::ParallelResult r = knaster::amalgamate_parallel(f, g);
  CHECK(r.merged == std::vector<int>{0, 0, 1, 1, 2, 2});
  // Both tilde maps are monotone reindexings realizing the merge.
  for (std::size_t i = 0; i < r.merged.size(); ++i) {
    CHECK(f.values[static_cast<std::size_t>(r.f_tilde.values[i])] == r.merged[i]);
    CHECK(g.values[static_cast<std::size_t>(r.g_tilde.values[i])] == r.merged[i]);
  }
  CHECK(knaster::degree(r.f_tilde) == 1);
  CHECK(knaster::degree(r.g_tilde) == 1);

  Piece dec{SlopeClass::Dec, {2, 1, 0}};
  CHECK_THROWS_WITH_AS(knaster::amalgamate_parallel(f, dec),
                       doctest::Contains("MixedSlopes"), DomainError);

  Piece other{SlopeClass::Inc, {0, 1}};
  CHECK_THROWS_WITH_AS(knaster::amalgamate_parallel(f, other),
                       doctest::Contains("CodomainMismatch"), DomainError);

  Morphism a = knaster::validate(3, {0, 1, 1, 2});
  Morphism b = knaster::validate(3, {0, 0, 1, 2, 2});
  knaster::ParallelResult w = knaster::amalgamate_parallel(a, b);
  CHECK(knaster::compose(a, w.f_tilde) == knaster::compose(b, w.g_tilde));
}

TEST_CASE("amalgamate produces exact equal composites with swapped degrees") {
  Morphism f = knaster::validate(2, {0, 1, 0});
  Morphism g = knaster::validate(2, {0, 1});
  knaster::AmalgamResult r = knaster::amalgamate(f, g);
  CHECK(knaster::compose(f, r.f_prime) == knaster::compose(g, r.g_prime));
  CHECK(knaster::degree(r.f_prime) == 1);
  CHECK(knaster::degree(r.g_prime) == 2);
  CHECK(r.plan.total == r.f_prime.dom);
  CHECK(r.f_prime.dom == r.g_prime.dom);

  Morphism h = knaster::validate(3, {0, 1, 2});
  CHECK_THROWS_WITH_AS(knaster::amalgamate(f, h), doctest::Contains("CodomainMismatch"),
                       DomainError);
}

TEST_CASE("amalgamate sweep over small pairs") {
  // The exhaustive m,n <= 6 sweep lives in the acceptance binary; this covers
  // every pair with domains <= 5 over codomains 2 and 3.
  for (int k = 2; k <= 3; ++k) {
    std::vector<Morphism> all;
    for (int n = k; n <= 5; ++n) {
      for (const Morphism& m : knaster::enumerate_epi(LinearGraph{n}, LinearGraph{k})) {
        all.push_back(m);
      }
    }
    for (const Morphism& f : all) {
      for (const Morphism& g : all) {
        knaster::AmalgamResult r = knaster::amalgamate(f, g);
        CHECK(knaster::compose(f, r.f_prime) == knaster::compose(g, r.g_prime));
        CHECK(knaster::degree(r.f_prime) == knaster::degree(g));
        CHECK(knaster::degree(r.g_prime) == knaster::degree(f));
      }
    }
  }
}

TEST_CASE("joint_project covers both objects") {
  knaster::JointProjection jp = knaster::joint_project(LinearGraph{3}, LinearGraph{5});
  CHECK(jp.c.n == 5);
  CHECK(jp.p_b == knaster::identity(5));
  CHECK(jp.p_a.values == std::vector<int>{0, 1, 2, 2, 2});

  knaster::JointProjection same = knaster::joint_project(LinearGraph{4}, LinearGraph{4});
  CHECK(same.p_a == knaster::identity(4));
  CHECK(same.p_b == knaster::identity(4));

  knaster::JointProjection flip = knaster::joint_project(LinearGraph{6}, LinearGraph{2});
  CHECK(flip.c.n == 6);
  CHECK(flip.p_a == knaster::identity(6));
  CHECK(flip.p_b.values == std::vector<int>{0, 1, 1, 1, 1, 1});
}
