// Generic sequences: annotated category, saturation certificates, generic
// tower construction, separation extensions, and degree realization.
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "knaster/enumerate.hpp"
#include "knaster/fraisse.hpp"
#include "knaster/json_io.hpp"

using knaster::AnnotatedMorphism;
using knaster::AnnotatedObject;
using knaster::Category;
using knaster::DomainError;
using knaster::GenericSequence;
using knaster::LinearGraph;
using knaster::Morphism;
using knaster::Rational;

namespace {

GenericSequence single_level(int n, Rational w = 1) {
  GenericSequence s;
  s.objects.push_back(AnnotatedObject{LinearGraph{n}, std::move(w)});
  return s;
}

}  // namespace

TEST_CASE("validate_star enforces the weight ratio, ratio check first") {
  Morphism f = knaster::validate(2, {0, 1, 0});  // degree 2
  AnnotatedMorphism ok = knaster::validate_star(f, 2, 1);
  CHECK(ok.dom_w == 2);
  CHECK(ok.cod_w == 1);

  // Ratio 1/3 is not an integer; reported before any degree comparison.
  CHECK_THROWS_WITH_AS(knaster::validate_star(f, 1, 3),
                       doctest::Contains("NonIntegerRatio"), DomainError);
  CHECK_THROWS_WITH_AS(knaster::validate_star(f, 3, 1),
                       doctest::Contains("DegreeMismatch"), DomainError);
  CHECK_THROWS_WITH_AS(knaster::validate_star(f, Rational(-2), 1),
                       doctest::Contains("InvalidParams"), DomainError);
}

TEST_CASE("star_amalgamate multiplies weights over the shared codomain") {
  AnnotatedMorphism f = knaster::validate_star(knaster::validate(2, {0, 1, 0}), 2, 1);
  AnnotatedMorphism g =
      knaster::validate_star(knaster::validate(2, {0, 1, 0, 1}), 3, 1);
  knaster::StarAmalgamResult r = knaster::star_amalgamate(f, g);
  CHECK(r.object.weight == Rational(6));
  CHECK(knaster::compose(f.base, r.f_prime.base) ==
        knaster::compose(g.base, r.g_prime.base));
  CHECK(knaster::degree(r.f_prime.base) == 3);
  CHECK(knaster::degree(r.g_prime.base) == 2);
  CHECK(r.f_prime.dom_w == Rational(6));
  CHECK(r.f_prime.cod_w == Rational(2));

  AnnotatedMorphism other =
      knaster::validate_star(knaster::validate(3, {0, 1, 2}), 1, 1);
  CHECK_THROWS_WITH_AS(knaster::star_amalgamate(f, other),
                       doctest::Contains("CodomainMismatch"), DomainError);
}

TEST_CASE("bond_composite is the identity at the top and composes downward") {
  GenericSequence seq = single_level(2);
  CHECK(knaster::bond_composite(seq, 1, 1) == knaster::identity(2));

  knaster::saturate(seq, 1, knaster::identity(2), knaster::validate(2, {0, 1, 1}));
  REQUIRE(seq.levels() == 2);
  CHECK(knaster::bond_composite(seq, 1, 2) == seq.bonds[0]);
  CHECK_THROWS_WITH_AS(knaster::bond_composite(seq, 2, 1),
                       doctest::Contains("InvalidParams"), DomainError);
}

TEST_CASE("saturate discharges a request with an exact replay certificate") {
  GenericSequence seq = single_level(2);
  Morphism g = knaster::validate(2, {0, 1, 0});
  knaster::SaturationCertificate cert =
      knaster::saturate(seq, 1, knaster::identity(2), g);
  CHECK(cert.level == 1);
  CHECK(cert.answer_level == 2);
  CHECK(knaster::compose(cert.g, cert.h) ==
        knaster::compose(cert.e, knaster::bond_composite(seq, 1, 2)));
  CHECK(seq.certificates.size() == 1);

  // A second request, now answered from level 2 down to level 1.
  Morphism g2 = knaster::validate(2, {0, 1, 0, 1});
  knaster::SaturationCertificate c2 =
      knaster::saturate(seq, 1, knaster::identity(2), g2);
  CHECK(c2.answer_level == 3);
  CHECK(knaster::compose(c2.g, c2.h) ==
        knaster::compose(c2.e, knaster::bond_composite(seq, 1, 3)));
  CHECK(knaster::verify_sequence(seq).ok);
}

TEST_CASE("build_generic verifies, respects the budget, and is seed-stable") {
  for (std::uint64_t seed : {0ull, 1ull, 42ull}) {
    GenericSequence seq = knaster::build_generic(Category::K, 4, seed);
    CHECK(seq.levels() <= 4);
    CHECK(seq.levels() >= 2);
    knaster::VerificationReport rep = knaster::verify_sequence(seq);
    CHECK(rep.ok);
    CHECK(rep.problems.empty());
  }

  GenericSequence a = knaster::build_generic(Category::K, 4, 7);
  GenericSequence b = knaster::build_generic(Category::K, 4, 7);
  CHECK(knaster::sequence_to_json(a).dump() == knaster::sequence_to_json(b).dump());

  GenericSequence star = knaster::build_generic(Category::Kstar, 4, 5);
  CHECK(knaster::verify_sequence(star).ok);
  // In the annotated category every bond's degree equals the weight ratio.
  for (std::size_t i = 0; i < star.bonds.size(); ++i) {
    Rational ratio = star.objects[i + 1].weight / star.objects[i].weight;
    CHECK(Rational(knaster::degree(star.bonds[i])) == ratio);
  }

  GenericSequence plain = knaster::forget(star);
  CHECK(plain.category == Category::K);
  for (const AnnotatedObject& o : plain.objects) CHECK(o.weight == 1);
  CHECK(knaster::verify_sequence(plain).ok);
}

TEST_CASE("verify_sequence flags tampered bonds, certificates, and weights") {
  GenericSequence seq = single_level(2);
  knaster::saturate(seq, 1, knaster::identity(2), knaster::validate(2, {0, 1, 0}));
  REQUIRE(knaster::verify_sequence(seq).ok);

  // Swap the bond for a different valid epimorphism of the same shape: the
  // certificate replay must notice.
  GenericSequence bad_bond = seq;
  for (const Morphism& alt : knaster::enumerate_epi(LinearGraph{bad_bond.bonds[0].dom},
                                                    LinearGraph{2})) {
    if (!(alt == bad_bond.bonds[0])) {
      bad_bond.bonds[0] = alt;
      break;
    }
  }
  knaster::VerificationReport rep = knaster::verify_sequence(bad_bond);
  CHECK(!rep.ok);
  CHECK(!rep.problems.empty());

  GenericSequence bad_cert = seq;
  bad_cert.certificates[0].answer_level = 1;
  CHECK(!knaster::verify_sequence(bad_cert).ok);

  GenericSequence star = knaster::build_generic(Category::Kstar, 3, 0);
  REQUIRE(knaster::verify_sequence(star).ok);
  star.objects.back().weight += 1;
  CHECK(!knaster::verify_sequence(star).ok);
}

TEST_CASE("fiber_distance at a single level is the graph distance") {
  GenericSequence seq = single_level(5);
  CHECK(knaster::fiber_distance(seq, 1, 1, 0, 4) == 4);
  CHECK(knaster::fiber_distance(seq, 1, 1, 2, 2) == 0);
  CHECK_THROWS_WITH_AS(knaster::fiber_distance(seq, 1, 1, 0, 5),
                       doctest::Contains("VertexOutOfRange"), DomainError);
}

TEST_CASE("separation_extension pushes fibers more than 2 apart and persists") {
  GenericSequence seq = single_level(4);
  knaster::SeparationRecord rec = knaster::separation_extension(seq, 1, 0, 2);
  CHECK(rec.level == 1);
  CHECK(rec.answer_level == seq.levels());
  CHECK(knaster::fiber_distance(seq, 1, rec.answer_level, 0, 2) > 2);
  CHECK(seq.separations.size() == 1);
  CHECK(knaster::verify_sequence(seq).ok);

  // Separation survives later extensions because bonds never expand distances.
  knaster::saturate(seq, 1, knaster::identity(4),
                    knaster::validate(4, {0, 1, 2, 3, 2, 1, 0}));
  CHECK(knaster::fiber_distance(seq, 1, seq.levels(), 0, 2) > 2);
  CHECK(knaster::verify_sequence(seq).ok);

  CHECK_THROWS_WITH_AS(knaster::separation_extension(seq, 1, 1, 2),
                       doctest::Contains("NotSeparated"), DomainError);
  CHECK_THROWS_WITH_AS(knaster::separation_extension(seq, 1, 3, 3),
                       doctest::Contains("NotSeparated"), DomainError);
}

TEST_CASE("realize_degree hits the target rational exactly") {
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      GenericSequence seq = single_level(2);
      knaster::AutomorphismApprox a = knaster::realize_degree(seq, p, q);
      CHECK(knaster::approx_degree(a, seq) == Rational(p, q));
      CHECK(a.g1.cod == 2);
      CHECK(knaster::verify_sequence(seq).ok);
    }
  }
  GenericSequence seq = single_level(2);
  CHECK_THROWS_WITH_AS(knaster::realize_degree(seq, 0, 2),
                       doctest::Contains("InvalidParams"), DomainError);
}

TEST_CASE("sequence JSON round-trips byte for byte") {
  GenericSequence star = knaster::build_generic(Category::Kstar, 4, 11);
  knaster::Json j = knaster::sequence_to_json(star);
  GenericSequence back = knaster::sequence_from_json(j);
  CHECK(knaster::sequence_to_json(back).dump() == j.dump());
  CHECK(knaster::verify_sequence(back).ok);

  // Separation records survive the round trip too.
  GenericSequence sep = single_level(4);
  knaster::separation_extension(sep, 1, 0, 3);
  knaster::Json js = knaster::sequence_to_json(sep);
  CHECK(knaster::sequence_to_json(knaster::sequence_from_json(js)).dump() == js.dump());
}
