// fraisse.hpp — generic sequences (computable approximations of the limit),
// the weight-annotated category, saturation via amalgamation, separation
// extensions, and finite-stage automorphism approximations with degrees.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knaster/lingraph.hpp"
#include "knaster/rational.hpp"

namespace knaster {

enum class Category { K, Kstar };

// A weight-annotated object (A, q); plain-category sequences carry weight 1.
struct AnnotatedObject {
  LinearGraph graph;
  Rational weight = 1;
};

// A morphism whose degree is pinned to the weight ratio dom_w / cod_w.
struct AnnotatedMorphism {
  Morphism base;
  Rational dom_w = 1;
  Rational cod_w = 1;
};

// One discharged saturation request: e maps level `level` onto A, g maps B
// onto A, and the answering h from level `answer_level` satisfies
// compose(g, h) == compose(e, bond down to `level`) exactly.
struct SaturationCertificate {
  int level = 1;
  Morphism e;
  Morphism g;
  int answer_level = 1;
  Morphism h;
};

struct SaturationRequest {
  int level = 1;
  Morphism e;
  Morphism g;
};

// Bookkeeping for one separation extension: vertices x, y of level `level`
// were driven to fiber distance > 2 by padding vertex `padded_vertex` and
// saturating; the tower top at the time of the answer is `answer_level`.
struct SeparationRecord {
  int level = 1;
  int x = 0;
  int y = 0;
  int padded_vertex = 0;
  int answer_level = 1;
};

// A finite tower A_1 <- A_2 <- ... with its bonds (bonds[i] maps level i+2
// onto level i+1), the certificates of every discharged request, separation
// records, and the requests left over when the build budget ran out. Levels
// are 1-based throughout the API.
struct GenericSequence {
  Category category = Category::K;
  std::vector<AnnotatedObject> objects;
  std::vector<Morphism> bonds;
  std::vector<SaturationCertificate> certificates;
  std::vector<SeparationRecord> separations;
  std::vector<SaturationRequest> unfulfilled;

  int levels() const { return static_cast<int>(objects.size()); }
};

// Stage-1 data of an automorphism approximation relative to a sequence:
// g1 maps level i1 onto level 1; its degree ratio against the bond composite
// is the approximation's degree.
struct AutomorphismApprox {
  int i1 = 1;
  Morphism g1;
};

struct VerificationReport {
  bool ok = true;
  std::vector<std::string> problems;
};

// Checks degree(f) == dom_w / cod_w with an integer ratio.
// Errors: NonIntegerRatio (ratio not a positive integer), DegreeMismatch.
AnnotatedMorphism validate_star(const Morphism& f, const Rational& dom_w,
                                const Rational& cod_w);

struct StarAmalgamResult {
  AnnotatedObject object;
  AnnotatedMorphism f_prime;
  AnnotatedMorphism g_prime;
};

// Amalgamation in the annotated category: runs the plain amalgamation on the
// bases and weights the amalgam (dom_w(f) * dom_w(g)) / shared cod weight.
// Error CodomainMismatch when base codomains or codomain weights differ.
StarAmalgamResult star_amalgamate(const AnnotatedMorphism& f,
                                  const AnnotatedMorphism& g);

// The composite bond from level `top` down to level `level` (identity when
// equal). Levels are 1-based; errors: InvalidParams.
Morphism bond_composite(const GenericSequence& seq, int level, int top);

// Discharges the request (level, e: A_level -> A, g: B -> A): amalgamates
// e composed with the bond from the current top against g, appends the
// resulting object and bond, and records a certificate whose h satisfies
// compose(g, h) == compose(e, bond) exactly. Error BudgetExhausted when the
// new level would exceed the hard size cap.
SaturationCertificate saturate(GenericSequence& seq, int level,
                               const Morphism& e, const Morphism& g);

// Deterministically builds a tower of at most `budget` levels starting from
// a 2-vertex level-1 object: requests are enumerated level by level in
// lexicographic order over a size-bounded object pool, shuffled by `seed`,
// and discharged FIFO; requests still queued when the level budget (or the
// size cap) is reached are returned in the unfulfilled ledger.
GenericSequence build_generic(Category category, int budget, std::uint64_t seed);

// Drops the weight annotations; certificates remain valid verbatim.
GenericSequence forget(const GenericSequence& seq);

// Smallest |z - w| over preimages z of x and w of y under the bond composite
// from `top` to `level`. Errors: InvalidParams, VertexOutOfRange.
int fiber_distance(const GenericSequence& seq, int level, int top, int x, int y);

// For vertices x, y of level `level` at graph distance > 1 (error
// NotSeparated otherwise): pads a vertex strictly between them and saturates,
// after which the fibers of x and y under the bond from the new top sit at
// distance > 2 — and stay separated under every later extension, bonds being
// 1-Lipschitz.
SeparationRecord separation_extension(GenericSequence& seq, int level, int x,
                                      int y);

// Realizes degree p/q as a stage-1 automorphism approximation: picks a cover
// C admitting canonical epis of degrees p and q onto level 1, saturates to
// obtain t with (degree-q epi) ∘ t = bond, and returns (degree-p epi) ∘ t.
// Errors: InvalidParams, BudgetExhausted.
AutomorphismApprox realize_degree(GenericSequence& seq, int p, int q);

// deg(g1) / deg(f_1^{i1}) as an exact reduced rational.
Rational approx_degree(const AutomorphismApprox& a, const GenericSequence& seq);

// Re-validates the whole tower: objects, bonds (including weight ratios in
// the annotated category), exact certificate replay, and separation-record
// distances both at their answer level and at the current top.
VerificationReport verify_sequence(const GenericSequence& seq);

}  // namespace knaster
