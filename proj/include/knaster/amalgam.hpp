// amalgam.hpp — constructive projective amalgamation: padding, stretching,
// parallel amalgamation of monotone pieces, slope splitting, block scheduling,
// the full amalgamation algorithm, and joint projection.
#pragma once

#include <utility>
#include <vector>

#include "knaster/lingraph.hpp"

namespace knaster {

// Monotone orientation of a piece: Inc pieces are non-decreasing and start at
// 0; Dec pieces are non-increasing, start at the far end vertex, and end at 0.
// Both kinds are surjections onto the full codomain.
enum class SlopeClass { Inc, Dec };

// One monotone segment of a value string, in its own local coordinates
// (values only; the position inside the parent domain lives in SlopeSplit).
struct Piece {
  SlopeClass cls = SlopeClass::Inc;
  std::vector<int> values;

  friend bool operator==(const Piece&, const Piece&) = default;
};

// The class a signed piece index refers to: positive j alternates Inc, Dec,
// Inc, ... starting from j=1; negative j is the reversal of piece |j|, so its
// class is flipped.
SlopeClass piece_class(int signed_index);

// Partition of a domain into consecutive intervals on each of which the map
// is a monotone surjection onto the codomain. forward[j-1] holds piece j;
// reversed[j-1] holds piece -j, whose value string is piece j read backwards.
struct SlopeSplit {
  std::vector<std::pair<int, int>> intervals;  // inclusive [min,max], in order
  std::vector<Piece> forward;
  std::vector<Piece> reversed;
  int codomain = 0;

  int piece_count() const { return static_cast<int>(forward.size()); }
  // Signed lookup; error InvalidParams for 0 or out-of-range indices.
  const Piece& piece(int signed_index) const;
};

// phi together with the precomposition f∘phi it was built for.
struct StretchResult {
  Morphism phi;
  Morphism stretched;
};

// Common refinement of two parallel monotone pieces: f_tilde and g_tilde are
// non-decreasing degree-1 maps (in local coordinates) with
// piece_f[f_tilde] == piece_g[g_tilde] == merged.
struct ParallelResult {
  Morphism f_tilde;
  Morphism g_tilde;
  std::vector<int> merged;
};

// The bookkeeping of one amalgamation: the block schedules alpha and beta
// (signed piece indices, length l1*l2), the merged size contributed by each
// position, and the consecutive segments of the glued domain.
struct AmalgamationPlan {
  std::vector<int> alpha;
  std::vector<int> beta;
  std::vector<int> piece_sizes;
  std::vector<std::pair<int, int>> segments;  // inclusive [l_j, r_j]
  int total = 0;                              // glued domain size L
};

struct AmalgamResult {
  Morphism f_prime;
  Morphism g_prime;
  AmalgamationPlan plan;
};

struct BlockSchedule {
  std::vector<int> alpha;
  std::vector<int> beta;
};

struct JointProjection {
  LinearGraph c;
  Morphism p_a;
  Morphism p_b;
};

// The non-decreasing degree-1 map ⟦n+j⟧ -> ⟦n⟧ whose fiber over vertex i is an
// interval of j+1 vertices while every other fiber is a singleton. Composing
// f with it repeats f(i) a further j times in place. Errors: VertexOutOfRange,
// InvalidParams (negative j).
Morphism pad(const Morphism& f, int i, int j);

// phi in 𝒦_inc such that str(f∘phi) repeats each f(i) exactly mults[i] times.
// Errors: InvalidParams (length mismatch), ZeroMultiplicity.
StretchResult stretch(const Morphism& f, const std::vector<int>& mults);

// Stretches f so that every interior turning value appears twice; the result
// splits into consecutive intervals each mapping monotonically onto the whole
// codomain (condition required by slope_split).
StretchResult normalize_condition_star(const Morphism& f);

// Max-multiplicity merge of two parallel pieces of equal SlopeClass over the
// same codomain. Errors: MixedSlopes, CodomainMismatch.
ParallelResult amalgamate_parallel(const Piece& f, const Piece& g);
// Convenience overload for whole morphisms; they must be monotone
// (InvalidParams otherwise).
ParallelResult amalgamate_parallel(const Morphism& f, const Morphism& g);

// Splits a map into consecutive monotone full-codomain surjections; piece 1
// is Inc and classes alternate. Error StarViolation when no such partition
// exists (the map fails condition (*)).
SlopeSplit slope_split(const Morphism& fstar);

// alpha: l2 alternating blocks over ±{1..l1} — odd blocks (1..l1), even
// blocks (-l1..-1); beta: l1 alternating blocks over ±{1..l2}. At every
// position the referenced pieces share a SlopeClass.
BlockSchedule build_blocks(int l1, int l2);

// Projective amalgamation: for f, g with a common codomain, produces f_prime,
// g_prime with a common domain such that compose(f, f_prime) ==
// compose(g, g_prime) exactly, with deg(f_prime) = deg(g) and
// deg(g_prime) = deg(f). Error CodomainMismatch.
AmalgamResult amalgamate(const Morphism& f, const Morphism& g);

// A common cover of two objects: the larger graph projects to both, by the
// identity on the larger side and the end-clamp map on the smaller side.
JointProjection joint_project(const LinearGraph& a, const LinearGraph& b);

}  // namespace knaster
