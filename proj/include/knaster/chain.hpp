// chain.hpp — epsilon-fine chains of open intervals on [0,1], towers of
// chains refined through tent maps, and the discretization of a PL map to a
// graph epimorphism between chain index sets.
#pragma once

#include <vector>

#include "knaster/lingraph.hpp"
#include "knaster/plmap.hpp"
#include "knaster/rational.hpp"

namespace knaster {

// Open interval (lo, hi) taken as a subset of the space [0,1]: links touching
// an end of [0,1] are relatively open there, so 0 belongs to a link with
// lo == 0 and 1 to a link with hi == 1.
struct ChainLink {
  Rational lo;
  Rational hi;

  friend bool operator==(const ChainLink&, const ChainLink&) = default;
};

// A chain cover of [0,1]: consecutive links overlap, non-consecutive links
// are disjoint, 0 lies in the first link, 1 in the last. epsilon certifies
// the fineness conditions checked by validate_chain:
//   * non-adjacent links are more than epsilon apart;
//   * every link holds a point at distance > epsilon from all other links;
//   * every set of diameter < epsilon lies inside some link (epsilon is at
//     most every consecutive overlap, which is the cover's Lebesgue number).
struct Chain {
  std::vector<ChainLink> links;
  Rational epsilon;
};

// Chains U^0..U^N together with the tent degrees of the bonding maps; chain
// n+1 refines chain n through tent(tent_degrees[n]).
struct ChainTower {
  std::vector<Chain> chains;
  std::vector<int> tent_degrees;
};

// Uniform p-link chain with the given overlap fraction (each adjacent pair
// shares that fraction of a link's length). Link length is
// 1/(p - (p-1)*overlap) and epsilon is half the overlap width. Errors:
// InvalidParams (p < 2 or overlap <= 0), OverlapTooLarge (overlap >= 1/4).
Chain fine_chain(int p, const Rational& overlap);

// Re-checks every chain condition exactly; throws ChainInvalid with a
// description of the first violated condition.
void validate_chain(const Chain& c);

Rational chain_mesh(const Chain& c);

// Builds `levels` chains (so levels-1 bonding tents, taken from the front of
// `degrees`): level 0 has two links, and every later level's link diameter
// stays below min(1/level, epsilon_prev/(6*degree_prev)). Errors:
// InvalidParams, BudgetExhausted (a level would need more than 50 million
// links).
ChainTower chain_tower(const std::vector<int>& degrees, int levels);

// Re-certifies the whole tower: every chain passes validate_chain, meshes
// shrink below 1/level, link diameters respect the tent-degree bound, images
// of closed fine links land inside coarse links that cover everything, and
// links mapping into non-adjacent coarse links are more than 2 apart.
// `jobs` worker threads split the per-link sweep; the outcome is independent
// of jobs. Throws TowerInvalid / InvalidParams.
void validate_tower(const ChainTower& t, int jobs = 1);

// The vertex map i -> least j with T(closure of fine link i) inside coarse
// link j, validated as a graph epimorphism. Error: NoContainingLink when some
// image fits in no coarse link.
Morphism discretize(const PLOpenMap& t, const Chain& fine, const Chain& coarse);

}  // namespace knaster
