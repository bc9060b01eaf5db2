// plmap.hpp — exact-rational piecewise-linear open surjections of [0,1]:
// tent maps, composition, the lift of a graph epimorphism to a PL map, and
// sup-norm distance.
#pragma once

#include <vector>

#include "knaster/lingraph.hpp"
#include "knaster/rational.hpp"

namespace knaster {

struct PLBreakpoint {
  Rational x;
  Rational y;

  friend bool operator==(const PLBreakpoint&, const PLBreakpoint&) = default;
};

// A piecewise-linear open surjection [0,1] -> [0,1] fixing 0, stored as its
// canonical breakpoint list:
//   * x strictly increasing, x_0 = 0, x_last = 1, all y in [0,1], y_0 = 0;
//   * no constant segment and no collinear interior breakpoint;
//   * every direction change happens at value 0 or 1, so each maximal
//     monotone lap sweeps the whole interval and the final value is 0 or 1.
// The degree is the number of laps. Construct through make_pl(), which
// enforces all of the above; two maps are equal iff their canonical
// breakpoint lists are equal.
struct PLOpenMap {
  std::vector<PLBreakpoint> points;

  friend bool operator==(const PLOpenMap&, const PLOpenMap&) = default;
};

// Validates and canonicalizes a breakpoint list (errors: InvalidParams for
// structural problems, NotPointed if y_0 != 0, NotOpenMap when a plateau, a
// mid-range turn, or a non-extreme final value would break openness).
PLOpenMap make_pl(std::vector<PLBreakpoint> points);

PLOpenMap pl_identity();

// The standard degree-d tent map: breakpoints (i/d, i mod 2) for i = 0..d.
PLOpenMap tent(int d);

// Number of monotone laps.
int pl_degree(const PLOpenMap& f);

// Exact evaluation; x must lie in [0,1] (error: InvalidParams).
Rational pl_eval(const PLOpenMap& f, const Rational& x);

// pl_compose(f, g) applies g first, matching compose() for morphisms.
// Degrees multiply.
PLOpenMap pl_compose(const PLOpenMap& f, const PLOpenMap& g);

// Whether tent(c) and tent(d) commute under composition, by exact comparison.
bool commute_check(int c, int d);

// The PL map through the points (u/(dom-1), f(u)/(cod-1)) for u = 0 and every
// change position u of f. When f ends in a plateau the last breakpoint is
// moved to x = 1, keeping the lap count equal to degree(f).
PLOpenMap lift(const Morphism& f);

// Exact sup-norm distance, computed on the union of the breakpoint grids
// (where |f - g| is piecewise linear, so the maximum sits at a grid point).
Rational sup_distance(const PLOpenMap& f, const PLOpenMap& g);

}  // namespace knaster
