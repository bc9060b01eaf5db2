// plmap.cpp — canonical-form piecewise-linear maps with exact rational
// breakpoints.
#include "knaster/plmap.hpp"

#include <algorithm>

#include "knaster/enumerate.hpp"
#include "knaster/error.hpp"

namespace knaster {

namespace {

bool collinear(const PLBreakpoint& a, const PLBreakpoint& b,
               const PLBreakpoint& c) {
  return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

int direction(const PLBreakpoint& a, const PLBreakpoint& b) {
  return b.y > a.y ? 1 : -1;
}

bool extreme(const Rational& y) { return y == 0 || y == 1; }

}  // namespace

PLOpenMap make_pl(std::vector<PLBreakpoint> points) {
  if (points.size() < 2) fail("InvalidParams", "a PL map needs at least two breakpoints");
  if (points.front().x != 0 || points.back().x != 1) {
    fail("InvalidParams", "breakpoints must span [0,1]");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].y < 0 || points[i].y > 1) {
      fail("InvalidParams", "breakpoint values must lie in [0,1]");
    }
    if (i > 0 && !(points[i - 1].x < points[i].x)) {
      fail("InvalidParams", "breakpoint positions must strictly increase");
    }
  }
  if (points.front().y != 0) fail("NotPointed", "a PL open map must send 0 to 0");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].y == points[i - 1].y) {
      fail("NotOpenMap", "constant segments are not open");
    }
  }

  // Merge collinear interior breakpoints so equality is structural.
  std::vector<PLBreakpoint> out;
  for (PLBreakpoint& p : points) {
    while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), p)) {
      out.pop_back();
    }
    out.push_back(std::move(p));
  }

  for (std::size_t i = 1; i + 1 < out.size(); ++i) {
    if (direction(out[i - 1], out[i]) != direction(out[i], out[i + 1]) &&
        !extreme(out[i].y)) {
      fail("NotOpenMap", "direction changes away from the interval ends");
    }
  }
  if (!extreme(out.back().y)) {
    fail("NotOpenMap", "the final lap must reach an end of the interval");
  }
  return PLOpenMap{std::move(out)};
}

PLOpenMap pl_identity() { return tent(1); }

PLOpenMap tent(int d) {
  if (d < 1) fail("InvalidParams", "tent maps need degree at least 1");
  std::vector<PLBreakpoint> pts;
  pts.reserve(d + 1);
  for (int i = 0; i <= d; ++i) {
    pts.push_back(PLBreakpoint{Rational(i, d), Rational(i % 2)});
  }
  return make_pl(std::move(pts));
}

int pl_degree(const PLOpenMap& f) {
  if (f.points.size() < 2) fail("InvalidParams", "not a PL map");
  int laps = 1;
  for (std::size_t i = 1; i + 1 < f.points.size(); ++i) {
    if (direction(f.points[i - 1], f.points[i]) !=
        direction(f.points[i], f.points[i + 1])) {
      ++laps;
    }
  }
  return laps;
}

Rational pl_eval(const PLOpenMap& f, const Rational& x) {
  if (x < 0 || x > 1) fail("InvalidParams", "evaluation point outside [0,1]");
  // Last breakpoint with position <= x.
  std::size_t lo = 0, hi = f.points.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi + 1) / 2;
    if (f.points[mid].x <= x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  const PLBreakpoint& a = f.points[lo];
  if (a.x == x) return a.y;
  const PLBreakpoint& b = f.points[lo + 1];
  return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

PLOpenMap pl_compose(const PLOpenMap& f_raw, const PLOpenMap& g_raw) {
  PLOpenMap f = make_pl(f_raw.points);
  PLOpenMap g = make_pl(g_raw.points);

  // Grid: g's breakpoints plus every g-preimage of an f-breakpoint, so the
  // composite is linear between consecutive grid points.
  std::vector<Rational> grid;
  for (const PLBreakpoint& p : g.points) grid.push_back(p.x);
  for (std::size_t i = 0; i + 1 < g.points.size(); ++i) {
    const PLBreakpoint& a = g.points[i];
    const PLBreakpoint& b = g.points[i + 1];
    Rational lo = std::min(a.y, b.y);
    Rational hi = std::max(a.y, b.y);
    for (const PLBreakpoint& q : f.points) {
      if (q.x > lo && q.x < hi) {
        grid.push_back(a.x + (q.x - a.y) * (b.x - a.x) / (b.y - a.y));
      }
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<PLBreakpoint> pts;
  pts.reserve(grid.size());
  for (const Rational& x : grid) {
    pts.push_back(PLBreakpoint{x, pl_eval(f, pl_eval(g, x))});
  }
  return make_pl(std::move(pts));
}

bool commute_check(int c, int d) {
  if (c < 1 || d < 1) fail("InvalidParams", "tent degrees must be at least 1");
  return pl_compose(tent(c), tent(d)) == pl_compose(tent(d), tent(c));
}

PLOpenMap lift(const Morphism& f_raw) {
  Morphism f = validate(f_raw.dom, f_raw.cod, f_raw.values);
  std::vector<int> u{0};
  for (int c : change_positions(f)) u.push_back(c);
  std::vector<PLBreakpoint> pts;
  pts.reserve(u.size());
  for (int i : u) {
    pts.push_back(PLBreakpoint{Rational(i, f.dom - 1), Rational(f.values[i], f.cod - 1)});
  }
  // A trailing plateau keeps the last change left of dom-1; the final sweep
  // still owns the whole tail, so its breakpoint lands at x = 1.
  pts.back().x = 1;
  return make_pl(std::move(pts));
}

Rational sup_distance(const PLOpenMap& f_raw, const PLOpenMap& g_raw) {
  PLOpenMap f = make_pl(f_raw.points);
  PLOpenMap g = make_pl(g_raw.points);
  std::vector<Rational> grid;
  for (const PLBreakpoint& p : f.points) grid.push_back(p.x);
  for (const PLBreakpoint& p : g.points) grid.push_back(p.x);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  Rational best = 0;
  for (const Rational& x : grid) {
    Rational d = pl_eval(f, x) - pl_eval(g, x);
    if (d < 0) d = -d;
    if (d > best) best = d;
  }
  return best;
}

}  // namespace knaster
