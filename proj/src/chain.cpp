// chain.cpp — uniform chain construction and exact certification of the
// fineness, refinement, and separation conditions, with an integer-scaled
// fast path for towers whose endpoints share a modest common denominator.
#include "knaster/chain.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>

#include "knaster/error.hpp"

namespace knaster {

namespace {

constexpr std::int64_t kMaxLinks = 50'000'000;

// ---------------------------------------------------------------------------
// Geometry of one (map, fine chain, coarse chain) triple over a scalar V.
// V = Rational evaluates everything directly; V = int64_t assumes every
// quantity was pre-multiplied by a common denominator and the map's slopes
// are integers, with products widened through __int128.

template <class V>
bool below_after_scaling(const V& diff, int factor, const V& eps) {
  if constexpr (std::is_same_v<V, std::int64_t>) {
    return static_cast<__int128>(diff) * factor < static_cast<__int128>(eps);
  } else {
    return diff * factor < eps;
  }
}

template <class V>
struct Geo {
  std::vector<V> fx, fy, slope;  // the PL map's breakpoints and slopes
  std::vector<V> flo, fhi;       // fine links
  std::vector<V> clo, chi;       // coarse links
  V one{};
  V eps{};                       // the coarse chain's epsilon

  V eval(const V& x) const {
    std::size_t lo = 0, hi = fx.size() - 1;
    while (lo < hi) {
      std::size_t mid = (lo + hi + 1) / 2;
      if (fx[mid] <= x) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    if (fx[lo] == x) return fy[lo];
    if constexpr (std::is_same_v<V, std::int64_t>) {
      __int128 dy = static_cast<__int128>(slope[lo]) * (x - fx[lo]);
      return fy[lo] + static_cast<std::int64_t>(dy);
    } else {
      return fy[lo] + slope[lo] * (x - fx[lo]);
    }
  }

  // min / max of the map over the closed interval [a, b].
  void image(const V& a, const V& b, V& m, V& big) const {
    m = eval(a);
    big = m;
    V vb = eval(b);
    if (vb < m) m = vb;
    if (vb > big) big = vb;
    auto it = std::upper_bound(fx.begin(), fx.end(), a);
    for (; it != fx.end() && *it < b; ++it) {
      const V& v = fy[static_cast<std::size_t>(it - fx.begin())];
      if (v < m) m = v;
      if (v > big) big = v;
    }
  }

  // Containment of [m, M] in coarse link i, relatively open at 0 and 1.
  bool contains(std::size_t i, const V& m, const V& big) const {
    bool lo_ok = clo[i] == V(0) ? !(m < V(0)) : clo[i] < m;
    bool hi_ok = chi[i] == one ? !(one < big) : big < chi[i];
    return lo_ok && hi_ok;
  }

  // Range [cmin, cmax] of coarse links containing [m, M]; {-1, -1} if none.
  // For a validated chain at most the two links around the insertion point
  // can contain the interval.
  std::pair<int, int> containing(const V& m, const V& big) const {
    std::size_t lo = 0, hi = clo.size() - 1;
    while (lo < hi) {
      std::size_t mid = (lo + hi + 1) / 2;
      if (clo[mid] <= m) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    int cmin = -1, cmax = -1;
    for (std::size_t i = lo == 0 ? 0 : lo - 1; i <= lo; ++i) {
      if (contains(i, m, big)) {
        if (cmin < 0) cmin = static_cast<int>(i);
        cmax = static_cast<int>(i);
      }
    }
    return {cmin, cmax};
  }
};

const BigInt& scale_limit() {
  static const BigInt limit = BigInt(1) << 62;
  return limit;
}

bool absorb_den(BigInt& s, const Rational& q) {
  s = boost::multiprecision::lcm(s, BigInt(denominator(q)));
  return s <= scale_limit();
}

std::int64_t scaled_of(const Rational& q, const BigInt& s) {
  BigInt v = BigInt(numerator(q)) * (s / BigInt(denominator(q)));
  return v.convert_to<std::int64_t>();
}

bool build_fast(const PLOpenMap& t, const Chain& fine, const Chain& coarse,
                Geo<std::int64_t>& geo) {
  BigInt s = 1;
  for (const PLBreakpoint& p : t.points) {
    if (!absorb_den(s, p.x) || !absorb_den(s, p.y)) return false;
  }
  for (const ChainLink& l : fine.links) {
    if (!absorb_den(s, l.lo) || !absorb_den(s, l.hi)) return false;
  }
  for (const ChainLink& l : coarse.links) {
    if (!absorb_den(s, l.lo) || !absorb_den(s, l.hi)) return false;
  }
  if (!absorb_den(s, coarse.epsilon)) return false;

  for (std::size_t i = 0; i + 1 < t.points.size(); ++i) {
    Rational sl = (t.points[i + 1].y - t.points[i].y) /
                  (t.points[i + 1].x - t.points[i].x);
    if (denominator(sl) != 1) return false;  // non-integer slope: exact path
    BigInt num = numerator(sl);
    if (num > scale_limit() || -num > scale_limit()) return false;
    geo.slope.push_back(num.convert_to<std::int64_t>());
  }
  geo.one = scaled_of(Rational(1), s);
  geo.eps = scaled_of(coarse.epsilon, s);
  geo.fx.reserve(t.points.size());
  geo.fy.reserve(t.points.size());
  for (const PLBreakpoint& p : t.points) {
    geo.fx.push_back(scaled_of(p.x, s));
    geo.fy.push_back(scaled_of(p.y, s));
  }
  geo.flo.reserve(fine.links.size());
  geo.fhi.reserve(fine.links.size());
  for (const ChainLink& l : fine.links) {
    geo.flo.push_back(scaled_of(l.lo, s));
    geo.fhi.push_back(scaled_of(l.hi, s));
  }
  geo.clo.reserve(coarse.links.size());
  geo.chi.reserve(coarse.links.size());
  for (const ChainLink& l : coarse.links) {
    geo.clo.push_back(scaled_of(l.lo, s));
    geo.chi.push_back(scaled_of(l.hi, s));
  }
  return true;
}

void build_exact(const PLOpenMap& t, const Chain& fine, const Chain& coarse,
                 Geo<Rational>& geo) {
  geo.one = 1;
  geo.eps = coarse.epsilon;
  for (const PLBreakpoint& p : t.points) {
    geo.fx.push_back(p.x);
    geo.fy.push_back(p.y);
  }
  for (std::size_t i = 0; i + 1 < t.points.size(); ++i) {
    geo.slope.push_back((t.points[i + 1].y - t.points[i].y) /
                        (t.points[i + 1].x - t.points[i].x));
  }
  for (const ChainLink& l : fine.links) {
    geo.flo.push_back(l.lo);
    geo.fhi.push_back(l.hi);
  }
  for (const ChainLink& l : coarse.links) {
    geo.clo.push_back(l.lo);
    geo.chi.push_back(l.hi);
  }
}

// Parallel per-fine-link sweep: checks the diameter bounds, records the range
// of containing coarse links, and marks coverage. The earliest failing link
// wins so the outcome is independent of the worker count.
template <class V>
void run_sweep(const Geo<V>& geo, int deg, int jobs,
               std::vector<std::int32_t>& cmin, std::vector<std::int32_t>& cmax,
               std::vector<char>& covered, long long& bad_k, std::string& problem) {
  std::size_t nf = geo.flo.size();
  std::size_t workers = std::max<std::size_t>(
      1, std::min<std::size_t>(static_cast<std::size_t>(jobs), nf));
  std::vector<long long> bad(workers, -1);
  std::vector<std::string> msg(workers);
  std::vector<std::vector<char>> cov(workers,
                                     std::vector<char>(covered.size(), 0));

  auto work = [&](std::size_t w, std::size_t k0, std::size_t k1) {
    for (std::size_t k = k0; k < k1; ++k) {
      const V& a = geo.flo[k];
      const V& b = geo.fhi[k];
      if (!below_after_scaling<V>(b - a, 6 * deg, geo.eps)) {
        bad[w] = static_cast<long long>(k);
        msg[w] = "fine link diameter reaches epsilon/(6*degree)";
        return;
      }
      V m, big;
      geo.image(a, b, m, big);
      if (!below_after_scaling<V>(big - m, 3, geo.eps)) {
        bad[w] = static_cast<long long>(k);
        msg[w] = "image diameter of a closed fine link reaches epsilon/3";
        return;
      }
      auto [lo, hi] = geo.containing(m, big);
      cmin[k] = lo;
      cmax[k] = hi;
      if (lo < 0) {
        bad[w] = static_cast<long long>(k);
        msg[w] = "image of a closed fine link fits in no coarse link";
        return;
      }
      for (int i = lo; i <= hi; ++i) cov[w][static_cast<std::size_t>(i)] = 1;
    }
  };

  if (workers == 1) {
    work(0, 0, nf);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) {
      pool.emplace_back(work, w, nf * w / workers, nf * (w + 1) / workers);
    }
    work(0, 0, nf / workers);
    for (std::thread& th : pool) th.join();
  }

  for (std::size_t w = 0; w < workers; ++w) {
    if (bad[w] >= 0 && (bad_k < 0 || bad[w] < bad_k)) {
      bad_k = bad[w];
      problem = msg[w];
    }
    for (std::size_t i = 0; i < covered.size(); ++i) {
      if (cov[w][i]) covered[i] = 1;
    }
  }
}

// Cross-level certification for one adjacent pair of chains.
void check_pair(const PLOpenMap& tmap, const Chain& fine, const Chain& coarse,
                std::size_t level, int deg, int jobs) {
  std::size_t nf = fine.links.size();
  std::vector<std::int32_t> cmin(nf, -1), cmax(nf, -1);
  std::vector<char> covered(coarse.links.size(), 0);
  long long bad_k = -1;
  std::string problem;

  Geo<std::int64_t> fast;
  if (build_fast(tmap, fine, coarse, fast)) {
    run_sweep(fast, deg, jobs, cmin, cmax, covered, bad_k, problem);
  } else {
    Geo<Rational> exact;
    build_exact(tmap, fine, coarse, exact);
    run_sweep(exact, deg, jobs, cmin, cmax, covered, bad_k, problem);
  }

  std::string where = " (levels " + std::to_string(level) + " -> " +
                      std::to_string(level + 1) + ")";
  if (bad_k >= 0) {
    fail("TowerInvalid",
         problem + " at fine link " + std::to_string(bad_k) + where);
  }
  for (std::size_t i = 0; i < covered.size(); ++i) {
    if (!covered[i]) {
      fail("TowerInvalid", "coarse link " + std::to_string(i) +
                               " receives no fine link" + where);
    }
  }
  // Separation: fine links at distance <= 2 must land in coarse links at
  // distance <= 1, whichever containing links are chosen.
  for (std::size_t k = 0; k < nf; ++k) {
    for (std::size_t l = k + 1; l <= k + 2 && l < nf; ++l) {
      if (cmax[k] - cmin[l] > 1 || cmax[l] - cmin[k] > 1) {
        fail("TowerInvalid",
             "fine links " + std::to_string(k) + " and " + std::to_string(l) +
                 " map into separated coarse links" + where);
      }
    }
  }
}

}  // namespace

Chain fine_chain(int p, const Rational& overlap) {
  if (p < 2) fail("InvalidParams", "a chain needs at least two links");
  if (!(overlap > 0)) fail("InvalidParams", "overlap fraction must be positive");
  if (!(overlap < Rational(1, 4))) {
    fail("OverlapTooLarge", "overlap fraction must stay below 1/4");
  }
  Rational ell = Rational(1) / (Rational(p) - Rational(p - 1) * overlap);
  Rational step = (Rational(1) - overlap) * ell;
  Chain c;
  c.epsilon = overlap * ell / 2;
  c.links.reserve(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) {
    Rational lo = Rational(i) * step;
    c.links.push_back(ChainLink{lo, lo + ell});
  }
  if (c.links.back().hi != 1) {
    fail("InternalError", "uniform chain construction must end exactly at 1");
  }
  return c;
}

Rational chain_mesh(const Chain& c) {
  if (c.links.empty()) fail("InvalidParams", "empty chain has no mesh");
  Rational best = 0;
  for (const ChainLink& l : c.links) {
    Rational d = l.hi - l.lo;
    if (d > best) best = d;
  }
  return best;
}

void validate_chain(const Chain& c) {
  const std::vector<ChainLink>& links = c.links;
  std::size_t p = links.size();
  if (p == 0) fail("ChainInvalid", "a chain needs at least one link");
  if (!(c.epsilon > 0)) fail("ChainInvalid", "epsilon must be positive");
  for (const ChainLink& l : links) {
    if (!(l.lo < l.hi)) fail("ChainInvalid", "each link must be a nonempty interval");
    if (l.lo < 0 || l.hi > 1) fail("ChainInvalid", "links must lie inside [0,1]");
  }
  if (links.front().lo != 0) fail("ChainInvalid", "0 must lie in the first link");
  if (links.back().hi != 1) fail("ChainInvalid", "1 must lie in the last link");
  for (std::size_t i = 0; i + 1 < p; ++i) {
    if (!(links[i].lo < links[i + 1].lo) || !(links[i].hi < links[i + 1].hi)) {
      fail("ChainInvalid", "links must be strictly ordered");
    }
    if (!(links[i + 1].lo < links[i].hi)) {
      fail("ChainInvalid", "consecutive links must overlap");
    }
    if (!(c.epsilon <= links[i].hi - links[i + 1].lo)) {
      fail("ChainInvalid",
           "epsilon exceeds a consecutive overlap, breaking the Lebesgue condition");
    }
  }
  for (std::size_t i = 0; i + 2 < p; ++i) {
    if (!(links[i].hi <= links[i + 2].lo)) {
      fail("ChainInvalid", "non-consecutive links must be disjoint");
    }
    if (!(links[i + 2].lo - links[i].hi > c.epsilon)) {
      fail("ChainInvalid", "non-adjacent links must be more than epsilon apart");
    }
  }
  if (p >= 2) {
    // A point epsilon-far from every other link: the ends of [0,1] work for
    // the outer links, the core midpoint for interior ones.
    if (!(links[1].lo > c.epsilon)) {
      fail("ChainInvalid", "the first link has no epsilon-deep point");
    }
    if (!(Rational(1) - links[p - 2].hi > c.epsilon)) {
      fail("ChainInvalid", "the last link has no epsilon-deep point");
    }
    for (std::size_t i = 1; i + 1 < p; ++i) {
      Rational gap = links[i + 1].lo - links[i - 1].hi;
      Rational mid = (links[i + 1].lo + links[i - 1].hi) / 2;
      if (!(gap > 2 * c.epsilon) || !(links[i].lo < mid) || !(mid < links[i].hi)) {
        fail("ChainInvalid", "an interior link has no epsilon-deep point");
      }
    }
  }
}

ChainTower chain_tower(const std::vector<int>& degrees, int levels) {
  if (levels < 1) fail("InvalidParams", "towers need at least one level");
  if (static_cast<int>(degrees.size()) < levels - 1) {
    fail("InvalidParams", "need a tent degree for every adjacent level pair");
  }
  for (int i = 0; i + 1 < levels; ++i) {
    if (degrees[static_cast<std::size_t>(i)] < 1) {
      fail("InvalidParams", "tent degrees must be at least 1");
    }
  }
  const Rational omega(6, 25);
  ChainTower t;
  t.chains.push_back(fine_chain(2, omega));
  for (int lvl = 1; lvl < levels; ++lvl) {
    int d = degrees[static_cast<std::size_t>(lvl - 1)];
    const Chain& prev = t.chains.back();
    Rational bound = std::min(Rational(1, lvl), Rational(prev.epsilon / (6 * d)));
    // Link length 1/(p - (p-1)*omega) drops below `bound` exactly when
    // p > (1/bound - omega)/(1 - omega).
    Rational q = (Rational(1) / bound - omega) / (Rational(1) - omega);
    BigInt needed = numerator(q) / denominator(q) + 1;
    if (needed < 2) needed = 2;
    if (needed > kMaxLinks) {
      fail("BudgetExhausted", "a level would need more than 50 million links");
    }
    Chain next = fine_chain(needed.convert_to<int>(), omega);
    if (!(chain_mesh(next) < bound)) {
      fail("InternalError", "constructed level misses its diameter bound");
    }
    t.chains.push_back(std::move(next));
    t.tent_degrees.push_back(d);
  }
  return t;
}

void validate_tower(const ChainTower& t, int jobs) {
  if (t.chains.empty()) fail("InvalidParams", "towers need at least one level");
  if (t.tent_degrees.size() + 1 != t.chains.size()) {
    fail("InvalidParams", "towers need exactly one tent degree per adjacent level pair");
  }
  if (jobs < 1) fail("InvalidParams", "jobs must be at least 1");
  for (std::size_t n = 0; n < t.chains.size(); ++n) {
    if (static_cast<std::int64_t>(t.chains[n].links.size()) > kMaxLinks) {
      fail("BudgetExhausted", "more than 50 million links in one chain");
    }
    validate_chain(t.chains[n]);
    if (n >= 1 && !(chain_mesh(t.chains[n]) < Rational(1, static_cast<int>(n)))) {
      fail("TowerInvalid",
           "mesh of level " + std::to_string(n) + " is not below 1/" + std::to_string(n));
    }
  }
  for (std::size_t n = 0; n + 1 < t.chains.size(); ++n) {
    int d = t.tent_degrees[n];
    if (d < 1) fail("InvalidParams", "tent degrees must be at least 1");
    check_pair(tent(d), t.chains[n + 1], t.chains[n], n, d, jobs);
  }
}

Morphism discretize(const PLOpenMap& t_raw, const Chain& fine, const Chain& coarse) {
  PLOpenMap t = make_pl(t_raw.points);
  validate_chain(fine);
  validate_chain(coarse);
  std::size_t nf = fine.links.size();
  if (nf < 2 || coarse.links.size() < 2) {
    fail("InvalidParams", "chains need at least two links to induce a morphism");
  }
  if (static_cast<std::int64_t>(nf) > kMaxLinks) {
    fail("BudgetExhausted", "more than 50 million links in one chain");
  }

  std::vector<int> vals(nf, -1);
  auto run = [&](const auto& geo) {
    using V = std::decay_t<decltype(geo.one)>;
    for (std::size_t k = 0; k < nf; ++k) {
      V m, big;
      geo.image(geo.flo[k], geo.fhi[k], m, big);
      auto [lo, hi] = geo.containing(m, big);
      (void)hi;
      if (lo < 0) {
        fail("NoContainingLink",
             "image of closed fine link " + std::to_string(k) +
                 " fits in no coarse link");
      }
      vals[k] = lo;
    }
  };
  Geo<std::int64_t> fast;
  if (build_fast(t, fine, coarse, fast)) {
    run(fast);
  } else {
    Geo<Rational> exact;
    build_exact(t, fine, coarse, exact);
    run(exact);
  }
  return validate(static_cast<int>(nf), static_cast<int>(coarse.links.size()),
                  std::move(vals));
}

}  // namespace knaster
