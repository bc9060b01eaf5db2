// amalgam.cpp — the constructive amalgamation pipeline: normalize both maps,
// split into monotone pieces, merge parallel pieces pairwise along the block
// schedules, and glue the merged segments back into two morphisms with a
// common domain and equal composites.
#include "knaster/amalgam.hpp"

#include <algorithm>
#include <cstdlib>

#include "knaster/error.hpp"

namespace knaster {

namespace {

Morphism revalidate(const Morphism& f) { return validate(f.dom, f.cod, f.values); }

// Value span 0..M with the monotonicity and end values demanded by the class;
// returns M. Pieces are surjections in local coordinates, so the span stands
// in for the codomain.
int check_piece(const Piece& p) {
  if (p.values.size() < 2) fail("InvalidParams", "piece needs at least two vertices");
  int m = *std::max_element(p.values.begin(), p.values.end());
  int front = p.values.front();
  int back = p.values.back();
  bool inc = p.cls == SlopeClass::Inc;
  if ((inc && (front != 0 || back != m)) || (!inc && (front != m || back != 0))) {
    fail("InvalidParams", "piece does not run end to end");
  }
  for (std::size_t i = 1; i < p.values.size(); ++i) {
    int step = p.values[i] - p.values[i - 1];
    if (step < -1 || step > 1 || (inc ? step < 0 : step > 0)) {
      fail("InvalidParams", "piece is not a monotone unit-step string");
    }
  }
  return m;
}

// Core of the parallel merge for two non-decreasing pieces covering 0..m.
ParallelResult parallel_inc(const std::vector<int>& u, const std::vector<int>& v, int m) {
  // Position ranges of each value (contiguous because the strings are
  // monotone with unit steps starting at 0).
  auto ranges = [m](const std::vector<int>& s) {
    std::vector<std::pair<int, int>> r(m + 1, {-1, -1});
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
      if (r[s[i]].first < 0) r[s[i]].first = i;
      r[s[i]].second = i;
    }
    return r;
  };
  auto ru = ranges(u);
  auto rv = ranges(v);
  ParallelResult out;
  std::vector<int> ut, vt;
  for (int val = 0; val <= m; ++val) {
    int cu = ru[val].second - ru[val].first + 1;
    int cv = rv[val].second - rv[val].first + 1;
    int c = std::max(cu, cv);
    for (int j = 0; j < c; ++j) {
      out.merged.push_back(val);
      ut.push_back(std::min(ru[val].first + j, ru[val].second));
      vt.push_back(std::min(rv[val].first + j, rv[val].second));
    }
  }
  int total = static_cast<int>(out.merged.size());
  out.f_tilde = validate(total, static_cast<int>(u.size()), std::move(ut));
  out.g_tilde = validate(total, static_cast<int>(v.size()), std::move(vt));
  return out;
}

// End-clamp map: the identity up to t-1, then constant at t-1.
Morphism clamp_map(int s, int t) {
  std::vector<int> vals(s);
  for (int i = 0; i < s; ++i) vals[i] = std::min(i, t - 1);
  return validate(s, t, std::move(vals));
}

}  // namespace

SlopeClass piece_class(int signed_index) {
  if (signed_index == 0) fail("InvalidParams", "piece indices are nonzero");
  bool odd = std::abs(signed_index) % 2 == 1;
  return (signed_index > 0 ? odd : !odd) ? SlopeClass::Inc : SlopeClass::Dec;
}

const Piece& SlopeSplit::piece(int signed_index) const {
  if (signed_index == 0 || std::abs(signed_index) > piece_count()) {
    fail("InvalidParams", "signed piece index out of range");
  }
  return signed_index > 0 ? forward[signed_index - 1] : reversed[-signed_index - 1];
}

Morphism pad(const Morphism& f, int i, int j) {
  Morphism fv = revalidate(f);
  if (j < 0) fail("InvalidParams", "padding amount must be non-negative");
  if (i < 0 || i >= fv.dom) fail("VertexOutOfRange", "padded vertex outside the domain");
  std::vector<int> vals(fv.dom + j);
  for (int l = 0; l < fv.dom + j; ++l) {
    vals[l] = l < i ? l : (l <= i + j ? i : l - j);
  }
  return validate(fv.dom + j, fv.dom, std::move(vals));
}

StretchResult stretch(const Morphism& f, const std::vector<int>& mults) {
  Morphism fv = revalidate(f);
  if (static_cast<int>(mults.size()) != fv.dom) {
    fail("InvalidParams", "one multiplicity per domain vertex required");
  }
  long long total = 0;
  for (int m : mults) {
    if (m < 1) fail("ZeroMultiplicity", "multiplicities must be at least 1");
    total += m;
  }
  if (total > (1 << 30)) fail("CountOverflow", "stretched domain too large");
  std::vector<int> vals;
  vals.reserve(static_cast<std::size_t>(total));
  for (int i = 0; i < fv.dom; ++i) {
    vals.insert(vals.end(), mults[i], i);
  }
  StretchResult out;
  out.phi = validate(static_cast<int>(total), fv.dom, std::move(vals));
  out.stretched = compose(fv, out.phi);
  return out;
}

StretchResult normalize_condition_star(const Morphism& f) {
  Morphism fv = revalidate(f);
  FoldDecomposition fold = fold_decomposition(fv);
  std::vector<int> mults(fv.dom, 1);
  for (std::size_t j = 1; j + 1 < fold.turning_indices.size(); ++j) {
    mults[fold.turning_indices[j]] = 2;
  }
  return stretch(fv, mults);
}

ParallelResult amalgamate_parallel(const Piece& f, const Piece& g) {
  if (f.cls != g.cls) fail("MixedSlopes", "pieces must share a slope class");
  int mf = check_piece(f);
  int mg = check_piece(g);
  if (mf != mg) fail("CodomainMismatch", "pieces cover different value ranges");
  if (f.cls == SlopeClass::Inc) return parallel_inc(f.values, g.values, mf);
  // Decreasing pieces: merge the reversals, then flip the result back. If r
  // solves the reversed (increasing) problem, p -> len-1 - r(P-1-p) solves
  // the original one, and the merged string simply reverses.
  ParallelResult rev = parallel_inc(reverse_str(f.values), reverse_str(g.values), mf);
  int total = static_cast<int>(rev.merged.size());
  auto flip = [total](const Morphism& t) {
    std::vector<int> vals(total);
    for (int p = 0; p < total; ++p) vals[p] = (t.cod - 1) - t.values[total - 1 - p];
    return validate(total, t.cod, std::move(vals));
  };
  ParallelResult out;
  out.f_tilde = flip(rev.f_tilde);
  out.g_tilde = flip(rev.g_tilde);
  out.merged = reverse_str(std::move(rev.merged));
  return out;
}

ParallelResult amalgamate_parallel(const Morphism& f, const Morphism& g) {
  Morphism fv = revalidate(f);
  Morphism gv = revalidate(g);
  if (fv.cod != gv.cod) fail("CodomainMismatch", "morphisms must share a codomain");
  for (const Morphism* h : {&fv, &gv}) {
    if (!std::is_sorted(h->values.begin(), h->values.end())) {
      fail("InvalidParams", "whole-morphism merge requires monotone inputs");
    }
  }
  return amalgamate_parallel(Piece{SlopeClass::Inc, fv.values},
                             Piece{SlopeClass::Inc, gv.values});
}

SlopeSplit slope_split(const Morphism& fstar) {
  Morphism fv = revalidate(fstar);
  const std::vector<int>& vals = fv.values;
  int n = fv.dom;
  int top = fv.cod - 1;
  SlopeSplit out;
  out.codomain = fv.cod;
  int start = 0;
  bool inc = true;
  while (start < n) {
    int from = inc ? 0 : top;
    int target = inc ? top : 0;
    if (vals[start] != from) {
      fail("StarViolation", "interval does not start at the required end vertex");
    }
    int i = start;
    while (vals[i] != target) {
      if (i + 1 == n) fail("StarViolation", "interval never reaches the far end vertex");
      int step = vals[i + 1] - vals[i];
      if (inc ? step < 0 : step > 0) {
        fail("StarViolation", "counter-step inside a monotone interval");
      }
      ++i;
    }
    // A trailing plateau at the target belongs to this final interval.
    int end = i;
    bool rest_flat = true;
    for (int t = i + 1; t < n && rest_flat; ++t) rest_flat = vals[t] == target;
    if (rest_flat) end = n - 1;
    out.intervals.emplace_back(start, end);
    Piece fwd{inc ? SlopeClass::Inc : SlopeClass::Dec, restrict_str(vals, start, end)};
    Piece rev{inc ? SlopeClass::Dec : SlopeClass::Inc, reverse_str(fwd.values)};
    out.forward.push_back(std::move(fwd));
    out.reversed.push_back(std::move(rev));
    start = end + 1;
    inc = !inc;
  }
  return out;
}

BlockSchedule build_blocks(int l1, int l2) {
  if (l1 < 1 || l2 < 1) fail("InvalidParams", "block counts must be positive");
  BlockSchedule out;
  out.alpha.reserve(static_cast<std::size_t>(l1) * l2);
  out.beta.reserve(static_cast<std::size_t>(l1) * l2);
  for (int b = 1; b <= l2; ++b) {
    for (int s = 1; s <= l1; ++s) {
      out.alpha.push_back(b % 2 == 1 ? s : s - l1 - 1);
    }
  }
  for (int b = 1; b <= l1; ++b) {
    for (int s = 1; s <= l2; ++s) {
      out.beta.push_back(b % 2 == 1 ? s : s - l2 - 1);
    }
  }
  return out;
}

AmalgamResult amalgamate(const Morphism& f, const Morphism& g) {
  Morphism fv = revalidate(f);
  Morphism gv = revalidate(g);
  if (fv.cod != gv.cod) fail("CodomainMismatch", "amalgamation needs a common codomain");

  StretchResult nf = normalize_condition_star(fv);
  StretchResult ng = normalize_condition_star(gv);
  SlopeSplit sf = slope_split(nf.stretched);
  SlopeSplit sg = slope_split(ng.stretched);
  int l1 = sf.piece_count();
  int l2 = sg.piece_count();
  BlockSchedule blocks = build_blocks(l1, l2);

  AmalgamResult out;
  out.plan.alpha = blocks.alpha;
  out.plan.beta = blocks.beta;
  std::vector<int> glued_f;
  std::vector<int> glued_g;
  int offset = 0;
  for (std::size_t t = 0; t < blocks.alpha.size(); ++t) {
    int a = blocks.alpha[t];
    int b = blocks.beta[t];
    const Piece& pf = sf.piece(a);
    const Piece& pg = sg.piece(b);
    if (pf.cls != pg.cls) {
      fail("InternalError", "block schedule paired pieces of different classes");
    }
    ParallelResult merged = amalgamate_parallel(pf, pg);
    int p = static_cast<int>(merged.merged.size());
    // Glue the merged segment into global coordinates: positive indices run
    // the piece forwards from its interval's low end, negative indices run it
    // backwards from the high end. Consecutive segments then land one step
    // apart in the same direction, or on a duplicate vertex at a reversal, so
    // the concatenation is itself a valid zigzag.
    auto low_f = sf.intervals[std::abs(a) - 1];
    auto low_g = sg.intervals[std::abs(b) - 1];
    for (int x = 0; x < p; ++x) {
      int lf = merged.f_tilde.values[x];
      int lg = merged.g_tilde.values[x];
      glued_f.push_back(a > 0 ? low_f.first + lf : low_f.second - lf);
      glued_g.push_back(b > 0 ? low_g.first + lg : low_g.second - lg);
    }
    out.plan.piece_sizes.push_back(p);
    out.plan.segments.emplace_back(offset, offset + p - 1);
    offset += p;
  }
  out.plan.total = offset;

  Morphism f2 = validate(offset, nf.stretched.dom, std::move(glued_f));
  Morphism g2 = validate(offset, ng.stretched.dom, std::move(glued_g));
  out.f_prime = compose(nf.phi, f2);
  out.g_prime = compose(ng.phi, g2);
  if (compose(fv, out.f_prime) != compose(gv, out.g_prime)) {
    fail("InternalError", "amalgamation composites disagree");
  }
  return out;
}

JointProjection joint_project(const LinearGraph& a, const LinearGraph& b) {
  if (a.n < 2 || b.n < 2) fail("InvalidParams", "linear graphs need at least two vertices");
  JointProjection out;
  if (a.n >= b.n) {
    out.c = a;
    out.p_a = identity(a.n);
    out.p_b = clamp_map(a.n, b.n);
  } else {
    out.c = b;
    out.p_b = identity(b.n);
    out.p_a = clamp_map(b.n, a.n);
  }
  return out;
}

}  // namespace knaster
