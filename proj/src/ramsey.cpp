// ramsey.cpp — exhaustive Ramsey-number certification over canonical
// colorings, witness construction, and the injection-route monochromatic
// search.
#include "knaster/ramsey.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <optional>

#include "knaster/enumerate.hpp"
#include "knaster/error.hpp"

namespace knaster {

namespace {

Morphism revalidate(const Morphism& f) { return validate(f.dom, f.cod, f.values); }

// Lexicographic successor of an increasing k-tuple over {0..n-1}.
bool next_combination(std::vector<int>& s, int n) {
  int k = static_cast<int>(s.size());
  for (int i = k - 1; i >= 0; --i) {
    if (s[i] < n - k + i) {
      ++s[i];
      for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::vector<int>> all_combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  do {
    out.push_back(s);
  } while (next_combination(s, n));
  return out;
}

// C(n, k) clamped at `limit` (returns limit+1 past it) — only used to size
// search spaces, never as a reported count.
unsigned long long binom_clamped(int n, int k, unsigned long long limit) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned long long c = 1;
  for (int i = 1; i <= k; ++i) {
    unsigned __int128 next = static_cast<unsigned __int128>(c) * (n - k + i) / i;
    if (next > limit) return limit + 1;
    c = static_cast<unsigned long long>(next);
  }
  return c;
}

// True iff every d-coloring of the k-subsets of {0..n-1} admits an m-subset
// all of whose k-subsets share a color; nullopt when the coloring space is
// too large to sweep exhaustively. Colorings are enumerated up to color
// permutation (first subset colored 0, each later color at most one above the
// running maximum); monochromaticity is permutation-invariant, so this loses
// nothing.
std::optional<bool> every_coloring_admits(int n, int k, int m, int d) {
  if (d == 1) return true;  // everything is monochromatic

  constexpr unsigned long long kLeafBound = 1ull << 26;
  unsigned long long total = binom_clamped(n, k, 64);
  if (total > 64) return std::nullopt;
  unsigned long long leaves = 1;
  for (unsigned long long i = 1; i < total; ++i) {
    leaves *= static_cast<unsigned long long>(d);
    if (leaves > kLeafBound) return std::nullopt;
  }
  if (binom_clamped(n, m, 1u << 20) > (1u << 20)) return std::nullopt;

  std::vector<std::vector<int>> ksubs = all_combinations(n, k);
  std::map<std::vector<int>, int> rank;
  for (int i = 0; i < static_cast<int>(ksubs.size()); ++i) rank[ksubs[i]] = i;

  // For each m-subset, the ranks of all its k-subsets.
  std::vector<std::vector<int>> groups;
  std::vector<std::vector<int>> inner = all_combinations(m, k);
  for (const std::vector<int>& big : all_combinations(n, m)) {
    std::vector<int> g;
    g.reserve(inner.size());
    std::vector<int> img(k);
    for (const std::vector<int>& s : inner) {
      for (int t = 0; t < k; ++t) img[t] = big[s[t]];
      g.push_back(rank.at(img));
    }
    groups.push_back(std::move(g));
  }

  std::vector<int> color(ksubs.size(), 0);
  auto admits = [&]() {
    for (const std::vector<int>& g : groups) {
      int c0 = color[g[0]];
      bool mono = true;
      for (int r : g) {
        if (color[r] != c0) {
          mono = false;
          break;
        }
      }
      if (mono) return true;
    }
    return false;
  };
  bool all_good = true;
  std::function<void(int, int)> rec = [&](int pos, int used) {
    if (!all_good) return;
    if (pos == static_cast<int>(color.size())) {
      if (!admits()) all_good = false;
      return;
    }
    int hi = std::min(d - 1, used);
    for (int c = 0; c <= hi && all_good; ++c) {
      color[pos] = c;
      rec(pos + 1, std::max(used, c + 1));
    }
  };
  rec(0, 0);
  return all_good;
}

void check_annotated(const AnnotatedObject& x) {
  if (x.graph.n < 2) fail("InvalidParams", "annotated graph needs two vertices");
  if (x.weight <= 0) fail("InvalidParams", "weights must be positive");
}

// Forced degree of annotated morphisms X -> Y: weight(X)/weight(Y) when that
// is a positive integer of tractable size, -1 otherwise (empty morphism set).
long long forced_degree(const AnnotatedObject& x, const AnnotatedObject& y) {
  Rational r = x.weight / y.weight;
  if (denominator(r) != 1 || numerator(r) < 1 || numerator(r) > 1'000'000) return -1;
  return static_cast<long long>(numerator(r));
}

}  // namespace

IncreasingInjection to_injection(const Morphism& f) {
  Morphism fv = revalidate(f);
  IncreasingInjection out;
  out.values = change_positions(fv);
  out.k = static_cast<int>(out.values.size());
  out.n = fv.dom;
  return out;
}

Morphism monotone_from_injection(const IncreasingInjection& p, int m, int n) {
  if (static_cast<int>(p.values.size()) != m || p.n != n || m < 2 || n < m) {
    fail("InvalidParams", "injection shape does not match [m] -> [n]");
  }
  int prev = -1;
  for (int v : p.values) {
    if (v <= prev || v >= n) fail("InvalidParams", "injection must strictly increase below n");
    prev = v;
  }
  if (p.values[1] == 0) fail("Infeasible", "fiber of vertex 1 cannot begin at 0");
  std::vector<int> vals(n, 0);
  for (int i = 0; i < n; ++i) {
    int v = 0;
    for (int j = 1; j < m; ++j) {
      if (p.values[j] <= i) v = j;
    }
    vals[i] = v;
  }
  return validate(n, m, std::move(vals));
}

RamseyResult ramsey_number(int k, int m, int d, int cap) {
  if (k < 1 || m < k) fail("InvalidParams", "need 1 <= k <= m");
  if (d < 1) fail("InvalidParams", "need at least one color");
  if (cap < 0) fail("InvalidParams", "cap must be non-negative");
  for (int n = m; n <= cap; ++n) {
    std::optional<bool> good = every_coloring_admits(n, k, m, d);
    if (!good.has_value()) return RamseyResult{false, n};
    if (*good) return RamseyResult{true, n};
  }
  return RamseyResult{false, cap};
}

WitnessResult witness(const AnnotatedObject& a, const AnnotatedObject& b, int d,
                      int cap) {
  check_annotated(a);
  check_annotated(b);
  if (d < 1) fail("InvalidParams", "need at least one color");
  WitnessResult out;
  Rational ratio = b.weight / a.weight;
  if (denominator(ratio) != 1) {
    out.kind = WitnessResult::Kind::Vacuous;
    return out;
  }
  BigInt changes = numerator(ratio) * (a.graph.n - 1);
  if (changes > b.graph.n - 1) {
    // No morphism B -> A can exist, so the Ramsey statement holds vacuously.
    out.kind = WitnessResult::Kind::Vacuous;
    return out;
  }
  RamseyResult rn = ramsey_number(static_cast<int>(changes), b.graph.n, d, cap);
  if (!rn.known) {
    out.kind = WitnessResult::Kind::Unknown;
    return out;
  }
  out.kind = WitnessResult::Kind::Found;
  out.c = AnnotatedObject{LinearGraph{rn.value}, b.weight};
  return out;
}

MonoSearchResult find_monochromatic(const AnnotatedObject& c,
                                    const AnnotatedObject& b,
                                    const AnnotatedObject& a,
                                    const Coloring& coloring) {
  check_annotated(c);
  check_annotated(b);
  check_annotated(a);
  if (coloring.d < 1) fail("InvalidParams", "need at least one color");

  long long r_ca = forced_degree(c, a);
  std::vector<Morphism> epis_ca =
      r_ca < 0 ? std::vector<Morphism>{}
               : enumerate_epi_of_degree(c.graph, a.graph, static_cast<int>(r_ca));
  if (coloring.assignment.size() != epis_ca.size()) {
    fail("InvalidParams", "coloring must assign exactly one color per morphism");
  }
  for (int col : coloring.assignment) {
    if (col < 0 || col >= coloring.d) fail("InvalidParams", "color out of range");
  }

  std::map<std::vector<int>, int> index_of_changes;
  for (int i = 0; i < static_cast<int>(epis_ca.size()); ++i) {
    index_of_changes[change_positions(epis_ca[i])] = i;
  }

  long long r_cb = forced_degree(c, b);
  long long r_ba = forced_degree(b, a);
  std::vector<Morphism> epis_ba =
      r_ba < 0 ? std::vector<Morphism>{}
               : enumerate_epi_of_degree(b.graph, a.graph, static_cast<int>(r_ba));

  // The common color of Epi(B,A)∘g, or nothing if colors differ.
  auto common_color = [&](const Morphism& g) -> std::optional<int> {
    int common = -1;
    for (const Morphism& h : epis_ba) {
      auto it = index_of_changes.find(change_positions(compose(h, g)));
      if (it == index_of_changes.end()) return std::nullopt;
      int col = coloring.assignment[it->second];
      if (common == -1) common = col;
      if (common != col) return std::nullopt;
    }
    return common == -1 ? 0 : common;
  };

  // Injection route: color the change sets, look for an m-subset of the
  // domain all of whose realizable k'-subsets share a color, read the
  // monotone morphism back off. Composing with a degree-1 monotone map keeps
  // annotated validity only when the forced degree C -> B is 1.
  long long kk = r_ca < 0 ? -1 : r_ca * (a.graph.n - 1);
  if (r_cb == 1 && r_ba >= 1 && kk >= 1 && kk < b.graph.n) {
    int n = c.graph.n;
    int m = b.graph.n;
    auto color_of_subset = [&](const std::vector<int>& s) {
      // Subsets containing 0 are never change sets; their color is immaterial.
      if (s.front() == 0) return 0;
      return coloring.assignment[index_of_changes.at(s)];
    };
    std::vector<std::vector<int>> inner = all_combinations(m, static_cast<int>(kk));
    std::vector<int> big(m);
    for (int i = 0; i < m; ++i) big[i] = i;
    do {
      int first = -1;
      bool mono = true;
      std::vector<int> img(static_cast<std::size_t>(kk));
      for (const std::vector<int>& s : inner) {
        for (std::size_t t = 0; t < img.size(); ++t) img[t] = big[s[t]];
        int col = color_of_subset(img);
        if (first == -1) first = col;
        if (col != first) {
          mono = false;
          break;
        }
      }
      if (mono) {
        IncreasingInjection p{m, n, big};
        Morphism g = monotone_from_injection(p, m, n);
        if (std::optional<int> col = common_color(g)) {
          return MonoSearchResult{std::move(g), *col};
        }
      }
    } while (next_combination(big, n));
  }

  // Direct route: walk Epi(C,B) and test each candidate.
  if (r_cb >= 1) {
    for (Morphism& g :
         enumerate_epi_of_degree(c.graph, b.graph, static_cast<int>(r_cb))) {
      if (std::optional<int> col = common_color(g)) {
        return MonoSearchResult{std::move(g), *col};
      }
    }
  }
  fail("NoWitness", "no morphism makes the composed coloring constant");
}

int rho(std::uint64_t k) {
  if (k == 0) fail("InvalidParams", "2-adic valuation of 0 is undefined");
  return std::countr_zero(k);
}

int degree_coloring(const Morphism& f, int n) {
  if (n < 1) fail("InvalidParams", "need at least one color");
  return rho(static_cast<std::uint64_t>(degree(revalidate(f)))) % n;
}

InfiniteDegreeReport infinite_degree_check(int n, const LinearGraph& c,
                                           int samples, std::mt19937_64& rng) {
  if (n < 1) fail("InvalidParams", "need at least one color");
  if (n > 20) fail("InvalidParams", "construction graph 2^(n+1) too large");
  if (samples < 0) fail("InvalidParams", "sample count must be non-negative");
  int bn = 1 << (n + 1);
  if (c.n < bn) fail("NoMorphism", "domain too small to cover the construction graph");

  InfiniteDegreeReport rep;
  rep.colors = n;
  rep.all_colors_every_time = true;
  // One canonical morphism per degree stands in for all of Epi(B, ⟦2⟧): every
  // degree 1..bn-1 occurs there and the color depends only on the degree.
  auto check = [&](const Morphism& f) {
    std::vector<char> seen(n, 0);
    int distinct = 0;
    for (int deg = 1; deg < bn && distinct < n; ++deg) {
      std::vector<int> changes(deg);
      for (int i = 0; i < deg; ++i) changes[i] = i + 1;
      Morphism h = epi_from_changes(bn, 2, changes);
      int col = degree_coloring(compose(h, f), n);
      if (!seen[col]) {
        seen[col] = 1;
        ++distinct;
      }
    }
    ++rep.checked;
    if (distinct < n) rep.all_colors_every_time = false;
  };

  if (c.n == bn) check(identity(bn));
  for (int s = 0; s < samples; ++s) check(sample_epi(c, LinearGraph{bn}, rng));
  return rep;
}

}  // namespace knaster
