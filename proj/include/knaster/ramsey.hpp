// ramsey.hpp — finite Ramsey machinery: the epimorphism/injection
// correspondence, exhaustively certified Ramsey numbers for increasing
// injections, witness objects, monochromatic search, and the 2-adic coloring
// exhibiting an infinite Ramsey degree.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "knaster/fraisse.hpp"
#include "knaster/lingraph.hpp"

namespace knaster {

// An increasing injection [k] -> [n]: a strictly increasing k-tuple over
// {0..n-1}. There are C(n,k) of them.
struct IncreasingInjection {
  int k = 0;
  int n = 0;
  std::vector<int> values;

  friend bool operator==(const IncreasingInjection&, const IncreasingInjection&) = default;
};

// A d-coloring of a finite morphism set, stored as one color per element in
// the set's lexicographic enumeration order (enumerate_epi_of_degree for
// morphism sets).
struct Coloring {
  int d = 1;
  std::vector<int> assignment;
};

struct RamseyResult {
  bool known = false;
  int value = 0;  // the Ramsey number when known; otherwise the cap reached
};

struct WitnessResult {
  enum class Kind { Found, Vacuous, Unknown } kind = Kind::Unknown;
  AnnotatedObject c;  // meaningful only when kind == Found
};

struct MonoSearchResult {
  Morphism g;
  int color = 0;
};

struct InfiniteDegreeReport {
  int colors = 0;   // number of colors demanded (n of the coloring)
  int checked = 0;  // morphisms f examined
  bool all_colors_every_time = false;
};

// The change positions of f as an increasing injection of length
// degree(f)*(cod-1) into f's domain; injective on each Epi(C,A).
IncreasingInjection to_injection(const Morphism& f);

// The unique non-decreasing degree-1 morphism g: ⟦n⟧ -> ⟦m⟧ whose fiber over
// each j in 1..m-1 begins exactly at p(j) (p(0) is carried but not
// constrained). Errors: InvalidParams, Infeasible.
Morphism monotone_from_injection(const IncreasingInjection& p, int m, int n);

// Least n <= cap such that every d-coloring of the k-subsets of an n-set
// contains an m-subset all of whose k-subsets share a color. Exhaustive over
// colorings up to color permutation; answers beyond the cap — or beyond the
// internal exhaustive-search bound — are reported as not known.
RamseyResult ramsey_number(int k, int m, int d, int cap);

// The witness object for (A, B, d): C = (⟦R(r(k-1), m, d)⟧, weight of B)
// where r is the forced degree of B -> A. Vacuous when no morphism B -> A
// can exist (non-integer ratio or too few vertices); Unknown propagates from
// the Ramsey search.
WitnessResult witness(const AnnotatedObject& a, const AnnotatedObject& b, int d,
                      int cap);

// Finds g: C -> B (valid in the annotated category) such that every h: B -> A
// gives the same color to compose(h, g). The search follows the injection
// route (color the change sets, find a monochromatic m-subset, convert back)
// and falls back to direct enumeration of Epi(C,B). The coloring is indexed
// by the lexicographic enumeration of the forced-degree Epi(C,A).
// Errors: NoWitness when neither route succeeds.
MonoSearchResult find_monochromatic(const AnnotatedObject& c,
                                    const AnnotatedObject& b,
                                    const AnnotatedObject& a,
                                    const Coloring& coloring);

// 2-adic valuation. Error: InvalidParams on k = 0.
int rho(std::uint64_t k);

// rho(degree(f)) mod n; additive under composition because degrees multiply.
int degree_coloring(const Morphism& f, int n);

// For A = ⟦2⟧ and B the 2^(n+1)-vertex graph, checks that the coloring
// h -> rho(deg h) mod n attains all n colors on Epi(B,A)∘f — for f the
// identity when c equals B, plus `samples` sampled f in Epi(c, B). Per-degree
// canonical representatives stand in for all of Epi(B,A): every degree
// 1..|B|-1 occurs, and the color depends only on the degree.
// Errors: InvalidParams, NoMorphism (Epi(c,B) empty).
InfiniteDegreeReport infinite_degree_check(int n, const LinearGraph& c,
                                           int samples, std::mt19937_64& rng);

}  // namespace knaster
