// enumerate.cpp — generation, counting, and exact uniform sampling of
// epimorphisms via the change-position encoding.
#include "knaster/enumerate.hpp"

#include <cstdint>
#include <limits>

#include "knaster/error.hpp"

namespace knaster {

namespace {

// C(n, k) as uint64, throwing CountOverflow if the value does not fit.
// Intermediate products are taken in 128 bits; the running value after step i
// is C(n-k+i, i), which never exceeds the final binomial, so the overflow
// check cannot fire spuriously.
std::uint64_t binom_checked(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (c > std::numeric_limits<std::uint64_t>::max()) {
      fail("CountOverflow", "binomial coefficient exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(c);
}

void check_objects(const LinearGraph& dom, const LinearGraph& cod) {
  if (dom.n < 2 || cod.n < 2) {
    fail("InvalidParams", "linear graphs need at least two vertices");
  }
}

// Depth-first generation of value strings in lexicographic order.
//
// A valid value string is a reflecting walk: it starts at 0, each strict
// change moves one step in the current direction, and the direction flips
// exactly at the end vertices. The walk shape is therefore forced; the only
// freedom is the set of positions at which a change happens, and the string
// is valid iff the number of changes is a positive multiple of cod-1 (that is
// precisely when the walk ends at an end vertex having completed >= 1 sweep).
struct Dfs {
  int n;                       // domain size
  int m;                       // codomain size
  long long want;              // exact change count required, or -1 for "any"
  std::size_t limit;           // stop after this many emissions
  std::vector<int> vals;
  std::vector<Morphism>* out;

  // Fewest further changes that can complete a valid string from this state.
  // dist is the distance to the current sweep's target end vertex; at a
  // freshly reached end vertex (dist == m-1) with used > 0 the walk may also
  // simply stop, so the requirement drops to 0.
  bool feasible(int v, int dir, long long used, int rem) const {
    int dist = dir > 0 ? (m - 1) - v : v;
    if (want >= 0) {
      long long left = want - used;
      return left >= 0 && left <= rem;
    }
    int minimal = used == 0 ? dist : dist % (m - 1);
    return minimal <= rem;
  }

  void run(int i, int v, int dir, long long used) {
    if (out->size() >= limit) return;
    if (i == n - 1) {
      out->push_back(Morphism{n, m, vals});
      return;
    }
    int rem = n - 2 - i;  // positions still open after i+1
    int w = v + dir;
    int ndir = dir;
    if (w == m - 1) ndir = -1;
    if (w == 0) ndir = +1;
    // Visit candidate values for position i+1 in ascending order so the
    // emitted strings come out lexicographically sorted.
    if (dir < 0 && feasible(w, ndir, used + 1, rem)) {
      vals[i + 1] = w;
      run(i + 1, w, ndir, used + 1);
    }
    if (feasible(v, dir, used, rem)) {
      vals[i + 1] = v;
      run(i + 1, v, dir, used);
    }
    if (dir > 0 && feasible(w, ndir, used + 1, rem)) {
      vals[i + 1] = w;
      run(i + 1, w, ndir, used + 1);
    }
  }
};

std::vector<Morphism> enumerate_impl(const LinearGraph& dom, const LinearGraph& cod,
                                     long long want_changes, std::size_t limit) {
  check_objects(dom, cod);
  std::vector<Morphism> out;
  Dfs dfs{dom.n, cod.n, want_changes, limit, std::vector<int>(dom.n, 0), &out};
  dfs.run(0, 0, +1, 0);
  return out;
}

// Lexicographic unranking of the k-subsets of {1..N}.
std::vector<int> unrank_subset(int N, int k, std::uint64_t rank) {
  std::vector<int> out;
  out.reserve(k);
  int c = 1;
  for (int t = 0; t < k; ++t) {
    for (;; ++c) {
      std::uint64_t block = binom_checked(N - c, k - t - 1);
      if (rank < block) {
        out.push_back(c);
        ++c;
        break;
      }
      rank -= block;
    }
  }
  return out;
}

}  // namespace

std::vector<int> change_positions(const Morphism& f) {
  if (f.dom < 2 || static_cast<int>(f.values.size()) != f.dom) {
    fail("InvalidParams", "morphism value string does not match its domain");
  }
  std::vector<int> out;
  for (int i = 1; i < f.dom; ++i) {
    if (f.values[i] != f.values[i - 1]) out.push_back(i);
  }
  return out;
}

Morphism epi_from_changes(int dom, int cod, const std::vector<int>& changes) {
  if (dom < 2 || cod < 2) {
    fail("InvalidParams", "linear graphs need at least two vertices");
  }
  int prev = 0;
  for (int p : changes) {
    if (p <= prev || p > dom - 1) {
      fail("InvalidParams", "change positions must be strictly increasing within 1..dom-1");
    }
    prev = p;
  }
  std::vector<int> vals(dom, 0);
  int v = 0;
  int dir = +1;
  std::size_t next = 0;
  for (int i = 1; i < dom; ++i) {
    if (next < changes.size() && changes[next] == i) {
      v += dir;
      if (v == cod - 1) dir = -1;
      if (v == 0) dir = +1;
      ++next;
    }
    vals[i] = v;
  }
  return validate(dom, cod, std::move(vals));
}

std::vector<Morphism> enumerate_epi(const LinearGraph& dom, const LinearGraph& cod) {
  return enumerate_impl(dom, cod, -1, std::numeric_limits<std::size_t>::max());
}

std::vector<Morphism> enumerate_epi_of_degree(const LinearGraph& dom,
                                              const LinearGraph& cod, int deg) {
  if (deg < 1) fail("InvalidParams", "degree must be positive");
  check_objects(dom, cod);
  long long want = static_cast<long long>(deg) * (cod.n - 1);
  if (want > dom.n - 1) return {};
  return enumerate_impl(dom, cod, want, std::numeric_limits<std::size_t>::max());
}

std::vector<Morphism> enumerate_epi_prefix(const LinearGraph& dom,
                                           const LinearGraph& cod,
                                           std::size_t max_count) {
  if (max_count == 0) return {};
  return enumerate_impl(dom, cod, -1, max_count);
}

std::vector<Morphism> enumerate_epi_of_degree_prefix(const LinearGraph& dom,
                                                     const LinearGraph& cod,
                                                     int deg,
                                                     std::size_t max_count) {
  if (deg < 1) fail("InvalidParams", "degree must be positive");
  check_objects(dom, cod);
  if (max_count == 0) return {};
  long long want = static_cast<long long>(deg) * (cod.n - 1);
  if (want > dom.n - 1) return {};
  return enumerate_impl(dom, cod, want, max_count);
}

std::uint64_t count_epi(const LinearGraph& dom, const LinearGraph& cod) {
  check_objects(dom, cod);
  std::uint64_t total = 0;
  for (long long k = cod.n - 1; k <= dom.n - 1; k += cod.n - 1) {
    std::uint64_t c = binom_checked(dom.n - 1, static_cast<int>(k));
    if (total > std::numeric_limits<std::uint64_t>::max() - c) {
      fail("CountOverflow", "epimorphism count exceeds 64 bits");
    }
    total += c;
  }
  return total;
}

std::uint64_t count_epi_of_degree(const LinearGraph& dom, const LinearGraph& cod,
                                  int deg) {
  if (deg < 1) fail("InvalidParams", "degree must be positive");
  check_objects(dom, cod);
  long long k = static_cast<long long>(deg) * (cod.n - 1);
  if (k > dom.n - 1) return 0;
  return binom_checked(dom.n - 1, static_cast<int>(k));
}

Morphism sample_epi(const LinearGraph& dom, const LinearGraph& cod,
                    std::mt19937_64& rng) {
  std::uint64_t total = count_epi(dom, cod);
  if (total == 0) fail("NoMorphism", "no epimorphism exists between these graphs");
  std::uint64_t rank = uniform_u64(rng, total);
  for (long long k = cod.n - 1; k <= dom.n - 1; k += cod.n - 1) {
    std::uint64_t c = binom_checked(dom.n - 1, static_cast<int>(k));
    if (rank < c) {
      return epi_from_changes(dom.n, cod.n,
                              unrank_subset(dom.n - 1, static_cast<int>(k), rank));
    }
    rank -= c;
  }
  fail("InvalidParams", "unranking walked past the total count");  // unreachable
}

Morphism sample_epi_of_degree(const LinearGraph& dom, const LinearGraph& cod,
                              int deg, std::mt19937_64& rng) {
  std::uint64_t total = count_epi_of_degree(dom, cod, deg);
  if (total == 0) fail("NoMorphism", "no epimorphism of this degree exists");
  int k = deg * (cod.n - 1);
  return epi_from_changes(dom.n, cod.n,
                          unrank_subset(dom.n - 1, k, uniform_u64(rng, total)));
}

std::uint64_t uniform_u64(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) fail("InvalidParams", "uniform draw from an empty range");
  // Reject the low remainder band so the modulus is exactly uniform.
  std::uint64_t threshold = (0 - bound) % bound;  // == 2^64 mod bound
  std::uint64_t x = rng();
  while (x < threshold) x = rng();
  return x % bound;
}

}  // namespace knaster
