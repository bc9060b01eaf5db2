// enumerate.hpp — exhaustive, counted, and sampled generation of epimorphisms
// between pointed linear graphs, plus the change-position encoding that powers
// all three.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "knaster/lingraph.hpp"

namespace knaster {

// Every epimorphism is determined by the set of positions where its value
// string strictly changes: the walk starts at 0, moves by one at each change,
// and reverses exactly when it sits at an end vertex. A degree-d epimorphism
// onto an m-vertex graph changes at exactly d*(m-1) positions, so epimorphisms
// of degree d correspond bijectively to the (d*(m-1))-subsets of {1..dom-1}.

// Positions i >= 1 with values[i] != values[i-1].
std::vector<int> change_positions(const Morphism& f);

// Inverse of change_positions: the epimorphism dom -> cod whose value string
// changes exactly at `changes` (strictly increasing, within 1..dom-1, size a
// positive multiple of cod-1; error: InvalidParams / NoFold otherwise).
Morphism epi_from_changes(int dom, int cod, const std::vector<int>& changes);

// All epimorphisms dom -> cod in lexicographic order of value strings; empty
// when none exist. `deg` restricts to a single degree.
std::vector<Morphism> enumerate_epi(const LinearGraph& dom, const LinearGraph& cod);
std::vector<Morphism> enumerate_epi_of_degree(const LinearGraph& dom,
                                              const LinearGraph& cod, int deg);

// The first max_count epimorphisms in the same lexicographic order — a
// bounded prefix usable when the full set is astronomically large.
std::vector<Morphism> enumerate_epi_prefix(const LinearGraph& dom,
                                           const LinearGraph& cod,
                                           std::size_t max_count);
std::vector<Morphism> enumerate_epi_of_degree_prefix(const LinearGraph& dom,
                                                     const LinearGraph& cod,
                                                     int deg,
                                                     std::size_t max_count);

// |Epi(dom, cod)|, exactly; throws CountOverflow if it exceeds uint64.
std::uint64_t count_epi(const LinearGraph& dom, const LinearGraph& cod);
std::uint64_t count_epi_of_degree(const LinearGraph& dom, const LinearGraph& cod,
                                  int deg);

// Uniform sample from Epi(dom, cod) (error NoMorphism when the set is empty).
// Sampling unranks against the completion-count table, so it is exact and
// reproducible across platforms for a fixed generator state.
Morphism sample_epi(const LinearGraph& dom, const LinearGraph& cod,
                    std::mt19937_64& rng);
Morphism sample_epi_of_degree(const LinearGraph& dom, const LinearGraph& cod,
                              int deg, std::mt19937_64& rng);

// Bias-free draw from {0..bound-1}. Hand-rolled (rejection from the top)
// because std::uniform_int_distribution is implementation-defined and would
// break reproducibility guarantees across standard libraries.
std::uint64_t uniform_u64(std::mt19937_64& rng, std::uint64_t bound);

// In-place Fisher–Yates shuffle driven by uniform_u64, for the same reason.
template <typename T>
void deterministic_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[uniform_u64(rng, i)]);
  }
}

}  // namespace knaster
