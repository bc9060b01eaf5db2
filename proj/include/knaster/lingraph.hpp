// lingraph.hpp — pointed linear graphs and their epimorphisms: value-string
// encoding, fold decompositions, degree, and composition. Every other module
// consumes these types.
#pragma once

#include <vector>

#include "knaster/error.hpp"

namespace knaster {

// A pointed linear graph: vertices 0..n-1 along a path, a loop at every
// vertex, and vertex 0 distinguished as the zero-vertex. The edge relation is
// |i-j| <= 1, so the vertex count determines the graph completely; 0 and n-1
// are its only end vertices.
struct LinearGraph {
  int n = 2;

  friend bool operator==(const LinearGraph&, const LinearGraph&) = default;
};

// An epimorphism between pointed linear graphs, stored as its value string:
// values[i] is the image of vertex i. Instances are constructed through
// validate(), which guarantees:
//   * values[0] == 0 (zero-vertex preserved),
//   * consecutive values differ by at most 1 (graph homomorphism),
//   * every vertex and every non-loop edge of the codomain is hit,
//   * the string decomposes into alternating monotone sweeps between the two
//     end vertices (a fold decomposition exists).
struct Morphism {
  int dom = 0;
  int cod = 0;
  std::vector<int> values;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

// Witness that a value string is a zigzag of monotone sweeps: turning indices
// 0 = i_0 < i_1 < ... < i_k = dom-1 such that the string is monotone on each
// [i_j, i_{j+1}] and sits at the far end (cod-1) for odd j, at 0 for even j.
// The degree of the morphism is k, the number of sweeps.
struct FoldDecomposition {
  std::vector<int> turning_indices;

  int degree() const { return static_cast<int>(turning_indices.size()) - 1; }
};

// Checks every epimorphism condition on the given value string and returns the
// morphism. The domain is the length of `values`; both sizes must be >= 2.
// Errors (in the order checked): InvalidParams, ZeroVertexViolation,
// NotHomomorphism, NotSurjective, NoFold.
Morphism validate(int cod_size, std::vector<int> values);

// Same, with an explicit domain size that must match values.size().
Morphism validate(int dom_size, int cod_size, std::vector<int> values);

// Canonical fold decomposition: each turning index is leftmost among valid
// choices, i.e. a turn is recorded at the first index of each plateau at an
// extreme value, and a trailing extreme plateau is absorbed into the final
// sweep. `f` must be a validated morphism.
FoldDecomposition fold_decomposition(const Morphism& f);

// Number of monotone sweeps (the k of the fold decomposition). Independent of
// which decomposition witnesses validity.
int degree(const Morphism& f);

Morphism identity(int n);

// compose(f, g) applies g first: the result maps dom(g) -> cod(f) and
// requires cod(g) == dom(f) (error: DomainMismatch). Degrees multiply.
Morphism compose(const Morphism& f, const Morphism& g);

// Shortest path length between two vertices: |x - y|. Errors on out-of-range
// vertices (VertexOutOfRange).
int graph_distance(const LinearGraph& g, int x, int y);

// Value-string utilities: rev(a) and a restricted to the inclusive index
// range [i, j] (error: IndexOutOfRange).
std::vector<int> reverse_str(std::vector<int> s);
std::vector<int> restrict_str(const std::vector<int>& s, int i, int j);

}  // namespace knaster
