#include "knaster/lingraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace knaster {

namespace {

// Single left-to-right scan deciding whether `v` folds into alternating
// monotone sweeps, collecting the leftmost turning indices. The sweep
// direction flips lazily at the first strict counter-step; that step is legal
// only if the current value sits at the extreme the sweep was heading for,
// and the turn itself is recorded at the first index of that extreme's
// plateau (the leftmost valid choice — entries transferred between adjacent
// sweeps by moving a turn left within a plateau are constant, so both sweeps
// stay monotone). A string ending anywhere other than the current sweep's
// target extreme has no decomposition.
bool fold_scan(const std::vector<int>& v, int cod, std::vector<int>* turns_out) {
  const int n = static_cast<int>(v.size());
  const int top = cod - 1;
  std::vector<int> turns{0};
  int dir = +1;
  for (int i = 0; i + 1 < n; ++i) {
    const int step = v[i + 1] - v[i];
    if (step == 0) continue;
    if ((dir > 0 && step < 0) || (dir < 0 && step > 0)) {
      const int extreme = dir > 0 ? top : 0;
      if (v[i] != extreme) return false;
      int t = i;
      while (t > 0 && v[t - 1] == extreme) --t;
      turns.push_back(t);
      dir = -dir;
    }
  }
  if (v[n - 1] != (dir > 0 ? top : 0)) return false;
  turns.push_back(n - 1);
  if (turns_out) *turns_out = std::move(turns);
  return true;
}

}  // namespace

Morphism validate(int cod_size, std::vector<int> values) {
  const int n = static_cast<int>(values.size());
  if (n < 2 || cod_size < 2) {
    fail("InvalidParams", "graphs need at least 2 vertices (dom " +
                              std::to_string(n) + ", cod " +
                              std::to_string(cod_size) + ")");
  }
  if (values[0] != 0) {
    fail("ZeroVertexViolation",
         "value at vertex 0 is " + std::to_string(values[0]) + ", expected 0");
  }
  for (int i = 0; i < n; ++i) {
    if (values[i] < 0 || values[i] >= cod_size) {
      fail("NotHomomorphism", "value " + std::to_string(values[i]) +
                                  " at index " + std::to_string(i) +
                                  " is outside the codomain");
    }
    if (i > 0 && std::abs(values[i] - values[i - 1]) > 1) {
      fail("NotHomomorphism",
           "step of size " + std::to_string(std::abs(values[i] - values[i - 1])) +
               " at index " + std::to_string(i));
    }
  }
  std::vector<char> vertex_hit(cod_size, 0);
  std::vector<char> edge_hit(cod_size - 1, 0);
  for (int i = 0; i < n; ++i) {
    vertex_hit[values[i]] = 1;
    if (i > 0 && values[i] != values[i - 1]) {
      edge_hit[std::min(values[i], values[i - 1])] = 1;
    }
  }
  for (int j = 0; j < cod_size; ++j) {
    if (!vertex_hit[j]) {
      fail("NotSurjective", "vertex " + std::to_string(j) + " is missed");
    }
  }
  for (int j = 0; j + 1 < cod_size; ++j) {
    if (!edge_hit[j]) {
      fail("NotSurjective", "edge {" + std::to_string(j) + "," +
                                std::to_string(j + 1) + "} is missed");
    }
  }
  if (!fold_scan(values, cod_size, nullptr)) {
    fail("NoFold", "no decomposition into alternating monotone sweeps");
  }
  Morphism f;
  f.dom = n;
  f.cod = cod_size;
  f.values = std::move(values);
  return f;
}

Morphism validate(int dom_size, int cod_size, std::vector<int> values) {
  if (dom_size != static_cast<int>(values.size())) {
    fail("InvalidParams", "declared domain size " + std::to_string(dom_size) +
                              " does not match the value string length " +
                              std::to_string(values.size()));
  }
  return validate(cod_size, std::move(values));
}

FoldDecomposition fold_decomposition(const Morphism& f) {
  FoldDecomposition d;
  if (!fold_scan(f.values, f.cod, &d.turning_indices)) {
    fail("NoFold", "morphism has no fold decomposition (was it validated?)");
  }
  return d;
}

int degree(const Morphism& f) { return fold_decomposition(f).degree(); }

Morphism identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return validate(n, std::move(v));
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (g.cod != f.dom) {
    fail("DomainMismatch", "cod of the inner morphism is " +
                               std::to_string(g.cod) + " but dom of the outer is " +
                               std::to_string(f.dom));
  }
  std::vector<int> v(g.values.size());
  for (size_t i = 0; i < g.values.size(); ++i) v[i] = f.values[g.values[i]];
  return validate(f.cod, std::move(v));
}

int graph_distance(const LinearGraph& g, int x, int y) {
  if (x < 0 || x >= g.n || y < 0 || y >= g.n) {
    fail("VertexOutOfRange", "vertices " + std::to_string(x) + "," +
                                 std::to_string(y) + " in a graph of size " +
                                 std::to_string(g.n));
  }
  return std::abs(x - y);
}

std::vector<int> reverse_str(std::vector<int> s) {
  std::reverse(s.begin(), s.end());
  return s;
}

std::vector<int> restrict_str(const std::vector<int>& s, int i, int j) {
  if (i < 0 || j < i || j >= static_cast<int>(s.size())) {
    fail("IndexOutOfRange", "range [" + std::to_string(i) + "," +
                                std::to_string(j) + "] in a string of length " +
                                std::to_string(s.size()));
  }
  return std::vector<int>(s.begin() + i, s.begin() + j + 1);
}

}  // namespace knaster
