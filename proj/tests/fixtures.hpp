#pragma once

#include "contractdom/generators.hpp"
#include "contractdom/graph.hpp"

namespace fixtures {

using contractdom::Graph;

/// Subdivided star with three legs: centre 2, legs 2-1-0, 2-3-4, 2-5-6.
/// P3+P2-free, a no-instance, with regular vertices {4, 6} for A = {0,1,2}.
inline Graph spider() { return Graph::from_edge_list(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}}); }

/// Corpus spec whose instance #1 is the first with regular vertices.
inline contractdom::GeneratorSpec first_regular_spec() {
  contractdom::GeneratorSpec spec;
  spec.kind = contractdom::GeneratorKind::random_free;
  spec.n_min = 6;
  spec.n = 12;
  spec.p = 0.1;
  spec.p_max = 0.4;
  spec.k = 1;
  spec.seed = 2024;
  spec.count = 50;
  return spec;
}

inline Graph first_regular() {
  return Graph::from_edge_list(8, {{0, 1}, {1, 6}, {2, 4}, {3, 6}, {4, 6}, {5, 7}, {6, 7}});
}

}  // namespace fixtures
