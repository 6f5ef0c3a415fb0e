#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contractdom/graph.hpp"

namespace contractdom {

/// An induced linear forest to look for, given by its path orders.
/// The common case is P3 + j·P2, built with p3_plus_p2(j).
class PatternSpec {
 public:
  static PatternSpec p3_plus_p2(int j);
  /// Any linear forest; each entry is the vertex count of one path (>= 1).
  static PatternSpec linear_forest(std::vector<int> path_orders);

  /// Path orders, non-increasing.
  const std::vector<int>& paths() const { return paths_; }
  int vertex_count() const;
  /// "P3+2P2", "P3", "P4+P2+P1", ...
  std::string name() const;

  bool operator==(const PatternSpec&) const = default;

 private:
  explicit PatternSpec(std::vector<int> paths);
  std::vector<int> paths_;
};

/// First induced copy of the pattern: components are placed in order,
/// each enumerated lexicographically (as a sorted vertex list) among the
/// vertices anticomplete to the components already placed.
std::optional<VertexSet> find_induced(const Graph& g, const PatternSpec& p);
bool is_free(const Graph& g, const PatternSpec& p);
/// True iff G[s] is isomorphic to the pattern.
bool induces(const Graph& g, VertexSet s, const PatternSpec& p);

/// The bound used by steps 1.1 and 4 of the structural decider:
/// 2(|A| + (k+1)^2) + (k+2)|A| + k - 4.
int f_bound(int k, int a_size);

struct StructuralContext {
  int k = 0;
  VertexSet a;
  VertexSet b;  // distance exactly 1 from A
  VertexSet c;  // distance exactly 2 from A
  VertexSet clique_c;  // members of C whose neighbourhood is a clique
  VertexSet regular;
  int f_k = 0;
};

struct Partition {
  VertexSet b;
  VertexSet c;
};

/// Splits V(G) \ A by distance to A. Throws StructuralViolation if some
/// vertex is at distance three or more (or unreachable).
Partition partition_abc(const Graph& g, VertexSet a);

VertexSet clique_neighbourhood_set(const Graph& g, VertexSet c);

/// Members of clique_c lying in some set of k+1 members of clique_c that are
/// pairwise at distance at least four.
VertexSet regular_vertices(const DistanceMatrix& dist, VertexSet clique_c, int k);

/// A, B, C, 𝒞, ℛ and f(k) for a connected graph containing an induced
/// P3+(k-1)P2; A is the first such copy found. Throws PreconditionError when
/// k < 1 or the pattern is absent; StructuralViolation as partition_abc.
StructuralContext analyse(const Graph& g, int k);
StructuralContext analyse(const Graph& g, int k, const DistanceMatrix& dist);

}  // namespace contractdom
