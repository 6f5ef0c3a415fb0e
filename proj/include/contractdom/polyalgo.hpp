#pragma once

#include <optional>

#include "contractdom/decision.hpp"
#include "contractdom/graph.hpp"
#include "contractdom/structure.hpp"

namespace contractdom {

/// How a picked vertex covers a V2 vertex in the step-4 cover problem.
/// `closed`: x ∈ V2 is covered when N[x] ∩ S ≠ ∅. `open`: N(x) ∩ S ≠ ∅,
/// so a member of S inside V2 still needs a neighbour in S.
enum class CoverRule { closed, open };

struct CoverProblem {
  VertexSet regular_closed;  // N[ℛ]
  VertexSet v1;              // distance exactly one from N[ℛ]
  VertexSet v2;              // everything else
  int cap = 0;
  CoverRule rule = CoverRule::closed;
  std::optional<int> s_star;
};

CoverProblem build_cover_problem(const Graph& g, const StructuralContext& ctx, CoverRule rule = CoverRule::closed);

struct CoverResult {
  int size = 0;
  VertexSet witness;
};

/// Minimum S with forced ⊆ S ⊆ V1 ∪ V2 covering every vertex of V2 under
/// cp.rule, provided |S| <= cp.cap; nullopt otherwise.
std::optional<CoverResult> min_v2_cover(const Graph& g, const CoverProblem& cp, VertexSet forced = {});

struct StructuralOptions {
  /// Check P3+kP2-freeness first (n^{O(k)}).
  bool verify_free = true;
  /// Recover a witness edge/set through the characterization on yes-paths
  /// that only prove existence.
  bool verify_witness = false;
  CoverRule cover_rule = CoverRule::closed;
};

/// The six-step decider for connected P3+kP2-free graphs that contain an
/// induced P3+(k-1)P2. Throws PreconditionError when those do not hold.
Decision decide_structural(const Graph& g, int k, const StructuralOptions& options = {});

/// Handles the P3-free (clique) case, then picks the largest j <= k_max
/// with an induced P3+(j-1)P2 and runs decide_structural(G, j).
Decision decide_driver(const Graph& g, int k_max, const StructuralOptions& options = {});

}  // namespace contractdom
