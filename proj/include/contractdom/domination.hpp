#pragma once

#include <optional>
#include <vector>

#include "contractdom/graph.hpp"

namespace contractdom {

struct DominationResult {
  int gamma = 0;
  /// Lexicographically smallest minimum dominating set (as a sorted list).
  VertexSet witness;
};

/// Domination number with its lexicographically smallest witness.
/// Returns nullopt when a cap is given and γ(G) > cap. Throws
/// PreconditionError on disconnected input.
std::optional<DominationResult> gamma(const Graph& g, std::optional<int> cap = std::nullopt);

/// Minimum dominating set among those containing `forced`; nullopt when its
/// size exceeds cap.
std::optional<DominationResult> gamma_forced(const Graph& g, VertexSet forced,
                                             std::optional<int> cap = std::nullopt);

/// γ(G) only, skipping witness canonicalisation. Accepts disconnected graphs.
std::optional<int> domination_number(const Graph& g, std::optional<int> cap = std::nullopt);

/// Every dominating set of size γ(G), each once, in lexicographic order.
std::vector<VertexSet> enumerate_min_ds(const Graph& g);

/// {v : N[v] ∩ D = {u}}. Throws PreconditionError when u ∉ D.
VertexSet private_neighbours(const Graph& g, VertexSet d, Vertex u);

struct NonStableWitness {
  Edge edge;
  VertexSet set;
};

/// A minimum dominating set containing an edge, reported for the
/// lexicographically smallest edge that admits one; nullopt if every minimum
/// dominating set is stable.
std::optional<NonStableWitness> has_nonstable_min_ds(const Graph& g);

}  // namespace contractdom
