#pragma once

// Exact minimum set cover over vertex sets. Domination is the instance where
// every vertex covers its closed neighbourhood and every vertex is a target;
// the V2-cover problem of the structural decider restricts targets and pool.

#include <functional>
#include <optional>
#include <vector>

#include "contractdom/graph.hpp"

namespace contractdom::detail {

class CoverSearch {
 public:
  /// covers[v] = targets picked vertex v takes care of.
  CoverSearch(std::vector<VertexSet> covers, VertexSet targets, VertexSet pool);

  /// Some minimum-size cover S with forced ⊆ S ⊆ pool and |S| <= cap, or
  /// nullopt. `forced` must lie in the pool.
  std::optional<VertexSet> minimum(VertexSet forced, int cap) const;

  /// Minimum-size cover restricted to forced ⊆ S ⊆ forced ∪ pool_subset.
  std::optional<VertexSet> minimum_within(VertexSet forced, VertexSet pool_subset, int cap) const;

  /// The lexicographically smallest cover of exactly `size` vertices that
  /// contains `forced`, assuming `size` is the minimum for that forcing.
  std::optional<VertexSet> lex_smallest(VertexSet forced, int size) const;

  /// Calls visit(S) for every cover S ⊇ forced with |S| == size, each once.
  /// Assumes no smaller cover containing forced exists.
  void enumerate(VertexSet forced, int size, const std::function<void(VertexSet)>& visit) const;

  bool covers_all(VertexSet picked) const;

 private:
  VertexSet covered_by(VertexSet picked) const;
  std::optional<VertexSet> greedy(VertexSet forced, VertexSet pool) const;
  int lower_bound(VertexSet uncovered, VertexSet pool) const;

  struct Best {
    int size;
    VertexSet set;
    bool found = false;
  };
  void branch(VertexSet picked, VertexSet uncovered, VertexSet pool, Best& best) const;
  void enumerate_rec(VertexSet picked, VertexSet uncovered, VertexSet pool, int size,
                     const std::function<void(VertexSet)>& visit) const;

  std::vector<VertexSet> covers_;
  std::vector<VertexSet> coverers_;  // coverers_[t] = pool vertices covering t
  VertexSet targets_;
  VertexSet pool_;
};

}  // namespace contractdom::detail
