#include "cover_search.hpp"

#include <algorithm>
#include <limits>

namespace contractdom::detail {

CoverSearch::CoverSearch(std::vector<VertexSet> covers, VertexSet targets, VertexSet pool)
    : covers_(std::move(covers)), coverers_(covers_.size()), targets_(targets), pool_(pool) {
  for (Vertex v : pool_) {
    for (Vertex t : covers_[v] & targets_) coverers_[t].insert(v);
  }
}

VertexSet CoverSearch::covered_by(VertexSet picked) const {
  VertexSet out;
  for (Vertex v : picked) out |= covers_[v];
  return out & targets_;
}

bool CoverSearch::covers_all(VertexSet picked) const { return covered_by(picked) == targets_; }

int CoverSearch::lower_bound(VertexSet uncovered, VertexSet pool) const {
  int remaining = uncovered.size();
  if (remaining == 0) return 0;
  int best_gain = 0;
  for (Vertex v : pool) best_gain = std::max(best_gain, (covers_[v] & uncovered).size());
  if (best_gain == 0) return std::numeric_limits<int>::max() / 2;
  return (remaining + best_gain - 1) / best_gain;
}

std::optional<VertexSet> CoverSearch::greedy(VertexSet forced, VertexSet pool) const {
  VertexSet picked = forced;
  VertexSet uncovered = targets_ - covered_by(forced);
  pool -= forced;
  while (!uncovered.empty()) {
    Vertex best = -1;
    int best_gain = 0;
    for (Vertex v : pool) {
      int gain = (covers_[v] & uncovered).size();
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    if (best < 0) return std::nullopt;
    picked.insert(best);
    pool.erase(best);
    uncovered -= covers_[best];
  }
  return picked;
}

// Branch on the uncovered target with fewest remaining coverers. In the i-th
// branch the coverers tried in branches 1..i-1 leave the pool, so every cover
// is reached along exactly one path.
void CoverSearch::branch(VertexSet picked, VertexSet uncovered, VertexSet pool, Best& best) const {
  if (uncovered.empty()) {
    best = {picked.size(), picked, true};
    return;
  }
  if (picked.size() + lower_bound(uncovered, pool) >= best.size) return;

  Vertex pivot = -1;
  int fewest = std::numeric_limits<int>::max();
  for (Vertex t : uncovered) {
    int options = (coverers_[t] & pool).size();
    if (options < fewest) {
      fewest = options;
      pivot = t;
      if (options <= 1) break;
    }
  }
  if (fewest == 0) return;

  for (Vertex v : coverers_[pivot] & pool) {
    pool.erase(v);
    VertexSet next = picked;
    next.insert(v);
    branch(next, uncovered - covers_[v], pool, best);
    if (picked.size() + 1 >= best.size) return;
  }
}

std::optional<VertexSet> CoverSearch::minimum_within(VertexSet forced, VertexSet pool_subset, int cap) const {
  VertexSet pool = (pool_subset & pool_) - forced;
  if (forced.size() > cap) return std::nullopt;
  Best best{cap + 1, {}, false};
  if (auto g = greedy(forced, pool); g && g->size() <= cap) best = {g->size(), *g, true};
  branch(forced, targets_ - covered_by(forced), pool, best);
  if (!best.found) return std::nullopt;
  return best.set;
}

std::optional<VertexSet> CoverSearch::minimum(VertexSet forced, int cap) const {
  return minimum_within(forced, pool_, cap);
}

std::optional<VertexSet> CoverSearch::lex_smallest(VertexSet forced, int size) const {
  // Fix members in increasing order; the next member is the smallest vertex v
  // for which a completion exists using only vertices above v.
  VertexSet prefix;
  Vertex last = -1;
  while (prefix.size() < size) {
    bool extended = false;
    for (Vertex v : (pool_ | forced)) {
      if (v <= last) continue;
      VertexSet fixed = prefix | VertexSet::singleton(v);
      VertexSet above(v + 1 >= 64 ? 0 : ~std::uint64_t{0} << (v + 1));
      if (!(forced - fixed).is_subset_of(above)) break;  // a forced vertex would be skipped
      VertexSet pool = (pool_ & above) | fixed;
      if (minimum_within(fixed | forced, pool, size)) {
        prefix = fixed;
        last = v;
        extended = true;
        break;
      }
    }
    if (!extended) return std::nullopt;
  }
  if (!covers_all(prefix)) return std::nullopt;
  return prefix;
}

void CoverSearch::enumerate_rec(VertexSet picked, VertexSet uncovered, VertexSet pool, int size,
                                const std::function<void(VertexSet)>& visit) const {
  if (uncovered.empty()) {
    if (picked.size() == size) visit(picked);
    return;
  }
  if (picked.size() + lower_bound(uncovered, pool) > size) return;
  Vertex pivot = -1;
  int fewest = std::numeric_limits<int>::max();
  for (Vertex t : uncovered) {
    int options = (coverers_[t] & pool).size();
    if (options < fewest) {
      fewest = options;
      pivot = t;
    }
  }
  if (fewest == 0) return;
  for (Vertex v : coverers_[pivot] & pool) {
    pool.erase(v);
    VertexSet next = picked;
    next.insert(v);
    enumerate_rec(next, uncovered - covers_[v], pool, size, visit);
  }
}

void CoverSearch::enumerate(VertexSet forced, int size, const std::function<void(VertexSet)>& visit) const {
  enumerate_rec(forced, targets_ - covered_by(forced), pool_ - forced, size, visit);
}

}  // namespace contractdom::detail
