#include "contractdom/domination.hpp"

#include <algorithm>
#include <limits>

#include "cover_search.hpp"

namespace contractdom {

namespace {

constexpr int kNoCap = std::numeric_limits<int>::max() / 2;

detail::CoverSearch domination_search(const Graph& g) {
  std::vector<VertexSet> covers(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) covers[v] = g.closed_neighbours(v);
  return {std::move(covers), g.vertices(), g.vertices()};
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
}

}  // namespace

std::optional<int> domination_number(const Graph& g, std::optional<int> cap) {
  auto best = domination_search(g).minimum({}, cap.value_or(kNoCap));
  if (!best) return std::nullopt;
  return best->size();
}

std::optional<DominationResult> gamma_forced(const Graph& g, VertexSet forced, std::optional<int> cap) {
  require_connected(g);
  if (!forced.is_subset_of(g.vertices())) throw PreconditionError("forced set exceeds the vertex range");
  auto search = domination_search(g);
  auto best = search.minimum(forced, cap.value_or(kNoCap));
  if (!best) return std::nullopt;
  const int size = best->size();
  auto canonical = search.lex_smallest(forced, size);
  return DominationResult{size, canonical.value_or(*best)};
}

std::optional<DominationResult> gamma(const Graph& g, std::optional<int> cap) { return gamma_forced(g, {}, cap); }

std::vector<VertexSet> enumerate_min_ds(const Graph& g) {
  require_connected(g);
  auto search = domination_search(g);
  const int size = search.minimum({}, kNoCap)->size();
  std::vector<VertexSet> out;
  search.enumerate({}, size, [&](VertexSet s) { out.push_back(s); });
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

VertexSet private_neighbours(const Graph& g, VertexSet d, Vertex u) {
  if (!d.contains(u)) throw PreconditionError("vertex " + std::to_string(u) + " is not in the dominating set");
  VertexSet out;
  for (Vertex v : g.closed_neighbours(u)) {
    if ((g.closed_neighbours(v) & d) == VertexSet::singleton(u)) out.insert(v);
  }
  return out;
}

std::optional<NonStableWitness> has_nonstable_min_ds(const Graph& g) {
  require_connected(g);
  auto search = domination_search(g);
  const int g_min = search.minimum({}, kNoCap)->size();
  if (g_min < 2) return std::nullopt;
  for (Edge e : g.edges()) {
    if (auto hit = search.minimum(e.ends(), g_min)) {
      return NonStableWitness{e, search.lex_smallest(e.ends(), g_min).value_or(*hit)};
    }
  }
  return std::nullopt;
}

}  // namespace contractdom
