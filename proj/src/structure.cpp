#include "contractdom/structure.hpp"

#include <algorithm>
#include <functional>

namespace contractdom {

PatternSpec::PatternSpec(std::vector<int> paths) : paths_(std::move(paths)) {
  std::sort(paths_.begin(), paths_.end(), std::greater<>());
}

PatternSpec PatternSpec::p3_plus_p2(int j) {
  if (j < 0) throw PreconditionError("pattern needs j >= 0");
  std::vector<int> paths{3};
  paths.insert(paths.end(), static_cast<std::size_t>(j), 2);
  return PatternSpec(std::move(paths));
}

PatternSpec PatternSpec::linear_forest(std::vector<int> path_orders) {
  if (path_orders.empty()) throw PreconditionError("a linear forest needs at least one path");
  for (int len : path_orders) {
    if (len < 1) throw PreconditionError("path orders must be positive");
  }
  return PatternSpec(std::move(path_orders));
}

int PatternSpec::vertex_count() const {
  int total = 0;
  for (int len : paths_) total += len;
  return total;
}

std::string PatternSpec::name() const {
  std::string out;
  for (std::size_t i = 0; i < paths_.size();) {
    std::size_t j = i;
    while (j < paths_.size() && paths_[j] == paths_[i]) ++j;
    if (!out.empty()) out += "+";
    if (j - i > 1) out += std::to_string(j - i);
    out += "P" + std::to_string(paths_[i]);
    i = j;
  }
  return out;
}

namespace {

VertexSet at_or_above(Vertex v) { return VertexSet(v >= 64 ? 0 : ~std::uint64_t{0} << v); }

// Induced paths of the given order inside `allowed` whose smallest vertex is
// at least min_start, as masks in lexicographic order.
std::vector<VertexSet> long_paths(const Graph& g, VertexSet allowed, int order, Vertex min_start) {
  std::vector<VertexSet> out;
  std::vector<Vertex> path;
  std::function<void(VertexSet)> extend = [&](VertexSet mask) {
    if (static_cast<int>(path.size()) == order) {
      if (path.front() < path.back()) out.push_back(mask);
      return;
    }
    Vertex last = path.back();
    VertexSet blocked = mask;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) blocked |= g.neighbours(path[i]);
    for (Vertex w : (g.neighbours(last) & allowed) - blocked) {
      if (w < min_start) continue;
      path.push_back(w);
      extend(mask | VertexSet::singleton(w));
      path.pop_back();
    }
  };
  for (Vertex s : allowed & at_or_above(min_start)) {
    path.assign(1, s);
    extend(VertexSet::singleton(s));
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

class PatternSearch {
 public:
  PatternSearch(const Graph& g, const std::vector<int>& paths) : g_(g), paths_(paths) {}

  std::optional<VertexSet> run() {
    if (place(0, g_.vertices(), 0, {})) return found_;
    return std::nullopt;
  }

 private:
  bool accept(std::size_t idx, VertexSet allowed, VertexSet chosen, VertexSet component) {
    Vertex next_start = 0;
    if (idx + 1 < paths_.size() && paths_[idx + 1] == paths_[idx]) next_start = component.front() + 1;
    return place(idx + 1, allowed - g_.closed_neighbours(component), next_start, chosen | component);
  }

  bool place(std::size_t idx, VertexSet allowed, Vertex min_start, VertexSet chosen) {
    if (idx == paths_.size()) {
      found_ = chosen;
      return true;
    }
    const int order = paths_[idx];
    VertexSet starts = allowed & at_or_above(min_start);
    switch (order) {
      case 1:
        for (Vertex v : starts) {
          if (accept(idx, allowed, chosen, VertexSet::singleton(v))) return true;
        }
        return false;
      case 2:
        for (Vertex x : starts) {
          for (Vertex y : g_.neighbours(x) & allowed & at_or_above(x + 1)) {
            if (accept(idx, allowed, chosen, VertexSet{x, y})) return true;
          }
        }
        return false;
      case 3:
        for (Vertex a : starts) {
          for (Vertex b : allowed & at_or_above(a + 1)) {
            for (Vertex c : allowed & at_or_above(b + 1)) {
              int edges = int{g_.adjacent(a, b)} + int{g_.adjacent(a, c)} + int{g_.adjacent(b, c)};
              if (edges == 2 && accept(idx, allowed, chosen, VertexSet{a, b, c})) return true;
            }
          }
        }
        return false;
      default:
        for (VertexSet path : long_paths(g_, allowed, order, min_start)) {
          if (accept(idx, allowed, chosen, path)) return true;
        }
        return false;
    }
  }

  const Graph& g_;
  const std::vector<int>& paths_;
  VertexSet found_;
};

}  // namespace

std::optional<VertexSet> find_induced(const Graph& g, const PatternSpec& p) {
  if (p.vertex_count() > g.order()) return std::nullopt;
  return PatternSearch(g, p.paths()).run();
}

bool is_free(const Graph& g, const PatternSpec& p) { return !find_induced(g, p).has_value(); }

bool induces(const Graph& g, VertexSet s, const PatternSpec& p) {
  if (!s.is_subset_of(g.vertices()) || s.size() != p.vertex_count()) return false;
  std::vector<int> orders;
  VertexSet rest = s;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::singleton(rest.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      frontier = (g.neighbours(frontier) & s) - comp;
      comp |= frontier;
    }
    int edges = 0;
    for (Vertex v : comp) {
      int deg = (g.neighbours(v) & s).size();
      if (deg > 2) return false;
      edges += deg;
    }
    if (edges / 2 != comp.size() - 1) return false;
    orders.push_back(comp.size());
    rest -= comp;
  }
  std::sort(orders.begin(), orders.end(), std::greater<>());
  return orders == p.paths();
}

int f_bound(int k, int a_size) { return 2 * (a_size + (k + 1) * (k + 1)) + (k + 2) * a_size + k - 4; }

Partition partition_abc(const Graph& g, VertexSet a) {
  if (a.empty()) throw PreconditionError("A must be non-empty");
  auto dist = distances_from(g, a);
  Partition out;
  for (Vertex v = 0; v < g.order(); ++v) {
    switch (dist[v]) {
      case 0:
        break;
      case 1:
        out.b.insert(v);
        break;
      case 2:
        out.c.insert(v);
        break;
      default:
        throw StructuralViolation("vertex " + std::to_string(v) +
                                  " lies at distance >= 3 from A; the graph contains the excluded pattern");
    }
  }
  return out;
}

VertexSet clique_neighbourhood_set(const Graph& g, VertexSet c) {
  VertexSet out;
  for (Vertex v : c) {
    if (is_clique(g, g.neighbours(v))) out.insert(v);
  }
  return out;
}

VertexSet regular_vertices(const DistanceMatrix& dist, VertexSet clique_c, int k) {
  std::vector<VertexSet> far(static_cast<std::size_t>(dist.order()));
  for (Vertex u : clique_c) {
    for (Vertex v : clique_c) {
      if (u != v && dist.at_least(u, v, 4)) far[u].insert(v);
    }
  }
  const int target = k + 1;
  VertexSet regular;
  // Exact clique search in the "distance >= 4" graph; every member of a
  // found clique is regular.
  std::function<bool(VertexSet, VertexSet)> grow = [&](VertexSet clique, VertexSet candidates) {
    if (clique.size() == target) {
      regular |= clique;
      return true;
    }
    if (clique.size() + candidates.size() < target) return false;
    for (Vertex v : candidates) {
      candidates.erase(v);
      if (grow(clique | VertexSet::singleton(v), candidates & far[v])) return true;
    }
    return false;
  };
  for (Vertex v : clique_c) {
    if (!regular.contains(v)) grow(VertexSet::singleton(v), far[v]);
  }
  return regular;
}

StructuralContext analyse(const Graph& g, int k) { return analyse(g, k, distances(g)); }

StructuralContext analyse(const Graph& g, int k, const DistanceMatrix& dist) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  PatternSpec pattern = PatternSpec::p3_plus_p2(k - 1);
  auto a = find_induced(g, pattern);
  if (!a) throw PreconditionError("graph contains no induced " + pattern.name());
  StructuralContext ctx;
  ctx.k = k;
  ctx.a = *a;
  Partition part = partition_abc(g, ctx.a);
  ctx.b = part.b;
  ctx.c = part.c;
  ctx.clique_c = clique_neighbourhood_set(g, ctx.c);
  ctx.regular = regular_vertices(dist, ctx.clique_c, k);
  ctx.f_k = f_bound(k, ctx.a.size());
  return ctx;
}

}  // namespace contractdom
