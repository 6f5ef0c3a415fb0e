#include "contractdom/polyalgo.hpp"

#include "contractdom/domination.hpp"
#include "contractdom/oracle.hpp"
#include "cover_search.hpp"

namespace contractdom {

CoverProblem build_cover_problem(const Graph& g, const StructuralContext& ctx, CoverRule rule) {
  CoverProblem cp;
  cp.regular_closed = g.closed_neighbours(ctx.regular);
  cp.v1 = g.neighbours(cp.regular_closed) - cp.regular_closed;
  cp.v2 = g.vertices() - cp.regular_closed - cp.v1;
  cp.cap = ctx.f_k;
  cp.rule = rule;
  return cp;
}

std::optional<CoverResult> min_v2_cover(const Graph& g, const CoverProblem& cp, VertexSet forced) {
  const VertexSet pool = cp.v1 | cp.v2;
  if (!forced.is_subset_of(pool)) throw PreconditionError("forced vertices must lie in V1 ∪ V2");
  std::vector<VertexSet> covers(static_cast<std::size_t>(g.order()));
  for (Vertex v : pool) covers[v] = cp.rule == CoverRule::closed ? g.closed_neighbours(v) : g.neighbours(v);
  detail::CoverSearch search(std::move(covers), cp.v2, pool);
  auto best = search.minimum(forced, cp.cap);
  if (!best) return std::nullopt;
  return CoverResult{best->size(), *best};
}

namespace {

void attach_witness(const Graph& g, Decision& d) {
  Decision c = decide_characterization(g);
  if (c.yes()) {
    d.witness_edge = c.witness_edge;
    d.witness_set = c.witness_set;
  }
}

Decision finish(const Graph& g, Decision d, Answer answer, const char* step, const StructuralOptions& options) {
  d.answer = answer;
  d.provenance.fired_step = step;
  if (answer == Answer::yes && options.verify_witness && !d.witness_edge) attach_witness(g, d);
  return d;
}

}  // namespace

Decision decide_structural(const Graph& g, int k, const StructuralOptions& options) {
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
  if (k < 1) throw PreconditionError("k must be at least 1; use decide_driver for P3-free graphs");
  if (options.verify_free) {
    PatternSpec excluded = PatternSpec::p3_plus_p2(k);
    if (auto hit = find_induced(g, excluded)) {
      throw PreconditionError("graph is not " + excluded.name() + "-free: induced copy on " + hit->to_string() +
                              "; use the oracle");
    }
  }

  const DistanceMatrix dist = distances(g);
  const StructuralContext ctx = analyse(g, k, dist);

  Decision d;
  d.method = Method::structural;
  d.provenance.j = k;
  d.provenance.a_size = ctx.a.size();
  d.provenance.f = ctx.f_k;
  d.provenance.a_set = ctx.a;

  // Step 1.1: no regular vertices, so γ is bounded by f(k) on no-instances.
  if (ctx.regular.empty()) {
    auto g_min = domination_number(g, ctx.f_k);
    if (!g_min) return finish(g, d, Answer::yes, "1.1.1", options);
    d.provenance.gamma = *g_min;
    if (auto hit = has_nonstable_min_ds(g)) {
      d.witness_edge = hit->edge;
      d.witness_set = hit->set;
      return finish(g, d, Answer::yes, "1.1.2", options);
    }
    return finish(g, d, Answer::no, "1.1.2", options);
  }

  // Step 2.
  for (Vertex u : ctx.regular) {
    for (Vertex v : ctx.regular) {
      if (u < v && !dist.at_least(u, v, 4)) return finish(g, d, Answer::yes, "2", options);
    }
  }

  // Step 3.
  const CoverProblem cp = build_cover_problem(g, ctx, options.cover_rule);
  if (cp.v2.empty()) return finish(g, d, Answer::no, "3", options);

  // Step 4.
  auto s_star = min_v2_cover(g, cp, {});
  if (!s_star) return finish(g, d, Answer::yes, "4", options);

  // Step 5: ask whether some minimum cover contains an edge, or meets V1.
  for (Edge e : g.edges_within(cp.v1 | cp.v2)) {
    auto r = min_v2_cover(g, cp, e.ends());
    if (r && r->size == s_star->size) return finish(g, d, Answer::yes, "5(i)", options);
  }
  for (Vertex v : cp.v1) {
    auto r = min_v2_cover(g, cp, VertexSet::singleton(v));
    if (r && r->size == s_star->size) return finish(g, d, Answer::yes, "5(ii)", options);
  }

  return finish(g, d, Answer::no, "6", options);
}

Decision decide_driver(const Graph& g, int k_max, const StructuralOptions& options) {
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
  if (k_max < 1) throw PreconditionError("k must be at least 1");
  if (is_free(g, PatternSpec::p3_plus_p2(0))) {
    Decision d;
    d.method = Method::structural;
    d.answer = Answer::no;
    d.provenance.fired_step = "clique";
    return d;
  }
  if (options.verify_free) {
    PatternSpec excluded = PatternSpec::p3_plus_p2(k_max);
    if (auto hit = find_induced(g, excluded)) {
      throw PreconditionError("graph is not " + excluded.name() + "-free: induced copy on " + hit->to_string() +
                              "; use the oracle");
    }
  }
  int j = 1;
  for (int cand = k_max; cand >= 1; --cand) {
    if (find_induced(g, PatternSpec::p3_plus_p2(cand - 1))) {
      j = cand;
      break;
    }
  }
  StructuralOptions inner = options;
  inner.verify_free = false;  // maximality of j already excludes P3+jP2
  return decide_structural(g, j, inner);
}

}  // namespace contractdom
