#include "contractdom/claims.hpp"

#include <functional>

#include "contractdom/domination.hpp"
#include "contractdom/oracle.hpp"
#include "contractdom/structure.hpp"

namespace contractdom {

std::string_view to_string(Claim c) {
  switch (c) {
    case Claim::partition:
      return "partition";
    case Claim::c_stable:
      return "c_stable";
    case Claim::vertex_completeness:
      return "vertex_completeness";
    case Claim::one_vertex_per_regular:
      return "one_vertex_per_regular";
    case Claim::no_common_neighbour:
      return "no_common_neighbour";
    case Claim::distance_three_yes:
      return "distance_three_yes";
    case Claim::neighbourhood_shift:
      return "neighbourhood_shift";
    case Claim::only_one_pn_in_c:
      return "only_one_pn_in_c";
    case Claim::shared_responsibilities:
      return "shared_responsibilities";
    case Claim::few_without_pn:
      return "few_without_pn";
    case Claim::b_cap_d_small:
      return "b_cap_d_small";
    case Claim::most_in_c:
      return "most_in_c";
    case Claim::most_neighbourhoods_cliques:
      return "most_neighbourhoods_cliques";
    case Claim::almost_all_distance_three:
      return "almost_all_distance_three";
    case Claim::most_regular:
      return "most_regular";
  }
  return "unknown";
}

namespace {

class Recorder {
 public:
  explicit Recorder(InstanceClaims& out) : out_(out) {}

  void check(Claim c, bool ok, const std::string& detail) {
    Outcome& o = out_.outcomes[static_cast<std::size_t>(c)];
    if (ok) {
      if (o == Outcome::vacuous) o = Outcome::passed;
      return;
    }
    if (o != Outcome::violated) out_.failures.push_back({c, detail});
    o = Outcome::violated;
  }

 private:
  InstanceClaims& out_;
};

// Largest subset of `pool` whose members are pairwise at distance >= bound.
int max_spread_subset(const DistanceMatrix& dist, VertexSet pool, int bound) {
  int best = 0;
  std::function<void(VertexSet, VertexSet)> grow = [&](VertexSet chosen, VertexSet rest) {
    best = std::max(best, chosen.size());
    if (chosen.size() + rest.size() <= best) return;
    for (Vertex v : rest) {
      rest.erase(v);
      VertexSet compatible;
      for (Vertex u : rest) {
        if (dist.at_least(u, v, bound)) compatible.insert(u);
      }
      grow(chosen | VertexSet::singleton(v), compatible);
    }
  };
  grow({}, pool);
  return best;
}

// All (k+1)-subsets of `regular` pairwise at distance >= 4.
std::vector<VertexSet> far_tuples(const DistanceMatrix& dist, VertexSet regular, int size) {
  std::vector<VertexSet> out;
  std::function<void(VertexSet, VertexSet)> grow = [&](VertexSet chosen, VertexSet rest) {
    if (chosen.size() == size) {
      out.push_back(chosen);
      return;
    }
    for (Vertex v : rest) {
      rest.erase(v);
      VertexSet compatible;
      for (Vertex u : rest) {
        if (dist.at_least(u, v, 4)) compatible.insert(u);
      }
      grow(chosen | VertexSet::singleton(v), compatible);
    }
  };
  grow({}, regular);
  return out;
}

void check_regular_claims(const Graph& g, const StructuralContext& ctx, const DistanceMatrix& dist,
                          const std::vector<VertexSet>& min_sets, bool yes_instance, Recorder& rec) {
  const VertexSet reg = ctx.regular;

  for (Vertex c1 : reg) {
    VertexSet reach = g.neighbours(g.neighbours(c1)) - g.closed_neighbours(c1);
    for (Vertex v : reach) {
      bool complete = false;
      for (Vertex c : reg) complete = complete || g.neighbours(c).is_subset_of(g.neighbours(v));
      rec.check(Claim::vertex_completeness, complete,
                "vertex " + std::to_string(v) + " near regular " + std::to_string(c1));
    }
  }

  for (VertexSet d : min_sets) {
    for (Vertex c : reg) {
      rec.check(Claim::one_vertex_per_regular, (d & g.closed_neighbours(c)).size() == 1,
                "D=" + d.to_string() + " regular " + std::to_string(c));
    }
  }

  for (Vertex u : reg) {
    for (Vertex v : reg) {
      if (u >= v) continue;
      rec.check(Claim::no_common_neighbour, !g.neighbours(u).intersects(g.neighbours(v)),
                std::to_string(u) + " and " + std::to_string(v));
      if (dist.at(u, v) == 3) {
        rec.check(Claim::distance_three_yes, yes_instance, std::to_string(u) + " and " + std::to_string(v));
      }
    }
  }

  // Every choice of one neighbour per regular vertex of every far tuple.
  for (VertexSet tuple : far_tuples(dist, reg, ctx.k + 1)) {
    std::vector<Vertex> members = tuple.to_vector();
    VertexSet removed = g.closed_neighbours(tuple);
    std::function<void(std::size_t, VertexSet)> choose = [&](std::size_t i, VertexSet picks) {
      if (i == members.size()) {
        for (VertexSet d : min_sets) {
          VertexSet shifted = (d - removed) | picks;
          rec.check(Claim::neighbourhood_shift, is_dominating(g, shifted) && shifted.size() <= d.size(),
                    "tuple " + tuple.to_string() + " picks " + picks.to_string() + " D=" + d.to_string());
        }
        return;
      }
      for (Vertex b : g.neighbours(members[i])) choose(i + 1, picks | VertexSet::singleton(b));
    };
    choose(0, {});
  }
}

void check_no_instance_claims(const Graph& g, const StructuralContext& ctx, const DistanceMatrix& dist,
                              const std::vector<VertexSet>& min_sets, Recorder& rec) {
  const int k = ctx.k;
  const int a = ctx.a.size();
  bool some_small_outside_c = false;
  bool some_mostly_regular = false;

  for (VertexSet d : min_sets) {
    const std::string tag = "D=" + d.to_string();
    const VertexSet bd = ctx.b & d;
    const int bd_size = bd.size();

    int without_c_private = 0;
    for (Vertex b0 : bd) {
      VertexSet pn = private_neighbours(g, d, b0);
      if ((pn & ctx.c).size() > 1) {
        rec.check(Claim::only_one_pn_in_c, bd_size <= k * a, tag + " b0=" + std::to_string(b0));
      }
      if (!pn.intersects(ctx.c)) ++without_c_private;

      for (Vertex c : pn & ctx.c & g.neighbours(b0)) {
        for (Vertex b : pn & g.neighbours(b0)) {
          if (b != c && !g.adjacent(b, c)) {
            rec.check(Claim::b_cap_d_small, bd_size <= (k + 1) * a,
                      tag + " v=" + std::to_string(b0) + " c=" + std::to_string(c) + " b=" + std::to_string(b));
          }
        }
      }
    }
    if (without_c_private >= a) {
      rec.check(Claim::few_without_pn, bd_size <= (k + 1) * a - 1, tag);
    }

    for (Vertex c : ctx.c) {
      if ((g.neighbours(c) & d).size() >= 2) {
        rec.check(Claim::shared_responsibilities, (bd - g.neighbours(c)).size() <= k * a - 1,
                  tag + " c=" + std::to_string(c));
      }
    }

    VertexSet cd = ctx.c & d;
    VertexSet non_clique;
    for (Vertex c : cd) {
      if (!is_clique(g, g.neighbours(c))) non_clique.insert(c);
    }
    if (!non_clique.empty()) {
      rec.check(Claim::most_neighbourhoods_cliques, max_spread_subset(dist, non_clique, 3) <= (k + 1) * (k + 1) - 1,
                tag);
    }

    if (!cd.empty()) {
      int close = 0;
      for (Vertex c : cd) {
        bool near = false;
        for (Vertex c2 : cd) near = near || (c2 != c && dist.at(c, c2) == 2);
        if (near) ++close;
      }
      rec.check(Claim::almost_all_distance_three, close <= 2 * a + (k + 1) * (k + 1) - 3, tag);
    }

    some_small_outside_c = some_small_outside_c || (d - ctx.c).size() <= (k + 2) * a;
    some_mostly_regular = some_mostly_regular || (d - ctx.regular).size() <= ctx.f_k;
  }

  rec.check(Claim::most_in_c, some_small_outside_c, "no minimum D with |D \\ C| <= (k+2)|A|");
  rec.check(Claim::most_regular, some_mostly_regular, "no minimum D with |D \\ R| <= f(k)");
}

}  // namespace

InstanceClaims check_claims(const Graph& g, int k) {
  InstanceClaims out;
  if (k < 1 || g.order() > kClaimMaxOrder || !is_connected(g)) return out;
  if (!is_free(g, PatternSpec::p3_plus_p2(k))) return out;
  auto a = find_induced(g, PatternSpec::p3_plus_p2(k - 1));
  if (!a) return out;
  out.in_scope = true;
  Recorder rec(out);

  const DistanceMatrix dist = distances(g);
  StructuralContext ctx;
  try {
    ctx = analyse(g, k, dist);
  } catch (const StructuralViolation& e) {
    rec.check(Claim::partition, false, e.what());
    return out;
  }
  const bool disjoint = !ctx.a.intersects(ctx.b) && !ctx.a.intersects(ctx.c) && !ctx.b.intersects(ctx.c);
  rec.check(Claim::partition, disjoint && (ctx.a | ctx.b | ctx.c) == g.vertices(), "A/B/C");
  rec.check(Claim::c_stable, is_stable(g, ctx.c), "C=" + ctx.c.to_string());

  const std::vector<VertexSet> min_sets = enumerate_min_ds(g);
  const bool yes_instance = decide_bruteforce(g).yes();
  out.no_instance = !yes_instance;

  check_regular_claims(g, ctx, dist, min_sets, yes_instance, rec);
  if (!yes_instance) check_no_instance_claims(g, ctx, dist, min_sets, rec);
  return out;
}

void ClaimSummary::add(int index, const Graph& g, const InstanceClaims& r) {
  ++instances;
  if (!r.in_scope) return;
  ++in_scope;
  if (r.no_instance) ++no_instances;
  for (std::size_t i = 0; i < kClaimCount; ++i) {
    switch (r.outcomes[i]) {
      case Outcome::vacuous:
        ++tallies[i].vacuous;
        break;
      case Outcome::passed:
        ++tallies[i].passed;
        break;
      case Outcome::violated:
        ++tallies[i].violated;
        break;
    }
  }
  for (const auto& f : r.failures) {
    violations.push_back({index, std::string(to_string(f.claim)), f.detail, format_edge_list(g)});
  }
}

long ClaimSummary::violation_count() const {
  long total = 0;
  for (const auto& t : tallies) total += t.violated;
  return total;
}

}  // namespace contractdom
