#include "contractdom/generators.hpp"

#include <array>

#include <json.hpp>

#include "contractdom/structure.hpp"

namespace contractdom {

Family family_from_string(std::string_view name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "star") return Family::star;
  if (name == "complete_bipartite" || name == "complete-bipartite") return Family::complete_bipartite;
  throw PreconditionError("unknown graph family: " + std::string(name));
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::path:
      return "path";
    case Family::cycle:
      return "cycle";
    case Family::complete:
      return "complete";
    case Family::star:
      return "star";
    case Family::complete_bipartite:
      return "complete_bipartite";
  }
  return "unknown";
}

Graph named(Family family, int n, int m) {
  std::vector<Edge> edges;
  auto need = [&](int minimum) {
    if (n < minimum)
      throw PreconditionError(std::string(to_string(family)) + " needs n >= " + std::to_string(minimum));
  };
  switch (family) {
    case Family::path:
      need(1);
      for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      return Graph::from_edges(n, edges);
    case Family::cycle:
      need(3);
      for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
      return Graph::from_edges(n, edges);
    case Family::complete:
      need(1);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      return Graph::from_edges(n, edges);
    case Family::star:
      need(1);
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
      return Graph::from_edges(n, edges);
    case Family::complete_bipartite:
      need(1);
      if (m < 1) throw PreconditionError("complete_bipartite needs m >= 1");
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = n; v < n + m; ++v) edges.emplace_back(u, v);
      return Graph::from_edges(n + m, edges);
  }
  throw PreconditionError("unknown graph family");
}

ConnectedGraphs::ConnectedGraphs(int n, bool allow_large) : n_(n) {
  if (n < 1) throw PreconditionError("exhaustive enumeration needs n >= 1");
  if (n > 7) throw PreconditionError("exhaustive enumeration is limited to n <= 7");
  if (n == 7 && !allow_large) throw PreconditionError("n = 7 (2^21 edge masks) requires allow_large");
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);
  end_ = std::uint64_t{1} << pairs_.size();
}

std::optional<Graph> ConnectedGraphs::next() {
  std::array<std::uint64_t, 8> adj{};
  while (mask_ < end_) {
    const std::uint64_t mask = mask_++;
    adj.fill(0);
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if ((mask >> i) & 1U) {
        adj[pairs_[i].u] |= std::uint64_t{1} << pairs_[i].v;
        adj[pairs_[i].v] |= std::uint64_t{1} << pairs_[i].u;
      }
    }
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != VertexSet::range(n_).bits()) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if ((mask >> i) & 1U) edges.push_back(pairs_[i]);
    }
    return Graph::from_edges(n_, edges);
  }
  return std::nullopt;
}

std::vector<Graph> exhaustive_connected(int n, bool allow_large) {
  ConnectedGraphs gen(n, allow_large);
  std::vector<Graph> out;
  while (auto g = gen.next()) out.push_back(std::move(*g));
  return out;
}

std::uint64_t splitmix64(std::uint64_t state) {
  std::uint64_t z = state + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rng Rng::split(std::uint64_t index) const {
  // Derived from a copy so the parent stream is not advanced.
  std::mt19937_64 probe = engine_;
  return Rng(std::mt19937_64(splitmix64(probe() ^ splitmix64(index))));
}

Graph random_gnp(int n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.uniform() < p) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

std::optional<Graph> random_free_connected(int n, double p, int k, std::uint64_t seed, int budget) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  Rng rng(seed);
  const PatternSpec excluded = PatternSpec::p3_plus_p2(k);
  for (int attempt = 0; attempt < budget; ++attempt) {
    Graph g = random_gnp(n, p, rng);
    if (is_connected(g) && is_free(g, excluded)) return g;
  }
  return std::nullopt;
}

GeneratorKind generator_kind_from_string(std::string_view name) {
  if (name == "named") return GeneratorKind::named;
  if (name == "exhaustive") return GeneratorKind::exhaustive;
  if (name == "random-gnp" || name == "random_gnp") return GeneratorKind::random_gnp;
  if (name == "random-free" || name == "random_free") return GeneratorKind::random_free;
  throw PreconditionError("unknown generator kind: " + std::string(name));
}

std::string_view to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::named:
      return "named";
    case GeneratorKind::exhaustive:
      return "exhaustive";
    case GeneratorKind::random_gnp:
      return "random-gnp";
    case GeneratorKind::random_free:
      return "random-free";
  }
  return "unknown";
}

namespace {

nlohmann::ordered_json spec_json(const GeneratorSpec& s) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(s.kind);
  j["family"] = to_string(s.family);
  j["n"] = s.n;
  j["n_min"] = s.smallest_order();
  j["m"] = s.m;
  j["p"] = s.p;
  j["p_max"] = s.largest_p();
  j["k"] = s.k;
  j["seed"] = s.seed;
  j["count"] = s.count;
  j["budget"] = s.budget;
  j["require_free"] = s.require_free;
  j["allow_large"] = s.allow_large;
  j["rng"] = kRngName;
  return j;
}

}  // namespace

std::string to_json_string(const GeneratorSpec& spec) { return spec_json(spec).dump(); }

GeneratorSpec spec_from_json_string(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  GeneratorSpec s;
  s.kind = generator_kind_from_string(j.at("kind").get<std::string>());
  s.family = family_from_string(j.value("family", std::string("path")));
  s.n = j.at("n").get<int>();
  s.n_min = j.value("n_min", 0);
  s.m = j.value("m", 0);
  s.p = j.value("p", 0.5);
  s.p_max = j.value("p_max", 0.0);
  s.k = j.value("k", 1);
  s.seed = j.value("seed", std::uint64_t{0});
  s.count = j.value("count", 100);
  s.budget = j.value("budget", 10000);
  s.require_free = j.value("require_free", false);
  s.allow_large = j.value("allow_large", false);
  if (s.n_min == s.n) s.n_min = 0;
  if (s.p_max == s.p) s.p_max = 0.0;
  return s;
}

InstanceStream::InstanceStream(GeneratorSpec spec) : spec_(spec), current_n_(spec.smallest_order()) {
  if (spec_.smallest_order() > spec_.n) throw PreconditionError("n_min exceeds n");
  if (spec_.k < 1 && (spec_.kind == GeneratorKind::random_free || spec_.require_free))
    throw PreconditionError("k must be at least 1");
}

std::optional<Graph> InstanceStream::next_exhaustive() {
  while (current_n_ <= spec_.n) {
    if (!enumerator_) enumerator_.emplace(current_n_, spec_.allow_large);
    if (auto g = enumerator_->next()) return g;
    enumerator_.reset();
    ++current_n_;
  }
  return std::nullopt;
}

std::optional<Graph> InstanceStream::next_random() {
  // Each attempt owns a split stream, so instance i does not depend on how
  // many draws earlier attempts consumed.
  const Rng root(spec_.seed);
  const PatternSpec excluded = PatternSpec::p3_plus_p2(std::max(spec_.k, 1));
  while (yielded_ < spec_.count && exhausted_ < std::max(spec_.count, 1)) {
    Rng rng = root.split(static_cast<std::uint64_t>(attempts_));
    ++attempts_;
    const int n = rng.uniform_int(spec_.smallest_order(), spec_.n);
    const double p = spec_.p + (spec_.largest_p() - spec_.p) * rng.uniform();
    for (int trial = 0; trial < spec_.budget; ++trial) {
      Graph g = random_gnp(n, p, rng);
      if (!is_connected(g)) continue;
      if ((spec_.kind == GeneratorKind::random_free || spec_.require_free) && !is_free(g, excluded)) continue;
      return g;
    }
    ++exhausted_;
  }
  return std::nullopt;
}

std::optional<Instance> InstanceStream::next() {
  const bool check_free = spec_.kind == GeneratorKind::random_free || spec_.require_free;
  while (true) {
    std::optional<Graph> g;
    switch (spec_.kind) {
      case GeneratorKind::named:
        if (named_done_) return std::nullopt;
        named_done_ = true;
        g = named(spec_.family, spec_.n, spec_.m);
        break;
      case GeneratorKind::exhaustive:
        if (spec_.count > 0 && yielded_ >= spec_.count) return std::nullopt;
        g = next_exhaustive();
        break;
      case GeneratorKind::random_gnp:
      case GeneratorKind::random_free:
        g = next_random();
        break;
    }
    if (!g) return std::nullopt;
    if (check_free && spec_.kind != GeneratorKind::random_free && !is_free(*g, PatternSpec::p3_plus_p2(spec_.k)))
      continue;
    Instance inst{yielded_++, std::move(*g), check_free};
    return inst;
  }
}

std::string manifest_line(const GeneratorSpec& spec, const Instance& instance) {
  nlohmann::ordered_json j;
  j["spec"] = spec_json(spec);
  j["index"] = instance.index;
  j["n"] = instance.graph.order();
  j["m"] = instance.graph.edge_count();
  auto edges = nlohmann::ordered_json::array();
  for (Edge e : instance.graph.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  j["free_checked"] = instance.free_checked;
  return j.dump();
}

}  // namespace contractdom
