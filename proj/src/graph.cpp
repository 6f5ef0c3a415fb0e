#include "contractdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>

namespace contractdom {

VertexSet::VertexSet(std::initializer_list<Vertex> vertices) {
  for (Vertex v : vertices) insert(v);
}

VertexSet VertexSet::from_vector(std::span<const Vertex> vertices) {
  VertexSet s;
  for (Vertex v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw PreconditionError("vertex id out of range: " + std::to_string(v));
    s.insert(v);
  }
  return s;
}

std::vector<Vertex> VertexSet::to_vector() const { return {begin(), end()}; }

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Vertex v : *this) {
    if (!first) out += ", ";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

bool lex_less(VertexSet a, VertexSet b) {
  std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  int x = std::countr_zero(diff);
  // Both lists agree on every member below x. The list that holds x is
  // smaller unless the other one has already ended (is a proper prefix).
  std::uint64_t above = ~std::uint64_t{0} << x;
  if (a.contains(x)) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                              std::to_string(n));
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    es.emplace_back(u, v);
  }
  return from_edges(n, es);
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 1) throw PreconditionError("graph must have at least one vertex");
  if (n > kMaxVertices) throw PreconditionError("graph has more than " + std::to_string(kMaxVertices) + " vertices");
  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  int m = 0;
  for (Edge e : edges) {
    if (e.u < 0 || e.v >= n) throw PreconditionError("edge out of range");
    if (e.u == e.v) throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
    if (adj[e.u].contains(e.v)) continue;
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
    ++m;
  }
  return Graph(std::move(adj), m);
}

VertexSet Graph::neighbours(VertexSet s) const {
  VertexSet out;
  for (Vertex v : s) out |= adjacency_[v];
  return out;
}

std::vector<Edge> Graph::edges() const { return edges_within(vertices()); }

std::vector<Edge> Graph::edges_within(VertexSet s) const {
  std::vector<Edge> out;
  for (Vertex u : s) {
    for (Vertex v : adjacency_[u] & s) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Contraction contract_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e))
    throw PreconditionError("(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
  const int n = g.order();
  std::vector<Vertex> rename(static_cast<std::size_t>(n));
  for (Vertex x = 0; x < n; ++x) rename[x] = x < e.v ? x : x - 1;
  rename[e.v] = e.u;

  std::vector<Edge> edges;
  for (Edge f : g.edges()) {
    Vertex a = rename[f.u];
    Vertex b = rename[f.v];
    if (a != b) edges.emplace_back(a, b);
  }
  return {Graph::from_edges(n - 1, edges), std::move(rename)};
}

std::vector<int> distances_from(const Graph& g, VertexSet sources) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), DistanceMatrix::kUnreachable);
  VertexSet frontier = sources;
  VertexSet seen = sources;
  int level = 0;
  while (!frontier.empty()) {
    for (Vertex v : frontier) dist[v] = level;
    frontier = g.neighbours(frontier) - seen;
    seen |= frontier;
    ++level;
  }
  return dist;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()), d_(static_cast<std::size_t>(n_) * n_) {
  for (Vertex x = 0; x < n_; ++x) {
    auto row = distances_from(g, VertexSet::singleton(x));
    std::copy(row.begin(), row.end(), d_.begin() + static_cast<std::ptrdiff_t>(x) * n_);
  }
}

DistanceMatrix distances(const Graph& g) { return DistanceMatrix(g); }

bool is_clique(const Graph& g, VertexSet s) {
  for (Vertex v : s) {
    if (!(s - VertexSet::singleton(v)).is_subset_of(g.neighbours(v))) return false;
  }
  return true;
}

bool is_stable(const Graph& g, VertexSet s) {
  for (Vertex v : s) {
    if (g.neighbours(v).intersects(s)) return false;
  }
  return true;
}

bool is_connected(const Graph& g) {
  VertexSet seen = VertexSet::singleton(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    frontier = g.neighbours(frontier) - seen;
    seen |= frontier;
  }
  return seen == g.vertices();
}

bool is_dominating(const Graph& g, VertexSet d) { return g.closed_neighbours(d) == g.vertices(); }

namespace {

// Next line that is neither blank nor a comment; false at end of input.
bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no)) throw ParseError("empty input: expected header \"n m\"");
  long long n = 0;
  long long m = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra)) parse_fail(line_no, "expected header \"n m\"");
  }
  if (n < 1 || n > kMaxVertices) parse_fail(line_no, "vertex count must lie in [1, 64]");
  if (m < 0) parse_fail(line_no, "negative edge count");

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, line_no))
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    std::istringstream row(line);
    long long u = 0;
    long long v = 0;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) parse_fail(line_no, "expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n) parse_fail(line_no, "vertex id out of range");
    if (u == v) parse_fail(line_no, "self-loop");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_content_line(in, line, line_no)) parse_fail(line_no, "unexpected content after the edge list");
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (Edge e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace contractdom
