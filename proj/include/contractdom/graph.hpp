#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "contractdom/error.hpp"

namespace contractdom {

using Vertex = int;

/// Vertex sets are 64-bit masks; graphs are limited to this many vertices.
inline constexpr int kMaxVertices = 64;

/// A subset of {0, ..., 63} with bitset semantics.
class VertexSet {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr Iterator() = default;
    constexpr explicit Iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vertices);

  /// {0, ..., n-1}.
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet singleton(Vertex v) { return VertexSet(std::uint64_t{1} << v); }
  static VertexSet from_vector(std::span<const Vertex> vertices);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  /// Smallest member; undefined on the empty set.
  constexpr Vertex front() const { return std::countr_zero(bits_); }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<Vertex> to_vector() const;
  /// "{0, 2, 5}".
  std::string to_string() const;

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr bool operator==(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending member lists of two sets.
bool lex_less(VertexSet a, VertexSet b);

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr auto operator<=>(const Edge&) const = default;
  constexpr VertexSet ends() const { return VertexSet::singleton(u) | VertexSet::singleton(v); }
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  /// Builds a graph from an edge list; duplicate edges (in either orientation)
  /// are merged. Throws PreconditionError on out-of-range ids, self-loops,
  /// n < 1 or n > kMaxVertices.
  static Graph from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  static Graph from_edge_list(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return edge_count_; }
  VertexSet vertices() const { return VertexSet::range(order()); }

  VertexSet neighbours(Vertex v) const { return adjacency_[v]; }
  VertexSet closed_neighbours(Vertex v) const { return adjacency_[v] | VertexSet::singleton(v); }
  /// Union of open neighbourhoods of the members of s (may intersect s).
  VertexSet neighbours(VertexSet s) const;
  /// N[s] = s plus all vertices adjacent to s.
  VertexSet closed_neighbours(VertexSet s) const { return neighbours(s) | s; }
  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].contains(v); }
  bool has_edge(Edge e) const { return e.v < order() && adjacent(e.u, e.v); }
  int degree(Vertex v) const { return adjacency_[v].size(); }

  /// All edges sorted lexicographically.
  std::vector<Edge> edges() const;
  /// Edges with both ends in s, sorted lexicographically.
  std::vector<Edge> edges_within(VertexSet s) const;

  bool operator==(const Graph&) const = default;

 private:
  explicit Graph(std::vector<VertexSet> adjacency, int edge_count)
      : adjacency_(std::move(adjacency)), edge_count_(edge_count) {}

  std::vector<VertexSet> adjacency_;
  int edge_count_ = 0;
};

/// Result of contracting an edge: the new graph plus where each old id went.
struct Contraction {
  Graph graph;
  /// rename[old] = id in graph. Both ends of the edge map to the merged vertex.
  std::vector<Vertex> rename;
};

/// G/e for e = uv with u < v: the merged vertex keeps id u, vertex v is
/// removed and every id above v shifts down by one. Throws PreconditionError
/// when e is not an edge.
Contraction contract_edge(const Graph& g, Edge e);

/// All-pairs hop distances.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  explicit DistanceMatrix(const Graph& g);

  int order() const { return n_; }
  /// Hop count, or kUnreachable.
  int at(Vertex x, Vertex y) const { return d_[static_cast<std::size_t>(x) * n_ + y]; }
  /// True when y is reachable from x in at least `bound` hops, treating
  /// unreachable pairs as infinitely far.
  bool at_least(Vertex x, Vertex y, int bound) const {
    int d = at(x, y);
    return d == kUnreachable || d >= bound;
  }

 private:
  int n_;
  std::vector<int> d_;
};

DistanceMatrix distances(const Graph& g);

/// Hop distance from each vertex to the nearest member of `sources`
/// (DistanceMatrix::kUnreachable when none is reachable).
std::vector<int> distances_from(const Graph& g, VertexSet sources);

bool is_clique(const Graph& g, VertexSet s);
bool is_stable(const Graph& g, VertexSet s);
bool is_connected(const Graph& g);
bool is_dominating(const Graph& g, VertexSet d);

/// Edge-list text: "n m", then m lines "u v". Blank lines and lines whose
/// first non-blank character is '#' are ignored. Throws ParseError.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);

}  // namespace contractdom
