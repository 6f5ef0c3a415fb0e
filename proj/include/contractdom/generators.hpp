#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "contractdom/graph.hpp"

namespace contractdom {

enum class Family { path, cycle, complete, star, complete_bipartite };

Family family_from_string(std::string_view name);
std::string_view to_string(Family f);

/// Standard graphs. Paths and cycles are labelled in order, the star's
/// centre is 0. complete_bipartite builds K_{n,m} with parts {0..n-1} and
/// {n..n+m-1}; the other families ignore m.
Graph named(Family family, int n, int m = 0);

/// Every connected labelled graph on n vertices, each once, in increasing
/// edge-mask order (bit i of the mask is the i-th pair of the lexicographic
/// pair list). n = 7 needs allow_large.
class ConnectedGraphs {
 public:
  explicit ConnectedGraphs(int n, bool allow_large = false);
  std::optional<Graph> next();

 private:
  int n_;
  std::vector<Edge> pairs_;
  std::uint64_t mask_ = 0;
  std::uint64_t end_;
};

std::vector<Graph> exhaustive_connected(int n, bool allow_large = false);

/// Name of the pseudo-random scheme recorded in corpus metadata.
inline constexpr std::string_view kRngName = "splitmix64-seeded mt19937_64";

/// SplitMix64 output for the given state (one step).
std::uint64_t splitmix64(std::uint64_t state);

/// Deterministic random source: mt19937_64 seeded through SplitMix64.
/// Uniform doubles take the top 53 bits so results do not depend on the
/// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}
  /// Independent stream for sub-task `index`.
  Rng split(std::uint64_t index) const;
  std::uint64_t next() { return engine_(); }
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  int uniform_int(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  explicit Rng(std::mt19937_64 engine) : engine_(engine) {}
  std::mt19937_64 engine_;
};

/// One G(n, p) draw (pairs visited in lexicographic order).
Graph random_gnp(int n, double p, Rng& rng);

/// Rejection sampling: the first of up to `budget` G(n, p) draws that is
/// connected and P3+kP2-free, or nullopt.
std::optional<Graph> random_free_connected(int n, double p, int k, std::uint64_t seed, int budget = 10000);

enum class GeneratorKind { named, exhaustive, random_gnp, random_free };

GeneratorKind generator_kind_from_string(std::string_view name);
std::string_view to_string(GeneratorKind k);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::random_free;
  Family family = Family::path;  // named only
  int n = 6;                     // largest order
  int n_min = 0;                 // smallest order; 0 means n
  int m = 0;                     // second part for complete_bipartite
  double p = 0.5;
  double p_max = 0.0;  // edge probability drawn from [p, p_max]; 0 means p
  int k = 1;
  std::uint64_t seed = 0;
  int count = 100;  // random kinds: instances wanted; exhaustive: 0 = all
  int budget = 10000;
  bool require_free = false;  // named/exhaustive/gnp: keep only P3+kP2-free graphs
  bool allow_large = false;

  int smallest_order() const { return n_min > 0 ? n_min : n; }
  double largest_p() const { return p_max > 0.0 ? p_max : p; }
  bool operator==(const GeneratorSpec&) const = default;
};

std::string to_json_string(const GeneratorSpec& spec);
GeneratorSpec spec_from_json_string(const std::string& text);

struct Instance {
  int index = 0;
  Graph graph = Graph::from_edge_list(1, {});
  /// True when P3+kP2-freeness was verified during generation.
  bool free_checked = false;
};

/// Single-consumer stream of instances for a spec. Identical specs produce
/// identical streams.
class InstanceStream {
 public:
  explicit InstanceStream(GeneratorSpec spec);
  std::optional<Instance> next();

  /// Random kinds: sampling attempts made and attempts whose budget ran out.
  int attempts() const { return attempts_; }
  int exhausted() const { return exhausted_; }

 private:
  std::optional<Graph> next_exhaustive();
  std::optional<Graph> next_random();

  GeneratorSpec spec_;
  int yielded_ = 0;
  int attempts_ = 0;
  int exhausted_ = 0;
  bool named_done_ = false;
  int current_n_ = 0;
  std::optional<ConnectedGraphs> enumerator_;
};

/// One manifest line: {"spec", "index", "n", "m", "edges", "free_checked"}.
std::string manifest_line(const GeneratorSpec& spec, const Instance& instance);

}  // namespace contractdom
