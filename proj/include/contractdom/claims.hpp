#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "contractdom/graph.hpp"

namespace contractdom {

/// Structural facts about P3+kP2-free graphs containing an induced
/// P3+(k-1)P2, checked on concrete instances. The conditional ones
/// (only_one_pn_in_c onwards) apply to no-instances only.
enum class Claim {
  partition,               // A, B, C partition V(G)
  c_stable,                // C is a stable set
  vertex_completeness,     // v next to N(c1) is complete to N(c) for some c ∈ ℛ
  one_vertex_per_regular,  // |D ∩ N[c]| = 1 for every minimum D and c ∈ ℛ
  no_common_neighbour,     // regular vertices share no neighbour
  distance_three_yes,      // two regular vertices at distance 3 force a yes-instance
  neighbourhood_shift,     // swapping N[c_i] ∩ D for b_i keeps D minimum dominating
  only_one_pn_in_c,        // |B ∩ D| <= k|A| when some b0 has two private neighbours in C
  shared_responsibilities, // c with two D-neighbours misses at most k|A|-1 of B ∩ D
  few_without_pn,          // |B ∩ D| <= (k+1)|A|-1 when |A| members lack C-private neighbours
  b_cap_d_small,           // |B ∩ D| <= (k+1)|A| under a non-adjacent private pair
  most_in_c,               // some minimum D has |D \ C| <= (k+2)|A|
  most_neighbourhoods_cliques,  // spread non-clique members of C ∩ D number <= (k+1)^2-1
  almost_all_distance_three,    // members of C ∩ D at distance 2 from another <= 2|A|+(k+1)^2-3
  most_regular,                 // some minimum D has |D \ ℛ| <= f(k)
};

inline constexpr std::size_t kClaimCount = 15;

std::string_view to_string(Claim c);

enum class Outcome { vacuous, passed, violated };

struct InstanceClaims {
  /// False when the instance is outside the hypotheses (disconnected, not
  /// P3+kP2-free, no induced P3+(k-1)P2, or too large to enumerate).
  bool in_scope = false;
  bool no_instance = false;
  std::array<Outcome, kClaimCount> outcomes{};
  struct Failure {
    Claim claim;
    std::string detail;
  };
  std::vector<Failure> failures;
};

/// Instances above this order are skipped (minimum dominating sets are enumerated).
inline constexpr int kClaimMaxOrder = 14;

InstanceClaims check_claims(const Graph& g, int k);

struct ClaimTally {
  long passed = 0;
  long violated = 0;
  long vacuous = 0;
};

struct ClaimViolation {
  int index = 0;
  std::string claim;
  std::string detail;
  std::string edge_list;
};

struct ClaimSummary {
  long instances = 0;
  long in_scope = 0;
  long no_instances = 0;
  std::array<ClaimTally, kClaimCount> tallies{};
  std::vector<ClaimViolation> violations;

  void add(int index, const Graph& g, const InstanceClaims& r);
  long violation_count() const;
};

}  // namespace contractdom
