#pragma once

#include "contractdom/decision.hpp"
#include "contractdom/graph.hpp"

namespace contractdom {

/// Tries every contraction: yes iff some γ(G/e) < γ(G). The witness is the
/// lexicographically smallest such edge. K1 answers no (nothing to contract).
/// Throws PreconditionError on disconnected input.
Decision decide_bruteforce(const Graph& g);

/// Yes iff some minimum dominating set is not a stable set.
Decision decide_characterization(const Graph& g);

struct CrossCheck {
  Decision bruteforce;
  Decision characterization;
  bool agree() const { return bruteforce.answer == characterization.answer; }
};

CrossCheck crosscheck(const Graph& g);

}  // namespace contractdom
