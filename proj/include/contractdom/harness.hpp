#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "contractdom/claims.hpp"
#include "contractdom/decision.hpp"
#include "contractdom/generators.hpp"

namespace contractdom {

/// Worker count: CONTRACTDOM_THREADS when set (>= 1), else the hardware
/// concurrency.
unsigned default_threads();

/// Runs work(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& work);

struct Disagreement {
  int index = 0;
  std::string edge_list;
  std::map<std::string, std::string> answers;  // method -> "yes"/"no"/"error: ..."
};

struct CrosscheckSummary {
  long instances = 0;
  long agree = 0;
  long disagree = 0;
  long skipped = 0;  // structural method selected but the instance is outside its class
  std::map<std::string, std::map<std::string, long>> tallies;  // method -> answer -> count
  std::vector<Disagreement> disagreements;
  int attempts = 0;
  int exhausted = 0;
};

/// Runs every selected method on each instance of the corpus. The
/// structural method is decide_driver(G, spec.k).
CrosscheckSummary run_crosscheck(const GeneratorSpec& spec, const std::vector<Method>& methods,
                                 unsigned threads = default_threads());

ClaimSummary run_claims(const GeneratorSpec& spec, int k, unsigned threads = default_threads());

/// Corpus items are pulled from the stream in batches of this size and
/// processed concurrently; results are folded in stream order.
inline constexpr std::size_t kBatchSize = 2048;

}  // namespace contractdom
