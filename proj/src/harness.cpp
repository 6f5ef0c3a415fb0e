#include "contractdom/harness.hpp"

#include <atomic>
#include <cstdlib>
#include <optional>
#include <thread>

#include "contractdom/oracle.hpp"
#include "contractdom/polyalgo.hpp"
#include "contractdom/structure.hpp"

namespace contractdom {

unsigned default_threads() {
  if (const char* env = std::getenv("CONTRACTDOM_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& work) {
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) work(i);
    });
  }
}

namespace {

// Pulls the stream in batches, maps each batch in parallel, folds in order.
template <typename Result, typename Map, typename Fold>
void run_batched(InstanceStream& stream, unsigned threads, Map map, Fold fold) {
  std::vector<Instance> batch;
  std::vector<Result> results;
  bool more = true;
  while (more) {
    batch.clear();
    while (batch.size() < kBatchSize) {
      auto inst = stream.next();
      if (!inst) {
        more = false;
        break;
      }
      batch.push_back(std::move(*inst));
    }
    results.assign(batch.size(), Result{});
    parallel_for(batch.size(), threads, [&](std::size_t i) { results[i] = map(batch[i]); });
    for (std::size_t i = 0; i < batch.size(); ++i) fold(batch[i], results[i]);
  }
}

struct MethodRun {
  std::string answer;  // "yes", "no", "skipped", "error: ..."
};

}  // namespace

CrosscheckSummary run_crosscheck(const GeneratorSpec& spec, const std::vector<Method>& methods, unsigned threads) {
  CrosscheckSummary summary;
  InstanceStream stream(spec);
  const PatternSpec excluded = PatternSpec::p3_plus_p2(std::max(spec.k, 1));

  auto map = [&](const Instance& inst) {
    std::vector<MethodRun> runs;
    const Graph& g = inst.graph;
    const bool in_class = inst.free_checked || is_free(g, excluded);
    for (Method m : methods) {
      try {
        Decision d;
        switch (m) {
          case Method::bruteforce:
            d = decide_bruteforce(g);
            break;
          case Method::characterization:
            d = decide_characterization(g);
            break;
          case Method::structural:
            if (!in_class) {
              runs.push_back({"skipped"});
              continue;
            }
            d = decide_driver(g, std::max(spec.k, 1), StructuralOptions{.verify_free = false});
            break;
        }
        runs.push_back({std::string(to_string(d.answer))});
      } catch (const std::exception& e) {
        runs.push_back({std::string("error: ") + e.what()});
      }
    }
    return runs;
  };

  auto fold = [&](const Instance& inst, const std::vector<MethodRun>& runs) {
    ++summary.instances;
    std::optional<std::string> first;
    bool agree = true;
    bool skipped = false;
    for (std::size_t i = 0; i < methods.size(); ++i) {
      const std::string& ans = runs[i].answer;
      ++summary.tallies[std::string(to_string(methods[i]))][ans.rfind("error", 0) == 0 ? "error" : ans];
      if (ans == "skipped") {
        skipped = true;
        continue;
      }
      if (!first) first = ans;
      agree = agree && ans == *first && ans.rfind("error", 0) != 0;
    }
    if (skipped) ++summary.skipped;
    if (agree) {
      ++summary.agree;
      return;
    }
    ++summary.disagree;
    Disagreement dis{inst.index, format_edge_list(inst.graph), {}};
    for (std::size_t i = 0; i < methods.size(); ++i) dis.answers[std::string(to_string(methods[i]))] = runs[i].answer;
    summary.disagreements.push_back(std::move(dis));
  };

  run_batched<std::vector<MethodRun>>(stream, threads, map, fold);
  summary.attempts = stream.attempts();
  summary.exhausted = stream.exhausted();
  return summary;
}

ClaimSummary run_claims(const GeneratorSpec& spec, int k, unsigned threads) {
  ClaimSummary summary;
  InstanceStream stream(spec);
  run_batched<InstanceClaims>(
      stream, threads, [&](const Instance& inst) { return check_claims(inst.graph, k); },
      [&](const Instance& inst, const InstanceClaims& r) { summary.add(inst.index, inst.graph, r); });
  return summary;
}

}  // namespace contractdom
