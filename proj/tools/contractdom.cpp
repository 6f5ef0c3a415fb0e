// contractdom: decide whether one edge contraction lowers the domination
// number, compute γ, generate corpora and cross-check the deciders.
//
// Exit codes: 0 = yes / success, 1 = no / failed check, 2 = error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "contractdom/domination.hpp"
#include "contractdom/generators.hpp"
#include "contractdom/harness.hpp"
#include "contractdom/oracle.hpp"
#include "contractdom/polyalgo.hpp"
#include "contractdom/report.hpp"
#include "contractdom/structure.hpp"

namespace cd = contractdom;

namespace {

struct CommonFlags {
  bool json = false;
  bool timing = false;
};

struct CorpusFlags {
  std::string kind = "random-free";
  std::string family = "path";
  int n = 6;
  int n_min = 0;
  int m = 0;
  double p = 0.5;
  double p_max = 0.0;
  int k = 1;
  std::uint64_t seed = 0;
  int samples = 100;
  int budget = 10000;
  bool require_free = false;
  bool allow_large = false;

  cd::GeneratorSpec spec() const {
    cd::GeneratorSpec s;
    s.kind = cd::generator_kind_from_string(kind);
    s.family = cd::family_from_string(family);
    s.n = n;
    s.n_min = n_min == n ? 0 : n_min;
    s.m = m;
    s.p = p;
    s.p_max = p_max == p ? 0.0 : p_max;
    s.k = k;
    s.seed = seed;
    s.count = samples;
    s.budget = budget;
    s.require_free = require_free;
    s.allow_large = allow_large;
    return s;
  }
};

void add_corpus_flags(CLI::App* cmd, CorpusFlags& f) {
  cmd->add_option("--kind", f.kind, "named | exhaustive | random-gnp | random-free")->capture_default_str();
  cmd->add_option("--family", f.family, "path | cycle | complete | star | complete_bipartite (named)")
      ->capture_default_str();
  cmd->add_option("--n", f.n, "largest vertex count")->capture_default_str();
  cmd->add_option("--n-min", f.n_min, "smallest vertex count (default: --n)");
  cmd->add_option("--m", f.m, "second part size for complete_bipartite");
  cmd->add_option("--p", f.p, "edge probability (lower end of the range)")->capture_default_str();
  cmd->add_option("--p-max", f.p_max, "upper end of the edge probability range");
  cmd->add_option("--k", f.k, "pattern parameter: graphs are P3+kP2-free")->capture_default_str();
  cmd->add_option("--seed", f.seed, "random seed")->capture_default_str();
  cmd->add_option("--samples", f.samples, "instances to draw (exhaustive: 0 = all)")->capture_default_str();
  cmd->add_option("--budget", f.budget, "rejection-sampling attempts per instance")->capture_default_str();
  cmd->add_flag("--require-free", f.require_free, "keep only P3+kP2-free graphs (named/exhaustive/random-gnp)");
  cmd->add_flag("--allow-large", f.allow_large, "permit exhaustive enumeration at n = 7");
}

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_flag("--json", f.json, "print the report as JSON");
  cmd->add_flag("--timing", f.timing, "include elapsed time in the report");
}

cd::Graph load_graph(const std::string& path) {
  if (path == "-") return cd::read_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw cd::PreconditionError("cannot open " + path);
  return cd::read_edge_list(in);
}

int emit(cd::RunReport report, const CommonFlags& flags, std::chrono::steady_clock::time_point start) {
  if (flags.timing) {
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  std::cout << (flags.json ? cd::render_json(report) : cd::render_text(report));
  return report.exit_status;
}

int fail(const std::string& command, const std::string& digest, const std::string& message, cd::Json extra,
         const CommonFlags& flags) {
  std::cerr << "error: " << message << '\n';
  cd::RunReport report{command, digest, cd::Json::object(), cd::kExitError, std::nullopt};
  report.result["error"] = message;
  for (auto& [k, v] : extra.items()) report.result[k] = v;
  if (flags.json) std::cout << cd::render_json(report);
  return cd::kExitError;
}

int cmd_gamma(const std::string& input, const CommonFlags& flags) {
  auto start = std::chrono::steady_clock::now();
  cd::Graph g = load_graph(input);
  auto result = cd::gamma(g);
  cd::RunReport report{"gamma", cd::digest(g), cd::Json::object(), cd::kExitSuccess, std::nullopt};
  report.result["n"] = g.order();
  report.result["m"] = g.edge_count();
  report.result["gamma"] = result->gamma;
  report.result["witness"] = cd::to_json(result->witness);
  return emit(report, flags, start);
}

struct DecideFlags {
  std::string input;
  std::string method = "oracle";
  std::optional<int> k;
  bool skip_free_check = false;
  bool verify_witness = false;
};

int cmd_decide(const DecideFlags& f, const CommonFlags& flags) {
  auto start = std::chrono::steady_clock::now();
  cd::Graph g = load_graph(f.input);
  const std::string dig = cd::digest(g);
  const cd::Method method = cd::method_from_string(f.method);
  cd::Decision d;
  switch (method) {
    case cd::Method::bruteforce:
      d = cd::decide_bruteforce(g);
      break;
    case cd::Method::characterization:
      d = cd::decide_characterization(g);
      break;
    case cd::Method::structural: {
      if (!f.k) return fail("decide", dig, "--k is required for the structural method", {}, flags);
      if (!cd::is_connected(g)) return fail("decide", dig, "graph is not connected", {}, flags);
      if (!f.skip_free_check) {
        auto pattern = cd::PatternSpec::p3_plus_p2(*f.k);
        if (auto hit = cd::find_induced(g, pattern)) {
          cd::Json extra;
          extra["pattern"] = pattern.name();
          extra["induced_witness"] = cd::to_json(*hit);
          return fail("decide", dig, "graph is not " + pattern.name() + "-free; use --method oracle", extra, flags);
        }
      }
      cd::StructuralOptions options;
      options.verify_free = false;
      options.verify_witness = f.verify_witness;
      d = cd::decide_driver(g, *f.k, options);
      break;
    }
  }
  cd::RunReport report{"decide", dig, cd::to_json(d), d.yes() ? cd::kExitYes : cd::kExitNo, std::nullopt};
  return emit(report, flags, start);
}

std::vector<cd::Method> parse_methods(const std::string& list) {
  std::vector<cd::Method> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(cd::method_from_string(item));
  }
  if (out.empty()) throw cd::PreconditionError("no methods selected");
  return out;
}

int cmd_crosscheck(const CorpusFlags& corpus, const std::string& methods, const std::string& dump_dir,
                   const CommonFlags& flags) {
  auto start = std::chrono::steady_clock::now();
  const cd::GeneratorSpec spec = corpus.spec();
  auto summary = cd::run_crosscheck(spec, parse_methods(methods));
  if (!dump_dir.empty()) {
    std::filesystem::create_directories(dump_dir);
    for (const auto& d : summary.disagreements) {
      std::ofstream out(std::filesystem::path(dump_dir) / ("disagreement_" + std::to_string(d.index) + ".txt"));
      out << "# answers:";
      for (const auto& [m, a] : d.answers) out << ' ' << m << '=' << a;
      out << '\n' << d.edge_list;
    }
  }
  cd::RunReport report{"crosscheck", cd::digest(cd::to_json_string(spec)), cd::Json::object(),
                       summary.disagree == 0 ? cd::kExitSuccess : cd::kExitFailure, std::nullopt};
  report.result["spec"] = cd::Json::parse(cd::to_json_string(spec));
  report.result["methods"] = methods;
  report.result["summary"] = cd::to_json(summary);
  return emit(report, flags, start);
}

int cmd_check_claims(const CorpusFlags& corpus, const CommonFlags& flags) {
  auto start = std::chrono::steady_clock::now();
  const cd::GeneratorSpec spec = corpus.spec();
  auto summary = cd::run_claims(spec, corpus.k);
  cd::RunReport report{"check-claims", cd::digest(cd::to_json_string(spec)), cd::Json::object(),
                       summary.violation_count() == 0 ? cd::kExitSuccess : cd::kExitFailure, std::nullopt};
  report.result["spec"] = cd::Json::parse(cd::to_json_string(spec));
  report.result["k"] = corpus.k;
  report.result["summary"] = cd::to_json(summary);
  return emit(report, flags, start);
}

int cmd_generate(const CorpusFlags& corpus, const std::string& output, const CommonFlags& flags) {
  auto start = std::chrono::steady_clock::now();
  const cd::GeneratorSpec spec = corpus.spec();
  cd::InstanceStream stream(spec);
  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) throw cd::PreconditionError("cannot write " + output);
  }
  std::ostream& out = output.empty() ? std::cout : file;
  long count = 0;
  while (auto inst = stream.next()) {
    out << cd::manifest_line(spec, *inst) << '\n';
    ++count;
  }
  if (output.empty()) return cd::kExitSuccess;
  cd::RunReport report{"generate", cd::digest(cd::to_json_string(spec)), cd::Json::object(), cd::kExitSuccess,
                       std::nullopt};
  report.result["output"] = output;
  report.result["instances"] = count;
  report.result["sampling_attempts"] = stream.attempts();
  report.result["sampling_exhausted"] = stream.exhausted();
  return emit(report, flags, start);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"contractdom: does contracting one edge lower the domination number?"};
  app.require_subcommand(1);
  CommonFlags common;

  std::string gamma_input;
  auto* gamma_cmd = app.add_subcommand("gamma", "domination number and a minimum dominating set");
  gamma_cmd->add_option("--input", gamma_input, "edge-list file ('-' for stdin)")->required();
  add_common_flags(gamma_cmd, common);

  DecideFlags decide;
  auto* decide_cmd = app.add_subcommand("decide", "decide 1-edge contraction for one graph");
  decide_cmd->add_option("--input", decide.input, "edge-list file ('-' for stdin)")->required();
  decide_cmd->add_option("--method", decide.method, "oracle | characterization | structural")
      ->capture_default_str();
  decide_cmd->add_option("--k", decide.k, "structural: the graph is P3+kP2-free");
  decide_cmd->add_flag("--skip-free-check", decide.skip_free_check, "trust that the input is P3+kP2-free");
  decide_cmd->add_flag("--verify-witness", decide.verify_witness, "recover a witness on existence-only yes paths");
  add_common_flags(decide_cmd, common);

  CorpusFlags cross_corpus;
  std::string methods = "oracle,characterization";
  std::string dump_dir;
  auto* cross_cmd = app.add_subcommand("crosscheck", "run several deciders over a generated corpus");
  add_corpus_flags(cross_cmd, cross_corpus);
  cross_cmd->add_option("--methods", methods, "comma-separated methods")->capture_default_str();
  cross_cmd->add_option("--dump-dir", dump_dir, "write disagreeing instances here as edge lists");
  add_common_flags(cross_cmd, common);

  CorpusFlags claims_corpus;
  auto* claims_cmd = app.add_subcommand("check-claims", "evaluate the structural claim suite over a corpus");
  add_corpus_flags(claims_cmd, claims_corpus);
  add_common_flags(claims_cmd, common);

  CorpusFlags gen_corpus;
  std::string output;
  auto* gen_cmd = app.add_subcommand("generate", "write a corpus manifest (JSON lines)");
  add_corpus_flags(gen_cmd, gen_corpus);
  gen_cmd->add_option("--output", output, "manifest path (default: stdout, no report)");
  add_common_flags(gen_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cd::kExitError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (*gamma_cmd) return cmd_gamma(gamma_input, common);
    if (*decide_cmd) return cmd_decide(decide, common);
    if (*cross_cmd) return cmd_crosscheck(cross_corpus, methods, dump_dir, common);
    if (*claims_cmd) return cmd_check_claims(claims_corpus, common);
    if (*gen_cmd) return cmd_generate(gen_corpus, output, common);
  } catch (const std::exception& e) {
    return fail(command, "", e.what(), cd::Json::object(), common);
  }
  return cd::kExitError;
}
