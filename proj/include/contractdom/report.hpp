#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "contractdom/claims.hpp"
#include "contractdom/decision.hpp"
#include "contractdom/graph.hpp"
#include "contractdom/harness.hpp"

namespace contractdom {

using Json = nlohmann::ordered_json;

/// Exit codes shared by every command.
enum ExitCode : int { kExitYes = 0, kExitSuccess = 0, kExitNo = 1, kExitFailure = 1, kExitError = 2 };

/// "fnv1a64:<16 hex digits>" of the given bytes.
std::string digest(const std::string& bytes);
/// Digest of the canonical edge-list rendering.
std::string digest(const Graph& g);

Json to_json(VertexSet s);
Json to_json(const Decision& d);
Json to_json(const CrosscheckSummary& s);
Json to_json(const ClaimSummary& s);

/// Outcome of one CLI command. The JSON form is authoritative; the text form
/// is rendered from it.
struct RunReport {
  std::string command;
  std::string input_digest;
  Json result = Json::object();
  int exit_status = 0;
  /// Only filled when timing was requested, so default reports are
  /// byte-for-byte reproducible.
  std::optional<double> elapsed_ms;

  bool operator==(const RunReport&) const = default;
};

Json to_json(const RunReport& r);
RunReport report_from_json(const Json& j);
std::string render_json(const RunReport& r);
std::string render_text(const RunReport& r);

}  // namespace contractdom
