#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "contractdom/graph.hpp"

namespace contractdom {

enum class Answer { no, yes };
enum class Method { bruteforce, characterization, structural };

std::string_view to_string(Answer a);
std::string_view to_string(Method m);
/// Accepts "bruteforce"/"oracle", "characterization", "structural".
Method method_from_string(std::string_view name);

/// Where a decision came from. Which fields are set depends on the method.
struct Provenance {
  /// "contraction", "exhausted", "nonstable", "all-stable", "trivial", or a
  /// structural step label ("clique", "1.1.1", "1.1.2", "2", "3", "4",
  /// "5(i)", "5(ii)", "6").
  std::string fired_step;
  std::optional<int> j;
  std::optional<int> a_size;
  std::optional<int> f;
  std::optional<int> gamma;
  std::optional<VertexSet> a_set;

  bool operator==(const Provenance&) const = default;
};

struct Decision {
  Answer answer = Answer::no;
  Method method = Method::bruteforce;
  /// Bruteforce: an edge whose contraction lowers γ. Characterization: an
  /// edge inside witness_set.
  std::optional<Edge> witness_edge;
  /// A minimum dominating set containing witness_edge.
  std::optional<VertexSet> witness_set;
  Provenance provenance;

  bool yes() const { return answer == Answer::yes; }
  bool operator==(const Decision&) const = default;
};

}  // namespace contractdom
