#include "contractdom/oracle.hpp"

#include "contractdom/domination.hpp"

namespace contractdom {

std::string_view to_string(Answer a) { return a == Answer::yes ? "yes" : "no"; }

std::string_view to_string(Method m) {
  switch (m) {
    case Method::bruteforce:
      return "bruteforce";
    case Method::characterization:
      return "characterization";
    case Method::structural:
      return "structural";
  }
  return "unknown";
}

Method method_from_string(std::string_view name) {
  if (name == "bruteforce" || name == "oracle") return Method::bruteforce;
  if (name == "characterization") return Method::characterization;
  if (name == "structural") return Method::structural;
  throw PreconditionError("unknown method: " + std::string(name));
}

Decision decide_bruteforce(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
  Decision d;
  d.method = Method::bruteforce;
  const int g_min = *domination_number(g);
  d.provenance.gamma = g_min;
  d.provenance.fired_step = "exhausted";
  // γ(G/e) >= γ(G) - 1 always, so a capped solve at γ(G) - 1 decides each edge.
  for (Edge e : g.edges()) {
    Contraction c = contract_edge(g, e);
    if (domination_number(c.graph, g_min - 1)) {
      d.answer = Answer::yes;
      d.witness_edge = e;
      d.provenance.fired_step = "contraction";
      break;
    }
  }
  return d;
}

Decision decide_characterization(const Graph& g) {
  Decision d;
  d.method = Method::characterization;
  auto hit = has_nonstable_min_ds(g);
  d.provenance.gamma = *domination_number(g);
  if (hit) {
    d.answer = Answer::yes;
    d.witness_edge = hit->edge;
    d.witness_set = hit->set;
    d.provenance.fired_step = "nonstable";
  } else {
    d.provenance.fired_step = "all-stable";
  }
  return d;
}

CrossCheck crosscheck(const Graph& g) { return {decide_bruteforce(g), decide_characterization(g)}; }

}  // namespace contractdom
