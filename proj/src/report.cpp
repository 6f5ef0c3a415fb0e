#include "contractdom/report.hpp"

#include <cstdio>
#include <sstream>

namespace contractdom {

std::string digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::string digest(const Graph& g) { return digest(format_edge_list(g)); }

Json to_json(VertexSet s) { return Json(s.to_vector()); }

namespace {

template <typename T>
Json or_null(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const Decision& d) {
  Json j;
  j["method"] = to_string(d.method);
  j["answer"] = to_string(d.answer);
  j["fired_step"] = d.provenance.fired_step;
  j["j"] = or_null(d.provenance.j);
  j["a_size"] = or_null(d.provenance.a_size);
  j["f"] = or_null(d.provenance.f);
  j["gamma"] = or_null(d.provenance.gamma);
  j["a"] = d.provenance.a_set ? to_json(*d.provenance.a_set) : Json(nullptr);
  Json w;
  w["edge"] = d.witness_edge ? Json::array({d.witness_edge->u, d.witness_edge->v}) : Json(nullptr);
  w["set"] = d.witness_set ? to_json(*d.witness_set) : Json(nullptr);
  j["witness"] = std::move(w);
  return j;
}

Json to_json(const CrosscheckSummary& s) {
  Json j;
  j["instances"] = s.instances;
  j["agree"] = s.agree;
  j["disagree"] = s.disagree;
  j["skipped"] = s.skipped;
  j["sampling_attempts"] = s.attempts;
  j["sampling_exhausted"] = s.exhausted;
  Json tallies = Json::object();
  for (const auto& [method, answers] : s.tallies) {
    Json a = Json::object();
    for (const auto& [answer, count] : answers) a[answer] = count;
    tallies[method] = std::move(a);
  }
  j["tallies"] = std::move(tallies);
  Json dis = Json::array();
  for (const auto& d : s.disagreements) {
    Json answers = Json::object();
    for (const auto& [m, a] : d.answers) answers[m] = a;
    dis.push_back({{"index", d.index}, {"answers", std::move(answers)}, {"edge_list", d.edge_list}});
  }
  j["disagreements"] = std::move(dis);
  return j;
}

Json to_json(const ClaimSummary& s) {
  Json j;
  j["instances"] = s.instances;
  j["in_scope"] = s.in_scope;
  j["no_instances"] = s.no_instances;
  Json claims = Json::object();
  for (std::size_t i = 0; i < kClaimCount; ++i) {
    const auto& t = s.tallies[i];
    claims[std::string(to_string(static_cast<Claim>(i)))] = {
        {"passed", t.passed}, {"violated", t.violated}, {"vacuous", t.vacuous}};
  }
  j["claims"] = std::move(claims);
  j["violations"] = s.violation_count();
  Json details = Json::array();
  for (const auto& v : s.violations) {
    details.push_back({{"index", v.index}, {"claim", v.claim}, {"detail", v.detail}, {"edge_list", v.edge_list}});
  }
  j["violation_details"] = std::move(details);
  return j;
}

Json to_json(const RunReport& r) {
  Json j;
  j["command"] = r.command;
  j["input_digest"] = r.input_digest;
  j["result"] = r.result;
  j["exit_status"] = r.exit_status;
  if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j;
}

RunReport report_from_json(const Json& j) {
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.input_digest = j.at("input_digest").get<std::string>();
  r.result = j.at("result");
  r.exit_status = j.at("exit_status").get<int>();
  if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
  return r;
}

std::string render_json(const RunReport& r) { return to_json(r).dump(2) + "\n"; }

namespace {

void render_value(std::ostringstream& out, const std::string& key, const Json& v, int depth) {
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  if (v.is_object() && !v.empty()) {
    out << indent << key << ":\n";
    for (const auto& item : v.items()) render_value(out, item.key(), item.value(), depth + 1);
    return;
  }
  if (v.is_array() && !v.empty() && (v.front().is_object())) {
    out << indent << key << ":\n";
    for (std::size_t i = 0; i < v.size(); ++i) render_value(out, "[" + std::to_string(i) + "]", v[i], depth + 1);
    return;
  }
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.find('\n') != std::string::npos) {
      out << indent << key << ":\n";
      std::istringstream lines(s);
      for (std::string line; std::getline(lines, line);) out << indent << "  | " << line << '\n';
      return;
    }
    out << indent << key << ": " << s << '\n';
    return;
  }
  out << indent << key << ": " << v.dump() << '\n';
}

}  // namespace

std::string render_text(const RunReport& r) {
  std::ostringstream out;
  const Json j = to_json(r);
  for (const auto& [k, v] : j.items()) render_value(out, k, v, 0);
  return out.str();
}

}  // namespace contractdom
