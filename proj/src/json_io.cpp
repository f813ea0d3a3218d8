#include "topo/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace topo {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw ParseError(what + " is not valid JSON");
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::map<std::string, int> index_labels(
    const std::vector<std::string>& labels) {
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) throw ParseError("point labels must be nonempty");
    if (!idx.emplace(labels[i], static_cast<int>(i)).second)
      throw ParseError("duplicate point label: " + labels[i]);
  }
  return idx;
}

int label_to_point(const json& j, const std::map<std::string, int>& idx) {
  if (!j.is_string())
    throw ParseError("expected a point label, got " + j.dump());
  const auto it = idx.find(j.get<std::string>());
  if (it == idx.end())
    throw ParseError("unknown point label: " + j.get<std::string>());
  return it->second;
}

}  // namespace

LabeledSpace parse_space_text(const std::string& text) {
  const json j = parse_or_throw(text, "space file");
  if (!j.is_object() || !j.contains("points") || !j.contains("opens"))
    throw ParseError("a space file needs \"points\" and \"opens\"");
  if (!j["points"].is_array() || j["points"].empty())
    throw ParseError("\"points\" must be a nonempty array of labels");
  LabeledSpace out;
  for (const json& p : j["points"]) {
    if (!p.is_string())
      throw ParseError("point labels must be strings, got " + p.dump());
    out.labels.push_back(p.get<std::string>());
  }
  if (out.labels.size() > static_cast<std::size_t>(kMaxPoints))
    throw ParseError("at most " + std::to_string(kMaxPoints) +
                     " points are supported");
  const auto idx = index_labels(out.labels);
  if (!j["opens"].is_array())
    throw ParseError("\"opens\" must be an array of label arrays");
  std::vector<Mask> opens;
  for (const json& set : j["opens"]) {
    if (!set.is_array())
      throw ParseError("each open set must be an array of labels");
    Mask m = 0;
    for (const json& p : set) m |= Mask(1) << label_to_point(p, idx);
    opens.push_back(m);
  }
  out.space = new_space(static_cast<int>(out.labels.size()), opens);
  return out;
}

LabeledSpace parse_space_file(const std::string& path) {
  return parse_space_text(read_file(path));
}

Relation parse_relation_text(const std::string& text,
                             const std::vector<std::string>& labels) {
  const json j = parse_or_throw(text, "relation file");
  if (!j.is_object() || !j.contains("pairs"))
    throw ParseError("a relation file needs \"pairs\"");
  if (!j["pairs"].is_array())
    throw ParseError("\"pairs\" must be an array of [from, to] pairs");
  const auto idx = index_labels(labels);
  std::vector<std::pair<int, int>> pairs;
  for (const json& pr : j["pairs"]) {
    if (!pr.is_array() || pr.size() != 2)
      throw ParseError("each pair must be [from, to], got " + pr.dump());
    pairs.emplace_back(label_to_point(pr[0], idx),
                       label_to_point(pr[1], idx));
  }
  return relation_from_pairs(static_cast<int>(labels.size()), pairs);
}

Relation parse_relation_file(const std::string& path,
                             const std::vector<std::string>& labels) {
  return parse_relation_text(read_file(path), labels);
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return labels;
}

std::vector<std::string> mask_labels(Mask m,
                                     const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if ((m >> i) & 1u) out.push_back(labels[i]);
  return out;
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (const unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) out[i] = digits[v & 0xf];
  return out;
}

std::string outcome_canonical(const VerificationOutcome& out) {
  nlohmann::ordered_json j;
  j["claim"] = out.claim;
  j["instances"] = out.instances;
  j["hits"] = out.hits;
  j["lhs_hits"] = out.lhs_hits;
  j["rhs_hits"] = out.rhs_hits;
  j["by_n"] = nlohmann::ordered_json::array();
  for (const CountByN& c : out.by_n)
    j["by_n"].push_back({{"n", c.n},
                         {"instances", c.instances},
                         {"hits", c.hits}});
  j["violation_count"] = out.violation_count;
  j["violations_truncated"] = out.violations_truncated;
  j["partial"] = out.partial;
  j["expected_vacuous"] = out.expected_vacuous;
  j["passed"] = out.passed();
  j["violations"] = nlohmann::ordered_json::array();
  for (const Violation& v : out.violations) {
    nlohmann::ordered_json jv;
    jv["n"] = v.n;
    if (v.topo_index >= 0) jv["topo_index"] = v.topo_index;
    if (v.has_rel) jv["rel_code"] = v.rel_code;
    if (v.has_rel2) jv["rel2_code"] = v.rel2_code;
    jv["witness"] = nlohmann::ordered_json::array();
    for (int p : v.witness) jv["witness"].push_back("p" + std::to_string(p));
    jv["note"] = v.note;
    j["violations"].push_back(std::move(jv));
  }
  return j.dump();
}

}  // namespace topo
