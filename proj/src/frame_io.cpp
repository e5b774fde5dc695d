#include "cplkit/frame_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cplkit {

namespace {

using Json = nlohmann::ordered_json;

Json parse_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::ParseError, "invalid JSON");
  return j;
}

std::vector<std::string> string_array(const Json& j, const std::string& what) {
  if (!j.is_array()) fail(ErrorCode::ParseError, what + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) fail(ErrorCode::ParseError, what + " must contain strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

NeighborhoodFrame parse_frame_json(const std::string& text) {
  Json j = parse_text(text);
  if (!j.is_object()) fail(ErrorCode::ParseError, "frame must be a JSON object");
  if (!j.contains("worlds")) fail(ErrorCode::ParseError, "frame is missing \"worlds\"");
  std::vector<std::string> worlds = string_array(j["worlds"], "\"worlds\"");

  std::map<std::string, std::vector<std::vector<std::string>>> neighborhoods;
  if (j.contains("neighborhoods")) {
    const Json& nb = j["neighborhoods"];
    if (!nb.is_object()) fail(ErrorCode::ParseError, "\"neighborhoods\" must be an object");
    for (const auto& [world, sets] : nb.items()) {
      if (!sets.is_array()) {
        fail(ErrorCode::ParseError, "neighborhoods of \"" + world + "\" must be an array");
      }
      std::vector<std::vector<std::string>> family;
      for (const auto& set : sets) {
        family.push_back(string_array(set, "neighborhood set of \"" + world + "\""));
      }
      neighborhoods[world] = std::move(family);
    }
  }

  std::map<std::string, std::vector<std::string>> predicates;
  if (j.contains("predicates")) {
    const Json& preds = j["predicates"];
    if (!preds.is_object()) fail(ErrorCode::ParseError, "\"predicates\" must be an object");
    for (const auto& [name, members] : preds.items()) {
      predicates[name] = string_array(members, "predicate \"" + name + "\"");
    }
  }

  return NeighborhoodFrame::make(worlds, neighborhoods, predicates);
}

std::string frame_to_json(const NeighborhoodFrame& f) {
  Json j = Json::object();
  j["worlds"] = f.worlds();
  Json nb = Json::object();
  for (int w = 0; w < f.size(); ++w) {
    Json family = Json::array();
    for (Mask u : f.family(w)) family.push_back(f.mask_labels(u));
    nb[f.label(w)] = std::move(family);
  }
  j["neighborhoods"] = std::move(nb);
  if (!f.predicates().empty()) {
    Json preds = Json::object();
    for (const auto& [name, ext] : f.predicates()) preds[name] = f.mask_labels(ext);
    j["predicates"] = std::move(preds);
  }
  return j.dump(2) + "\n";
}

FiniteTopology parse_topology_json(const std::string& text) {
  Json j = parse_text(text);
  if (!j.is_object()) fail(ErrorCode::ParseError, "topology must be a JSON object");
  if (!j.contains("points")) fail(ErrorCode::ParseError, "topology is missing \"points\"");
  if (!j.contains("opens")) fail(ErrorCode::ParseError, "topology is missing \"opens\"");
  std::vector<std::string> points = string_array(j["points"], "\"points\"");
  if (!j["opens"].is_array()) fail(ErrorCode::ParseError, "\"opens\" must be an array");
  std::vector<std::vector<std::string>> opens;
  for (const auto& open : j["opens"]) opens.push_back(string_array(open, "open set"));
  return FiniteTopology::make(points, opens);
}

std::string topology_to_json(const FiniteTopology& t) {
  Json j = Json::object();
  j["points"] = t.points();
  Json opens = Json::array();
  for (Mask open : t.opens()) {
    std::vector<std::string> labels;
    for (int p = 0; p < t.size(); ++p) {
      if (open & (Mask(1) << p)) labels.push_back(t.label(p));
    }
    opens.push_back(labels);
  }
  j["opens"] = std::move(opens);
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::UsageError, "cannot read \"" + path + "\"");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::UsageError, "cannot write \"" + path + "\"");
  out << content;
}

}  // namespace cplkit
