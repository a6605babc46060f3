#include "lozenge/json_io.hpp"

#include <fstream>

namespace lozenge {

namespace {

using nlohmann::json;

Positions positions_field(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  const json& v = j.at(key);
  if (!v.is_array()) throw Error(ErrorKind::InvalidInput, std::string("field '") + key + "' must be an array");
  Positions out;
  for (const json& e : v) {
    if (!e.is_number_integer()) {
      throw Error(ErrorKind::InvalidInput, std::string("field '") + key + "' must hold integers");
    }
    out.push_back(e.get<int>());
  }
  return out;
}

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw Error(ErrorKind::InvalidInput, std::string("missing integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

}  // namespace

json to_json(const RegionSpec& spec) {
  return json{{"x", spec.x}, {"y", spec.y}, {"U", spec.U}, {"D", spec.D}, {"B", spec.B}};
}

json to_json(const ClusterSpec& spec) {
  json clusters = json::array();
  for (const auto& c : spec.clusters) {
    json tokens = json::array();
    for (Token t : c) tokens.push_back(t == Token::up ? "UP" : "DOWN");
    clusters.push_back(std::move(tokens));
  }
  return json{{"clusters", std::move(clusters)}, {"gaps", spec.gaps}};
}

json to_json(const ShuffleInstance& inst) {
  return json{{"x", inst.x},       {"y", inst.y},        {"U", inst.U},          {"D", inst.D},
              {"U'", inst.U_prime}, {"D'", inst.D_prime}, {"B", inst.B}};
}

RegionSpec region_spec_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "region spec must be a JSON object");
  return RegionSpec{int_field(j, "x"), int_field(j, "y"), positions_field(j, "U"), positions_field(j, "D"),
                    positions_field(j, "B")};
}

ClusterSpec cluster_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("clusters") || !j.at("clusters").is_array()) {
    throw Error(ErrorKind::InvalidInput, "cluster spec needs a 'clusters' array");
  }
  ClusterSpec c;
  for (const json& cluster : j.at("clusters")) {
    if (!cluster.is_array()) throw Error(ErrorKind::InvalidInput, "each cluster must be an array of tokens");
    std::vector<Token> tokens;
    for (const json& t : cluster) {
      if (t == "UP") {
        tokens.push_back(Token::up);
      } else if (t == "DOWN") {
        tokens.push_back(Token::down);
      } else {
        throw Error(ErrorKind::InvalidInput, "cluster tokens must be \"UP\" or \"DOWN\"");
      }
    }
    c.clusters.push_back(std::move(tokens));
  }
  c.gaps = positions_field(j, "gaps");
  return c;
}

RegionSpec load_region_spec(const std::string& path) { return region_spec_from_json(read_file(path)); }

ClusterSpec load_cluster_spec(const std::string& path) { return cluster_spec_from_json(read_file(path)); }

}  // namespace lozenge
