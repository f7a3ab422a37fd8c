#include "reef/solution.hpp"

#include <chrono>
#include <stdexcept>

namespace reef {

using nlohmann::json;

json genome_to_json(const Genome& g) {
  if (g.kind == GenomeKind::Code) {
    return json(g.code);
  }
  return json(g.values);
}

Genome genome_from_json(const json& j) {
  if (j.is_string()) {
    return Genome::make_code(j.get<std::string>());
  }
  if (j.is_array()) {
    return Genome::make_vector(j.get<std::vector<double>>());
  }
  throw std::invalid_argument(
      "genome must be a string (code) or an array of reals (vector)");
}

json solution_to_json(const Solution& s) {
  json j;
  j["solution"] = genome_to_json(s.solution);
  j["solution_id"] = s.solution_id;
  j["generate_plan"] = s.generate_plan;
  j["parent_id"] = s.parent_id ? json(*s.parent_id) : json(nullptr);
  j["island_id"] = s.island_id;
  j["iteration"] = s.iteration;
  j["timestamp"] = s.timestamp;
  j["generation"] = s.generation;
  j["sample_cnt"] = s.sample_cnt;
  j["sample_weight"] = s.sample_weight;
  j["score"] = s.score;
  j["evaluation"] = s.evaluation;
  j["summary"] = s.summary;
  j["metadata"] = s.metadata;
  return j;
}

Solution solution_from_json(const json& j) {
  Solution s;
  s.solution = genome_from_json(j.at("solution"));
  s.solution_id = j.at("solution_id").get<std::string>();
  s.generate_plan = j.at("generate_plan").get<std::string>();
  if (!j.at("parent_id").is_null()) {
    s.parent_id = j.at("parent_id").get<std::string>();
  }
  s.island_id = j.at("island_id").get<int>();
  s.iteration = j.at("iteration").get<int>();
  s.timestamp = j.at("timestamp").get<double>();
  s.generation = j.at("generation").get<int>();
  s.sample_cnt = j.at("sample_cnt").get<int>();
  s.sample_weight = j.at("sample_weight").get<double>();
  s.score = j.at("score").get<double>();
  s.evaluation = j.at("evaluation").get<std::string>();
  s.summary = j.at("summary").get<std::string>();
  s.metadata = j.at("metadata").get<std::map<std::string, std::string>>();
  return s;
}

double now_seconds() {
  const auto now = std::chrono::system_clock::now().time_since_epoch();
  return std::chrono::duration<double>(now).count();
}

}  // namespace reef
