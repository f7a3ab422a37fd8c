#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace reef {

enum class GenomeKind { Code, Vector };

// Genome payload: source text for code tasks, a flat real vector for numeric
// ones. Serializes as a JSON string or array respectively.
struct Genome {
  GenomeKind kind = GenomeKind::Vector;
  std::string code;
  std::vector<double> values;

  static Genome make_code(std::string text) {
    Genome g;
    g.kind = GenomeKind::Code;
    g.code = std::move(text);
    return g;
  }
  static Genome make_vector(std::vector<double> v) {
    Genome g;
    g.kind = GenomeKind::Vector;
    g.values = std::move(v);
    return g;
  }

  bool operator==(const Genome&) const = default;
};

// One individual in the run store. The JSON field names below are the
// snapshot format and must not change.
struct Solution {
  Genome solution;
  std::string solution_id;
  std::string generate_plan;
  std::optional<std::string> parent_id;
  int island_id = 0;
  int iteration = 0;
  double timestamp = 0.0;
  int generation = 0;
  int sample_cnt = 0;
  double sample_weight = 0.0;
  double score = 0.0;
  std::string evaluation;
  std::string summary;
  std::map<std::string, std::string> metadata;
};

nlohmann::json genome_to_json(const Genome& g);
Genome genome_from_json(const nlohmann::json& j);

nlohmann::json solution_to_json(const Solution& s);
Solution solution_from_json(const nlohmann::json& j);

// Seconds since epoch as a real.
double now_seconds();

}  // namespace reef
