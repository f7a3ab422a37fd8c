#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "reef/solution.hpp"

namespace reef {

struct FeatureDim {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  int bins = 10;
};

// Behavioural descriptor grid: 1..4 dims, each discretized into bins.
struct FeatureDescriptor {
  std::vector<FeatureDim> dims;
  void validate() const;  // throws std::invalid_argument
};

using CellIndex = std::vector<int>;

using FeatureExtractor = std::function<std::vector<double>(const Genome&)>;

// Raw feature values before discretization; checks the extractor returned
// one value per descriptor dim.
std::vector<double> compute_features(const Genome& g,
                                     const FeatureDescriptor& descriptor,
                                     const FeatureExtractor& extractor);

// index[i] = clamp(floor((v[i]-lo)/(hi-lo)*bins), 0, bins-1). Total: values
// outside [lo, hi] land in the edge bins.
CellIndex discretize(const std::vector<double>& v,
                     const FeatureDescriptor& descriptor);

// Built-in code descriptors. Decision points stand in for cyclomatic
// complexity: 1 + occurrences of branch/loop keywords and boolean operators.
double code_length(const std::string& source);
double code_decision_points(const std::string& source);
FeatureExtractor code_extractor();

// (mean, stddev) over a vector genome's entries.
FeatureExtractor mean_stddev_extractor();

nlohmann::json descriptor_to_json(const FeatureDescriptor& d);
FeatureDescriptor descriptor_from_json(const nlohmann::json& j);

nlohmann::json cell_to_json(const CellIndex& cell);
CellIndex cell_from_json(const nlohmann::json& j);

}  // namespace reef
