#pragma once

#include <cstdint>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "reef/solution.hpp"

namespace reef {

struct StoreError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ancestor context for planning: a contiguous suffix of the parent chain,
// oldest ancestor first.
struct LineageContext {
  struct Entry {
    std::string solution_id;
    std::string generate_plan;
    std::string summary;
    double score = 0.0;
  };
  std::vector<Entry> entries;
  int depth = 0;
};

struct SampleCounters {
  int sample_cnt = 0;
  double sample_weight = 0.0;
};

// Run-scoped solution store with lineage queries. Concurrent readers,
// serialized writers; island workers share one instance.
class SolutionStore {
 public:
  static constexpr int kDefaultLineageDepth = 5;

  // Insert with a caller-provided id (checkpoint restore, tests).
  // Throws StoreError on duplicate ids, unknown parents, or a generation
  // that is inconsistent with the parent chain.
  std::string insert(const Solution& s);

  // Assign the next run-scoped id ("sol-000001", ...) and insert.
  std::string insert_assigning(Solution s);

  Solution get(const std::string& id) const;
  bool contains(const std::string& id) const;
  std::size_t size() const;

  // Up to max_depth ancestors of `id` (not including `id` itself).
  LineageContext lineage(const std::string& id,
                         int max_depth = kDefaultLineageDepth) const;

  SampleCounters record_sampled(const std::string& id, double weight);

  std::vector<std::string> children(const std::string& id) const;

  // Every solution in insertion order.
  std::vector<Solution> snapshot() const;

  std::uint64_t id_counter() const;
  void set_id_counter(std::uint64_t value);

 private:
  std::string insert_locked(const Solution& s);

  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Solution> by_id_;
  std::vector<std::string> order_;
  std::unordered_map<std::string, std::vector<std::string>> children_;
  std::uint64_t counter_ = 0;
};

}  // namespace reef
