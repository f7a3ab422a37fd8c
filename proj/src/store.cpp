#include "reef/store.hpp"

#include <algorithm>
#include <cstdio>

namespace reef {

std::string SolutionStore::insert(const Solution& s) {
  std::unique_lock lock(mutex_);
  return insert_locked(s);
}

std::string SolutionStore::insert_assigning(Solution s) {
  std::unique_lock lock(mutex_);
  char buf[32];
  std::snprintf(buf, sizeof buf, "sol-%06llu",
                static_cast<unsigned long long>(++counter_));
  s.solution_id = buf;
  return insert_locked(s);
}

std::string SolutionStore::insert_locked(const Solution& s) {
  if (s.solution_id.empty()) {
    throw StoreError("insert: empty solution_id");
  }
  if (by_id_.count(s.solution_id) != 0) {
    throw StoreError("insert: duplicate id '" + s.solution_id + "'");
  }
  if (s.parent_id) {
    auto it = by_id_.find(*s.parent_id);
    if (it == by_id_.end()) {
      throw StoreError("insert: unknown parent '" + *s.parent_id + "'");
    }
    if (s.generation != it->second.generation + 1) {
      throw StoreError("insert: generation of '" + s.solution_id +
                       "' must be parent generation + 1");
    }
  } else if (s.generation != 0) {
    throw StoreError("insert: seed '" + s.solution_id +
                     "' must have generation 0");
  }
  by_id_.emplace(s.solution_id, s);
  order_.push_back(s.solution_id);
  if (s.parent_id) {
    children_[*s.parent_id].push_back(s.solution_id);
  }
  return s.solution_id;
}

Solution SolutionStore::get(const std::string& id) const {
  std::shared_lock lock(mutex_);
  auto it = by_id_.find(id);
  if (it == by_id_.end()) {
    throw StoreError("get: unknown id '" + id + "'");
  }
  return it->second;
}

bool SolutionStore::contains(const std::string& id) const {
  std::shared_lock lock(mutex_);
  return by_id_.count(id) != 0;
}

std::size_t SolutionStore::size() const {
  std::shared_lock lock(mutex_);
  return by_id_.size();
}

LineageContext SolutionStore::lineage(const std::string& id,
                                      int max_depth) const {
  std::shared_lock lock(mutex_);
  auto it = by_id_.find(id);
  if (it == by_id_.end()) {
    throw StoreError("lineage: unknown id '" + id + "'");
  }
  LineageContext ctx;
  const Solution* cur = &it->second;
  while (cur->parent_id && static_cast<int>(ctx.entries.size()) < max_depth) {
    const Solution& parent = by_id_.at(*cur->parent_id);
    ctx.entries.push_back({parent.solution_id, parent.generate_plan,
                           parent.summary, parent.score});
    cur = &parent;
  }
  std::reverse(ctx.entries.begin(), ctx.entries.end());
  ctx.depth = static_cast<int>(ctx.entries.size());
  return ctx;
}

SampleCounters SolutionStore::record_sampled(const std::string& id,
                                             double weight) {
  std::unique_lock lock(mutex_);
  auto it = by_id_.find(id);
  if (it == by_id_.end()) {
    throw StoreError("record_sampled: unknown id '" + id + "'");
  }
  it->second.sample_cnt += 1;
  it->second.sample_weight = weight;
  return {it->second.sample_cnt, it->second.sample_weight};
}

std::vector<std::string> SolutionStore::children(const std::string& id) const {
  std::shared_lock lock(mutex_);
  if (by_id_.count(id) == 0) {
    throw StoreError("children: unknown id '" + id + "'");
  }
  auto it = children_.find(id);
  if (it == children_.end()) {
    return {};
  }
  return it->second;
}

std::vector<Solution> SolutionStore::snapshot() const {
  std::shared_lock lock(mutex_);
  std::vector<Solution> out;
  out.reserve(order_.size());
  for (const auto& id : order_) {
    out.push_back(by_id_.at(id));
  }
  return out;
}

std::uint64_t SolutionStore::id_counter() const {
  std::shared_lock lock(mutex_);
  return counter_;
}

void SolutionStore::set_id_counter(std::uint64_t value) {
  std::unique_lock lock(mutex_);
  counter_ = value;
}

}  // namespace reef
