#include "deko/partition.hpp"

#include <algorithm>

#include "deko/errors.hpp"

namespace deko {

StepPartition::StepPartition(std::size_t m,
                             std::vector<std::vector<std::size_t>> groups)
    : m_(m), groups_(std::move(groups)) {
  if (m_ == 0) throw ValidationError("partition of zero steps");
  membership_.assign(m_, static_cast<std::size_t>(-1));
  for (auto& group : groups_) {
    if (group.empty()) throw ValidationError("partition group is empty");
    std::sort(group.begin(), group.end());
    for (std::size_t step : group) {
      if (step >= m_) throw ValidationError("partition index out of range");
      if (membership_[step] != static_cast<std::size_t>(-1))
        throw ValidationError("partition groups overlap");
      membership_[step] = 0;
    }
  }
  for (std::size_t step = 0; step < m_; ++step)
    if (membership_[step] == static_cast<std::size_t>(-1))
      throw ValidationError("partition does not cover every step");
  std::sort(groups_.begin(), groups_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t gi = 0; gi < groups_.size(); ++gi)
    for (std::size_t step : groups_[gi]) membership_[step] = gi;
}

StepPartition StepPartition::trivial(std::size_t m) {
  std::vector<std::size_t> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = i;
  return StepPartition(m, {all});
}

StepPartition StepPartition::singletons(std::size_t m) {
  std::vector<std::vector<std::size_t>> groups(m);
  for (std::size_t i = 0; i < m; ++i) groups[i] = {i};
  return StepPartition(m, std::move(groups));
}

StepPartition StepPartition::equal_blocks(std::size_t m, std::size_t g) {
  if (g == 0 || m % g != 0)
    throw ValidationError("equal_blocks: group count must divide m");
  const std::size_t size = m / g;
  std::vector<std::vector<std::size_t>> groups(g);
  for (std::size_t i = 0; i < m; ++i) groups[i / size].push_back(i);
  return StepPartition(m, std::move(groups));
}

bool StepPartition::equal_measure() const {
  for (const auto& group : groups_)
    if (group.size() != groups_.front().size()) return false;
  return true;
}

bool StepPartition::refines(const StepPartition& coarser) const {
  if (coarser.m() != m_) return false;
  for (const auto& group : groups_) {
    const std::size_t target = coarser.group_of(group.front());
    for (std::size_t step : group)
      if (coarser.group_of(step) != target) return false;
  }
  return true;
}

StepPartition StepPartition::split_by(const std::vector<std::size_t>& set) const {
  std::vector<bool> in_set(m_, false);
  for (std::size_t step : set) {
    if (step >= m_) throw ValidationError("split set index out of range");
    in_set[step] = true;
  }
  std::vector<std::vector<std::size_t>> groups;
  for (const auto& group : groups_) {
    std::vector<std::size_t> inside, outside;
    for (std::size_t step : group)
      (in_set[step] ? inside : outside).push_back(step);
    if (!inside.empty()) groups.push_back(std::move(inside));
    if (!outside.empty()) groups.push_back(std::move(outside));
  }
  return StepPartition(m_, std::move(groups));
}

StepPartition StepPartition::split_to_size(std::size_t size) const {
  if (size == 0) throw ValidationError("split size must be positive");
  std::vector<std::vector<std::size_t>> groups;
  for (const auto& group : groups_) {
    if (group.size() % size != 0)
      throw ValidationError("split size must divide every group size");
    for (std::size_t start = 0; start < group.size(); start += size)
      groups.emplace_back(group.begin() + static_cast<std::ptrdiff_t>(start),
                          group.begin() + static_cast<std::ptrdiff_t>(start + size));
  }
  return StepPartition(m_, std::move(groups));
}

}  // namespace deko
