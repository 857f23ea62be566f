#pragma once

#include <cstddef>
#include <vector>

namespace deko {

// A partition of the step indices {0,...,m-1} into disjoint covering
// groups. Stored normalized: groups sorted internally, groups ordered by
// their smallest member.
class StepPartition {
 public:
  StepPartition(std::size_t m, std::vector<std::vector<std::size_t>> groups);

  static StepPartition trivial(std::size_t m);
  static StepPartition singletons(std::size_t m);
  // g contiguous groups of equal size; requires g | m.
  static StepPartition equal_blocks(std::size_t m, std::size_t g);

  std::size_t m() const { return m_; }
  std::size_t group_count() const { return groups_.size(); }
  const std::vector<std::vector<std::size_t>>& groups() const { return groups_; }
  std::size_t group_of(std::size_t step) const { return membership_[step]; }

  bool equal_measure() const;
  // True when every group of `coarser` is a union of groups of *this.
  bool refines(const StepPartition& coarser) const;

  // Common refinement with the two-set split {S, complement}.
  StepPartition split_by(const std::vector<std::size_t>& set) const;

  // Splits every group into consecutive runs of `size` atoms; requires
  // size to divide every group size.
  StepPartition split_to_size(std::size_t size) const;

  bool operator==(const StepPartition& o) const {
    return m_ == o.m_ && groups_ == o.groups_;
  }

 private:
  std::size_t m_ = 0;
  std::vector<std::vector<std::size_t>> groups_;
  std::vector<std::size_t> membership_;
};

}  // namespace deko
