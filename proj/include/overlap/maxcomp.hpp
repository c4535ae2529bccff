#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "overlap/family.hpp"
#include "overlap/partition.hpp"

namespace overlap {

/// Element order of the final partition after refining V by every set in LF
/// order. Equivalently the columns of the set/element incidence matrix (rows
/// in LF order) sorted lexicographically with 0 < 1.
struct PfOrder {
  std::vector<Element> elem_at;   // 0-based storage, see element_at()
  std::vector<Position> pos_f;    // element -> 1-based position

  Element element_at(Position p) const noexcept { return elem_at[p - 1]; }
  std::size_t size() const noexcept { return elem_at.size(); }
};

/// Leftmost and rightmost P_f position of a set's elements.
struct SetExtent {
  Position left = 0;
  Position right = 0;
  friend bool operator==(const SetExtent&, const SetExtent&) = default;
};

/// Max(X) per set index; kNoSet when no set of size >= |X| overlaps X.
using MaxAssignment = std::vector<SetId>;

PfOrder compute_pf(const SetFamily& f, const LFOrder& lf);

std::vector<SetExtent> compute_bounds(const SetFamily& f, const PfOrder& pf);

/// Sets bucketed by right extent, each bucket a doubly-linked list ordered by
/// non-decreasing left extent. Supports O(1) unlink and removal of a whole
/// size class in time proportional to its population.
class AMStructure {
 public:
  AMStructure(const SetFamily& f, const LFOrder& lf,
              std::span<const SetExtent> extents);

  bool empty(Position p) const noexcept { return head_[p] == kNoSet; }
  SetId front(Position p) const noexcept { return head_[p]; }
  bool contains(SetId x) const noexcept { return live_[x] != 0; }

  void remove(SetId x) noexcept;
  /// Removes every still-present set of the given size.
  void remove_size(std::size_t size) noexcept;

  /// Current contents of AM[p], front to back.
  std::vector<SetId> list(Position p) const;
  std::size_t live_count() const noexcept { return live_total_; }

 private:
  std::vector<SetId> head_;   // per position, index 0 unused
  std::vector<SetId> next_;
  std::vector<SetId> prev_;
  std::vector<Position> right_;
  std::vector<char> live_;
  std::vector<std::size_t> size_offsets_;
  std::vector<SetId> by_size_;
  std::size_t live_total_ = 0;
};

/// Assigns Max(X) for every X by refining a partition frozen in P_f order by
/// each set in LF order. `am` is consumed. Throws std::logic_error if a
/// refinement ever needs to move an element, which would mean `pf` is not
/// the P_f of this family and order.
MaxAssignment compute_max(const SetFamily& f, const LFOrder& lf,
                          const PfOrder& pf, std::span<const SetExtent> extents,
                          AMStructure& am);

/// Everything the Max computation produces, for callers that need all of it.
struct MaxComputation {
  PfOrder pf;
  std::vector<SetExtent> extents;
  MaxAssignment max;
};

MaxComputation compute_all_max(const SetFamily& f, const LFOrder& lf);

}  // namespace overlap
