#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "overlap/family.hpp"

namespace overlap {

/// 1-based slot index into the partition table.
using Position = std::uint32_t;
using PartId = std::uint32_t;

/// Inclusive interval of table positions.
struct Bounds {
  Position lo = 0;
  Position hi = 0;
  std::size_t size() const noexcept { return hi - lo + 1; }
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// One part C split into C' = [lo, boundary] and C'' = [boundary + 1, hi].
struct SplitEvent {
  PartId part;       // keeps C'
  PartId new_part;   // C''
  Position boundary; // last position of C'
  Bounds suffix;     // bounds of C''
  /// Elements of the refiner that had to be swapped into the suffix. Zero
  /// whenever they already occupied it.
  std::size_t displaced;
};

/// Ordered partition of {0, ..., n-1} stored as a bounds table: every part is
/// a contiguous interval of the element table, parts in table order.
///
/// Refinement by X moves C ∩ X to the end of C's interval and splits off
/// that suffix as a new part placed right after C. Only X and the split
/// parts are touched, so refine costs O(|X|).
class OrderedPartition {
 public:
  /// Single part holding elements 0..n-1 in identity order. n must be >= 1.
  explicit OrderedPartition(std::size_t n);
  /// Single part holding `order` (a permutation of 0..n-1) in that order.
  static OrderedPartition from_order(std::span<const Element> order);

  /// Refines every part by `x` (distinct elements, each < n). Parts fully
  /// inside or outside `x` are left alone. Events come in first-touch order
  /// of the parts.
  std::vector<SplitEvent> refine(std::span<const Element> x);
  /// Same, writing the events into `events` (cleared first).
  void refine(std::span<const Element> x, std::vector<SplitEvent>& events);

  std::size_t element_count() const noexcept { return slots_.size() - 1; }
  std::size_t part_count() const noexcept { return parts_.size(); }

  Element element_at(Position p) const noexcept { return slots_[p].elem; }
  Position position_of(Element v) const noexcept { return position_[v]; }
  PartId part_of(Element v) const noexcept { return slots_[position_[v]].part; }
  Bounds bounds(PartId p) const noexcept { return parts_[p].b; }

  /// Part bounds in table order.
  std::vector<Bounds> parts_in_order() const;
  /// Elements in table order (the permutation itself, 0-based vector).
  std::vector<Element> snapshot_order() const;

  /// Checks every structural invariant; O(n). For tests and debug asserts.
  bool valid() const;

 private:
  OrderedPartition() = default;

  struct Slot {
    Element elem;
    PartId part;
  };
  struct Part {
    Bounds b;
    // Scratch for refine, zero between calls.
    std::uint32_t hits = 0;
    Position cursor = 0;
    std::uint32_t displaced = 0;
  };

  std::vector<Slot> slots_;        // position -> element and part; slot 0 unused
  std::vector<Position> position_; // element -> position
  std::vector<Part> parts_;
  std::vector<char> marked_;       // per element, scratch
  std::vector<PartId> touched_;
};

}  // namespace overlap
