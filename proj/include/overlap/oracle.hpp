#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "overlap/dgraph.hpp"
#include "overlap/family.hpp"
#include "overlap/maxcomp.hpp"

// Quadratic reference implementations straight from the definitions. Used
// for differential testing and by `overlap verify`.
namespace overlap::oracle {

inline constexpr std::size_t kDefaultCap = 5000;

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t m, std::size_t cap);
  std::size_t set_count() const noexcept { return m_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t m_;
  std::size_t cap_;
};

/// A and B intersect and neither contains the other. `universe` bounds the
/// element indices of both.
bool overlaps(std::span<const Element> a, std::span<const Element> b,
              std::size_t universe);
bool overlaps(const SetFamily& f, SetId x, SetId y);

struct OverlapGraphFull {
  std::vector<Edge> edges;  // sorted
  ComponentLabeling classes;
};

/// All pairs. Throws CapExceeded when f has more than `cap` sets.
OverlapGraphFull overlap_graph_full(const SetFamily& f, std::size_t cap = kDefaultCap);

/// Max(X) by definition: first Y in LF order with |Y| >= |X| overlapping X.
MaxAssignment max_oracle(const SetFamily& f, const LFOrder& lf,
                         std::size_t cap = kDefaultCap);

/// Canonical form of a class partition: each class as a sorted member list,
/// classes sorted. Two labelings describe the same partition iff equal.
std::vector<std::vector<SetId>> canonical_classes(const ComponentLabeling& c);

}  // namespace overlap::oracle
