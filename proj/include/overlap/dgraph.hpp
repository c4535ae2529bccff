#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "overlap/family.hpp"
#include "overlap/maxcomp.hpp"

namespace overlap {

/// Unordered pair of set indices, normalized so that a < b.
struct Edge {
  SetId a;
  SetId b;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(SetId x, SetId y) noexcept {
  return x < y ? Edge{x, y} : Edge{y, x};
}

/// Sorts by (a, b) with two counting passes and drops repeats. O(m + |edges|).
std::vector<Edge> dedup_edges(std::vector<Edge> edges, std::size_t m);

/// Union by size with path halving.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  SetId find(SetId x) noexcept;
  /// Returns false when x and y were already joined.
  bool unite(SetId x, SetId y) noexcept;

 private:
  std::vector<SetId> parent_;
  std::vector<std::size_t> size_;
};

/// Partition of the sets into classes. Class ids are dense and assigned in
/// order of each class's smallest member, members listed in increasing order.
struct ComponentLabeling {
  std::vector<std::size_t> class_of;
  std::vector<std::vector<SetId>> members;
  std::size_t class_count() const noexcept { return members.size(); }
};

ComponentLabeling components(std::span<const Edge> edges, std::size_t m);

/// Neighbor lists in one flat array: neighbors of x are
/// targets[offsets[x] .. offsets[x + 1]), in increasing order.
struct Adjacency {
  std::vector<std::size_t> offsets{0};
  std::vector<SetId> targets;
  std::span<const SetId> operator[](SetId x) const noexcept {
    return {targets.data() + offsets[x], targets.data() + offsets[x + 1]};
  }
  std::size_t size() const noexcept { return offsets.size() - 1; }
};

/// Builds neighbor lists over m vertices from sorted, deduplicated edges.
Adjacency make_adjacency(std::span<const Edge> edges, std::size_t m);

/// Dahlhaus's graph: consecutive pairs on SL lists below the running
/// maximum |Max(X)| threshold. Same components as the overlap graph, but
/// edges need not be overlapping pairs.
struct DahlhausGraph {
  std::vector<Edge> edges;          // deduplicated, sorted
  std::size_t raw_edge_count = 0;   // edges created before dedup, <= |F|
  Adjacency adjacency;
};

DahlhausGraph build_dgraph(const SetFamily& f, const SLLists& sl,
                           const MaxAssignment& max);

/// Graphviz rendering. Nodes are named X<i+1>; `label_tokens` adds each set's
/// elements to its label.
void write_dot(std::ostream& os, const SetFamily& f, std::span<const Edge> edges,
               std::string_view graph_name, bool label_tokens = true);

}  // namespace overlap
