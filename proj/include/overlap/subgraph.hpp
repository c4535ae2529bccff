#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "overlap/dgraph.hpp"
#include "overlap/family.hpp"
#include "overlap/maxcomp.hpp"

namespace overlap {

/// (left(X), right(X), X, Y, Max(X)) for a set Y lying in the SL interval
/// opened by X, with Y distinct from X and Max(X).
struct Quintuple {
  Position left;
  Position right;
  SetId x;
  SetId y;
  SetId max_x;
  friend bool operator==(const Quintuple&, const Quintuple&) = default;
};

struct QuintupleBuild {
  std::vector<Edge> base_edges;  // (X, Max(X)), deduplicated
  std::vector<Quintuple> quintuples;
};

/// One pass over every SL list. A set covered by several intervals of the
/// same list is paired with the latest-opened one.
QuintupleBuild build_quintuples(const SetFamily& f, const SLLists& sl,
                                const MaxAssignment& max,
                                std::span<const SetExtent> extents);

/// Turns each quintuple into a true overlap edge: (X, Y) when Y misses the
/// element at left(X) or at right(X), (Y, Max(X)) otherwise. Two bucketed
/// membership passes, O(n + |F| + #quintuples). Result is not deduplicated.
std::vector<Edge> resolve_quintuples(std::span<const Quintuple> quintuples,
                                     const SetFamily& f, const PfOrder& pf,
                                     const SLLists& sl);

/// Linear-size subgraph of the overlap graph with the same components.
struct OverlapSubgraph {
  std::vector<Edge> edges;  // deduplicated, sorted
  std::size_t base_edge_count = 0;
  std::size_t quintuple_count = 0;
};

OverlapSubgraph build_subgraph(const SetFamily& f, const SLLists& sl,
                               const MaxAssignment& max, const PfOrder& pf,
                               std::span<const SetExtent> extents);

struct SpanningForest {
  ComponentLabeling classes;
  std::vector<SetId> roots;                 // smallest member per class
  std::vector<std::vector<Edge>> tree_edges; // per class, |class| - 1 edges
  std::size_t edge_count() const noexcept;
};

/// Kruskal-style: scans edges in order, keeps the ones joining two trees.
SpanningForest spanning_forest(std::span<const Edge> edges, std::size_t m);

}  // namespace overlap
