#include "overlap/subgraph.hpp"

namespace overlap {

QuintupleBuild build_quintuples(const SetFamily& f, const SLLists& sl,
                                const MaxAssignment& max,
                                std::span<const SetExtent> extents) {
  QuintupleBuild out;
  std::vector<Edge> base;
  for (SetId x = 0; x < f.set_count(); ++x)
    if (max[x] != kNoSet) base.push_back(make_edge(x, max[x]));
  out.base_edges = dedup_edges(std::move(base), f.set_count());

  // Open interval heads, latest on top. Sizes along an SL list never
  // decrease, so a head whose Max is too small for the current set is dead
  // for the rest of the list.
  std::vector<SetId> heads;
  for (Element v = 0; v < sl.universe_size(); ++v) {
    heads.clear();
    for (SetId z : sl[v]) {
      const std::size_t size = f.size_of(z);
      while (!heads.empty() && f.size_of(max[heads.back()]) < size) heads.pop_back();
      if (!heads.empty()) {
        const SetId x = heads.back();
        if (z != max[x])
          out.quintuples.push_back({extents[x].left, extents[x].right, x, z, max[x]});
      }
      if (max[z] != kNoSet) heads.push_back(z);
    }
  }
  return out;
}

namespace {

// Buckets quintuple indices by a position key, 1..n.
template <class Key>
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> bucket_by(
    std::span<const Quintuple> qs, std::span<const std::size_t> ids, std::size_t n, Key key) {
  std::vector<std::size_t> start(n + 2, 0);
  for (std::size_t i : ids) ++start[key(qs[i]) + 1];
  for (std::size_t p = 1; p < start.size(); ++p) start[p] += start[p - 1];
  std::vector<std::size_t> order(ids.size());
  std::vector<std::size_t> fill(start.begin(), start.end() - 1);
  for (std::size_t i : ids) order[fill[key(qs[i])]++] = i;
  return {std::move(start), std::move(order)};
}

}  // namespace

std::vector<Edge> resolve_quintuples(std::span<const Quintuple> quintuples,
                                     const SetFamily& f, const PfOrder& pf,
                                     const SLLists& sl) {
  const std::size_t n = f.universe_size();
  std::vector<char> mark(f.set_count(), 0);
  std::vector<Edge> edges;
  edges.reserve(quintuples.size());

  // For every position p with a non-empty bucket, mark SL(elem_at(p)) and
  // test each queued Y against it.
  auto sweep = [&](std::span<const std::size_t> ids, auto key, auto on_member) {
    auto [start, order] = bucket_by(quintuples, ids, n, key);
    for (Position p = 1; p <= n; ++p) {
      if (start[p] == start[p + 1]) continue;
      const auto list = sl[pf.element_at(p)];
      for (SetId s : list) mark[s] = 1;
      for (std::size_t k = start[p]; k < start[p + 1]; ++k) {
        const Quintuple& q = quintuples[order[k]];
        if (!mark[q.y])
          edges.push_back(make_edge(q.x, q.y));
        else
          on_member(order[k]);
      }
      for (SetId s : list) mark[s] = 0;
    }
  };

  std::vector<std::size_t> all(quintuples.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  std::vector<std::size_t> second;
  sweep(all, [](const Quintuple& q) { return q.left; },
        [&](std::size_t i) { second.push_back(i); });
  if (!second.empty()) {
    sweep(second, [](const Quintuple& q) { return q.right; }, [&](std::size_t i) {
      edges.push_back(make_edge(quintuples[i].y, quintuples[i].max_x));
    });
  }
  return edges;
}

OverlapSubgraph build_subgraph(const SetFamily& f, const SLLists& sl,
                               const MaxAssignment& max, const PfOrder& pf,
                               std::span<const SetExtent> extents) {
  QuintupleBuild qb = build_quintuples(f, sl, max, extents);
  std::vector<Edge> edges = resolve_quintuples(qb.quintuples, f, pf, sl);

  OverlapSubgraph g;
  g.base_edge_count = qb.base_edges.size();
  g.quintuple_count = qb.quintuples.size();
  edges.insert(edges.end(), qb.base_edges.begin(), qb.base_edges.end());
  g.edges = dedup_edges(std::move(edges), f.set_count());
  return g;
}

std::size_t SpanningForest::edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto& t : tree_edges) total += t.size();
  return total;
}

SpanningForest spanning_forest(std::span<const Edge> edges, std::size_t m) {
  UnionFind uf(m);
  std::vector<Edge> kept;
  for (const Edge& e : edges)
    if (uf.unite(e.a, e.b)) kept.push_back(e);

  SpanningForest forest;
  forest.classes = components(kept, m);
  forest.tree_edges.resize(forest.classes.class_count());
  forest.roots.reserve(forest.classes.class_count());
  for (const auto& members : forest.classes.members) forest.roots.push_back(members.front());
  for (const Edge& e : kept) forest.tree_edges[forest.classes.class_of[e.a]].push_back(e);
  return forest;
}

}  // namespace overlap
