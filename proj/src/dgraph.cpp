#include "overlap/dgraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace overlap {

std::vector<Edge> dedup_edges(std::vector<Edge> edges, std::size_t m) {
  // LSD radix: stable by b, then stable by a.
  std::vector<Edge> tmp(edges.size());
  std::vector<std::size_t> count(m + 1);
  auto pass = [&](auto key, const std::vector<Edge>& src, std::vector<Edge>& dst) {
    std::fill(count.begin(), count.end(), 0);
    for (const Edge& e : src) ++count[key(e) + 1];
    for (std::size_t i = 1; i <= m; ++i) count[i] += count[i - 1];
    for (const Edge& e : src) dst[count[key(e)]++] = e;
  };
  pass([](const Edge& e) { return e.b; }, edges, tmp);
  pass([](const Edge& e) { return e.a; }, tmp, edges);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), SetId{0});
}

SetId UnionFind::find(SetId x) noexcept {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(SetId x, SetId y) noexcept {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (size_[x] < size_[y]) std::swap(x, y);
  parent_[y] = x;
  size_[x] += size_[y];
  return true;
}

ComponentLabeling components(std::span<const Edge> edges, std::size_t m) {
  UnionFind uf(m);
  for (const Edge& e : edges) uf.unite(e.a, e.b);

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> id_of_root(m, kUnset);
  ComponentLabeling out;
  out.class_of.resize(m);
  for (SetId x = 0; x < m; ++x) {
    std::size_t& id = id_of_root[uf.find(x)];
    if (id == kUnset) {
      id = out.members.size();
      out.members.emplace_back();
    }
    out.class_of[x] = id;
    out.members[id].push_back(x);
  }
  return out;
}

Adjacency make_adjacency(std::span<const Edge> edges, std::size_t m) {
  Adjacency adj;
  adj.offsets.assign(m + 1, 0);
  for (const Edge& e : edges) {
    ++adj.offsets[e.a + 1];
    ++adj.offsets[e.b + 1];
  }
  for (std::size_t x = 1; x <= m; ++x) adj.offsets[x] += adj.offsets[x - 1];
  adj.targets.resize(adj.offsets[m]);
  std::vector<std::size_t> fill(adj.offsets.begin(), adj.offsets.end() - 1);
  // Edges sorted by (a, b): the smaller neighbors of x arrive in order as
  // edges (y, x) before any (x, z) contributes a larger one.
  for (const Edge& e : edges) adj.targets[fill[e.b]++] = e.a;
  for (const Edge& e : edges) adj.targets[fill[e.a]++] = e.b;
  return adj;
}

DahlhausGraph build_dgraph(const SetFamily& f, const SLLists& sl,
                           const MaxAssignment& max) {
  std::vector<std::uint32_t> max_size(f.set_count());
  for (SetId x = 0; x < f.set_count(); ++x)
    max_size[x] = max[x] == kNoSet ? 0 : static_cast<std::uint32_t>(f.size_of(max[x]));

  std::vector<Edge> raw;
  for (Element v = 0; v < sl.universe_size(); ++v) {
    const auto list = sl[v];
    std::size_t threshold = 0;
    for (std::size_t k = 1; k < list.size(); ++k) {
      threshold = std::max<std::size_t>(threshold, max_size[list[k - 1]]);
      if (f.size_of(list[k]) <= threshold) raw.push_back(make_edge(list[k - 1], list[k]));
    }
  }
  if (raw.size() > f.total_size())
    throw std::logic_error("Dahlhaus graph exceeds |F| edges");

  DahlhausGraph g;
  g.raw_edge_count = raw.size();
  g.edges = dedup_edges(std::move(raw), f.set_count());
  g.adjacency = make_adjacency(g.edges, f.set_count());
  return g;
}

namespace {

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

void write_dot(std::ostream& os, const SetFamily& f, std::span<const Edge> edges,
               std::string_view graph_name, bool label_tokens) {
  os << "graph \"" << dot_escape(graph_name) << "\" {\n";
  for (SetId x = 0; x < f.set_count(); ++x) {
    os << "  X" << x + 1;
    if (label_tokens) {
      std::string label = "X" + std::to_string(x + 1) + " {";
      bool first = true;
      for (Element v : f.set(x)) {
        if (!first) label += ' ';
        label += f.token(v);
        first = false;
      }
      label += '}';
      os << " [label=\"" << dot_escape(label) << "\"]";
    }
    os << ";\n";
  }
  for (const Edge& e : edges) os << "  X" << e.a + 1 << " -- X" << e.b + 1 << ";\n";
  os << "}\n";
}

}  // namespace overlap
