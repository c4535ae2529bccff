#include "overlap/verify.hpp"

#include <algorithm>
#include <sstream>

namespace overlap {

bool VerifyReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

namespace {

std::string name_of(SetId x) {
  return x == kNoSet ? "none" : "X" + std::to_string(x + 1);
}

std::string describe(const std::vector<std::vector<SetId>>& classes) {
  std::ostringstream os;
  for (const auto& cls : classes) {
    os << '{';
    for (std::size_t i = 0; i < cls.size(); ++i) os << (i ? "," : "") << name_of(cls[i]);
    os << '}';
  }
  return os.str();
}

VerifyReport::Check check_classes(const std::string& name, const ComponentLabeling& got,
                                  const std::vector<std::vector<SetId>>& want) {
  auto canon = oracle::canonical_classes(got);
  if (canon == want) return {name, true, ""};
  return {name, false, "got " + describe(canon) + " want " + describe(want)};
}

VerifyReport::Check check_forest(const SpanningForest& forest,
                                 const std::vector<Edge>& subgraph_edges, std::size_t m) {
  const std::string name = "forest shape";
  UnionFind uf(m);
  for (std::size_t c = 0; c < forest.classes.class_count(); ++c) {
    const auto& members = forest.classes.members[c];
    const auto& tree = forest.tree_edges[c];
    if (tree.size() + 1 != members.size())
      return {name, false, "class of " + name_of(members.front()) + " has " +
                               std::to_string(tree.size()) + " tree edges for " +
                               std::to_string(members.size()) + " members"};
    for (const Edge& e : tree) {
      if (!std::binary_search(subgraph_edges.begin(), subgraph_edges.end(), e))
        return {name, false, name_of(e.a) + "--" + name_of(e.b) + " not a subgraph edge"};
      if (forest.classes.class_of[e.a] != c || forest.classes.class_of[e.b] != c)
        return {name, false, name_of(e.a) + "--" + name_of(e.b) + " leaves its tree"};
      if (!uf.unite(e.a, e.b))
        return {name, false, name_of(e.a) + "--" + name_of(e.b) + " closes a cycle"};
    }
  }
  return {name, true, ""};
}

}  // namespace

VerifyReport check_run(const SetFamily& f, const PipelineResult& r, std::size_t cap) {
  const std::size_t m = f.set_count();
  const auto og = oracle::overlap_graph_full(f, cap);
  const auto want_classes = oracle::canonical_classes(og.classes);
  const auto want_max = oracle::max_oracle(f, r.lf, cap);

  VerifyReport rep;
  rep.checks.push_back(check_classes("classes", r.classes, want_classes));

  {
    VerifyReport::Check c{"max", true, ""};
    for (SetId x = 0; x < m; ++x) {
      if (r.maxc.max[x] != want_max[x]) {
        c = {"max", false, "Max(" + name_of(x) + ") = " + name_of(r.maxc.max[x]) +
                               ", oracle " + name_of(want_max[x])};
        break;
      }
    }
    rep.checks.push_back(c);
  }

  {
    VerifyReport::Check c{"dgraph edge bound", true, ""};
    if (r.dgraph.raw_edge_count > f.total_size())
      c = {c.name, false, std::to_string(r.dgraph.raw_edge_count) + " edges > |F| = " +
                              std::to_string(f.total_size())};
    rep.checks.push_back(c);
  }

  {
    VerifyReport::Check c{"subgraph soundness", true, ""};
    for (const Edge& e : r.subgraph.edges) {
      if (!oracle::overlaps(f, e.a, e.b)) {
        c = {c.name, false, name_of(e.a) + "--" + name_of(e.b) + " do not overlap"};
        break;
      }
    }
    if (c.ok && r.subgraph.edges.size() > m + f.total_size())
      c = {c.name, false, "edge count exceeds m + |F|"};
    rep.checks.push_back(c);
  }

  rep.checks.push_back(check_classes("subgraph classes",
                                     components(r.subgraph.edges, m), want_classes));
  rep.checks.push_back(check_forest(r.forest, r.subgraph.edges, m));
  return rep;
}

SetFamily subfamily(const SetFamily& f, const std::vector<char>& keep) {
  std::vector<Element> remap(f.universe_size(), kNoSet);
  std::vector<std::string> tokens;
  std::vector<std::vector<Element>> sets;
  for (SetId x = 0; x < f.set_count(); ++x) {
    if (!keep[x]) continue;
    auto& s = sets.emplace_back();
    for (Element v : f.set(x)) {
      if (remap[v] == kNoSet) {
        remap[v] = static_cast<Element>(tokens.size());
        tokens.push_back(f.token(v));
      }
      s.push_back(remap[v]);
    }
  }
  const std::size_t n = tokens.size();
  return SetFamily::from_sets(n, sets, std::move(tokens));
}

VerifyReport verify_family(const SetFamily& f, std::size_t cap,
                           const PipelineRunner& run, std::size_t minimize_limit) {
  VerifyReport rep = check_run(f, run(f), cap);
  if (rep.passed() || f.set_count() > minimize_limit) return rep;

  SetFamily current = f;
  bool shrunk = true;
  while (shrunk && current.set_count() > 1) {
    shrunk = false;
    for (SetId drop = 0; drop < current.set_count(); ++drop) {
      std::vector<char> keep(current.set_count(), 1);
      keep[drop] = 0;
      SetFamily candidate = subfamily(current, keep);
      if (!check_run(candidate, run(candidate), cap).passed()) {
        current = std::move(candidate);
        shrunk = true;
        break;
      }
    }
  }
  rep.counterexample = std::move(current);
  return rep;
}

}  // namespace overlap
