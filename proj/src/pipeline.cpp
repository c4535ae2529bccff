#include "overlap/pipeline.hpp"

#include <chrono>

namespace overlap {

namespace {

class Stopwatch {
 public:
  double lap() {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

PipelineResult run_pipeline(const SetFamily& f) {
  PipelineResult r;
  Stopwatch sw;
  r.lf = lf_order(f);
  r.sl = build_sl_lists(f, r.lf);
  r.times.order = sw.lap();
  r.maxc = compute_all_max(f, r.lf);
  r.times.max = sw.lap();
  r.dgraph = build_dgraph(f, r.sl, r.maxc.max);
  r.times.dgraph = sw.lap();
  r.classes = components(r.dgraph.edges, f.set_count());
  r.times.components = sw.lap();
  r.subgraph = build_subgraph(f, r.sl, r.maxc.max, r.maxc.pf, r.maxc.extents);
  r.times.subgraph = sw.lap();
  r.forest = spanning_forest(r.subgraph.edges, f.set_count());
  r.times.forest = sw.lap();
  return r;
}

RunReport make_report(const SetFamily& f, const PipelineResult& r) {
  RunReport rep;
  rep.n = f.universe_size();
  rep.m = f.set_count();
  rep.total_size = f.total_size();
  rep.classes = r.classes.class_count();
  rep.dgraph_edges = r.dgraph.edges.size();
  rep.dgraph_raw_edges = r.dgraph.raw_edge_count;
  rep.subgraph_edges = r.subgraph.edges.size();
  rep.forest_edges = r.forest.edge_count();
  rep.times = r.times;
  return rep;
}

}  // namespace overlap
