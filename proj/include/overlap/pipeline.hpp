#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "overlap/dgraph.hpp"
#include "overlap/family.hpp"
#include "overlap/maxcomp.hpp"
#include "overlap/subgraph.hpp"

namespace overlap {

/// Wall-clock milliseconds per stage.
struct StageTimes {
  double order = 0;       // LF order + SL lists
  double max = 0;         // P_f, extents, AM, Max
  double dgraph = 0;
  double components = 0;
  double subgraph = 0;
  double forest = 0;
  double total() const noexcept {
    return order + max + dgraph + components + subgraph + forest;
  }
};

/// Every intermediate and final artifact of one run over a family.
struct PipelineResult {
  LFOrder lf;
  SLLists sl;
  MaxComputation maxc;
  DahlhausGraph dgraph;
  ComponentLabeling classes;  // from the Dahlhaus graph
  OverlapSubgraph subgraph;
  SpanningForest forest;
  StageTimes times;
};

PipelineResult run_pipeline(const SetFamily& f);

/// Summary counts of a run.
struct RunReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t total_size = 0;
  std::size_t classes = 0;
  std::size_t dgraph_edges = 0;
  std::size_t dgraph_raw_edges = 0;
  std::size_t subgraph_edges = 0;
  std::size_t forest_edges = 0;
  StageTimes times;
};

RunReport make_report(const SetFamily& f, const PipelineResult& r);

}  // namespace overlap
