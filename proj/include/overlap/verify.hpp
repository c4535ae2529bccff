#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "overlap/family.hpp"
#include "overlap/oracle.hpp"
#include "overlap/pipeline.hpp"

namespace overlap {

/// Outcome of checking one pipeline run against the oracle.
struct VerifyReport {
  struct Check {
    std::string name;
    bool ok;
    std::string detail;  // first discrepancy when !ok
  };
  std::vector<Check> checks;
  /// Smallest failing subfamily found by greedy set deletion, when a check
  /// failed and the family was small enough to minimize.
  std::optional<SetFamily> counterexample;

  bool passed() const noexcept;
};

using PipelineRunner = std::function<PipelineResult(const SetFamily&)>;

/// Checks class equality, Max equality, subgraph soundness and components,
/// forest shape, and the Dahlhaus edge bound. Throws oracle::CapExceeded.
VerifyReport check_run(const SetFamily& f, const PipelineResult& r,
                       std::size_t cap = oracle::kDefaultCap);

/// Runs `run` on `f`, checks it, and on failure shrinks `f` while the
/// failure persists (only when m <= `minimize_limit`).
VerifyReport verify_family(const SetFamily& f, std::size_t cap = oracle::kDefaultCap,
                           const PipelineRunner& run = run_pipeline,
                           std::size_t minimize_limit = 200);

/// Keeps the sets whose `keep` flag is set; drops elements no longer used.
SetFamily subfamily(const SetFamily& f, const std::vector<char>& keep);

}  // namespace overlap
