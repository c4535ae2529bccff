#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "overlap/pipeline.hpp"

namespace overlap {

struct BenchRow {
  std::size_t target = 0;  // requested |F|
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t total_size = 0;
  StageTimes times;        // best of the repeats, per stage
  double total_ms = 0;     // best total of the repeats
  std::optional<double> ratio;  // total_ms / previous row's total_ms
};

/// |F| = 2^17 ... 2^22.
std::vector<std::size_t> default_bench_sizes();

/// Runs the full pipeline on random families of roughly each target |F|
/// (sets of size 2..14, m = n = target / 8), keeping the fastest of
/// `repeat` runs.
std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes,
                                std::uint64_t seed, std::size_t repeat = 3);

void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows);

}  // namespace overlap
