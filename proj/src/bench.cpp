#include "overlap/bench.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>

#include "overlap/generate.hpp"

namespace overlap {

std::vector<std::size_t> default_bench_sizes() {
  std::vector<std::size_t> out;
  for (int p = 17; p <= 22; ++p) out.push_back(std::size_t{1} << p);
  return out;
}

std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes,
                                std::uint64_t seed, std::size_t repeat) {
  std::vector<BenchRow> rows;
  for (std::size_t target : sizes) {
    const std::size_t n = std::max<std::size_t>(target / 8, 14);
    const SetFamily f = gen::random(n, n, 2, 14, seed + target);

    BenchRow row;
    row.target = target;
    row.n = f.universe_size();
    row.m = f.set_count();
    row.total_size = f.total_size();
    row.total_ms = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < std::max<std::size_t>(repeat, 1); ++r) {
      const PipelineResult res = run_pipeline(f);
      if (res.times.total() < row.total_ms) {
        row.total_ms = res.times.total();
        row.times = res.times;
      }
    }
    if (!rows.empty()) row.ratio = row.total_ms / rows.back().total_ms;
    rows.push_back(row);
  }
  return rows;
}

void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << "target,n,m,total_size,order_ms,max_ms,dgraph_ms,components_ms,"
        "subgraph_ms,forest_ms,total_ms,ratio\n";
  os << std::fixed << std::setprecision(3);
  for (const BenchRow& r : rows) {
    os << r.target << ',' << r.n << ',' << r.m << ',' << r.total_size << ','
       << r.times.order << ',' << r.times.max << ',' << r.times.dgraph << ','
       << r.times.components << ',' << r.times.subgraph << ',' << r.times.forest << ','
       << r.total_ms << ',';
    if (r.ratio) os << *r.ratio;
    os << '\n';
  }
}

}  // namespace overlap
