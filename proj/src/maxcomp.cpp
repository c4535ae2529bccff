#include "overlap/maxcomp.hpp"

#include <algorithm>
#include <stdexcept>

namespace overlap {

PfOrder compute_pf(const SetFamily& f, const LFOrder& lf) {
  OrderedPartition part(f.universe_size());
  std::vector<SplitEvent> events;
  for (SetId y : lf.order) part.refine(f.set(y), events);

  PfOrder pf;
  pf.elem_at = part.snapshot_order();
  pf.pos_f.resize(pf.elem_at.size());
  for (std::size_t i = 0; i < pf.elem_at.size(); ++i)
    pf.pos_f[pf.elem_at[i]] = static_cast<Position>(i + 1);
  return pf;
}

std::vector<SetExtent> compute_bounds(const SetFamily& f, const PfOrder& pf) {
  std::vector<SetExtent> out(f.set_count());
  for (SetId x = 0; x < f.set_count(); ++x) {
    auto [lo, hi] = std::minmax_element(
        f.set(x).begin(), f.set(x).end(),
        [&](Element a, Element b) { return pf.pos_f[a] < pf.pos_f[b]; });
    out[x] = {pf.pos_f[*lo], pf.pos_f[*hi]};
  }
  return out;
}

AMStructure::AMStructure(const SetFamily& f, const LFOrder& lf,
                         std::span<const SetExtent> extents) {
  const std::size_t n = f.universe_size();
  const std::size_t m = f.set_count();
  head_.assign(n + 1, kNoSet);
  next_.assign(m, kNoSet);
  prev_.assign(m, kNoSet);
  right_.resize(m);
  live_.assign(m, 1);
  live_total_ = m;

  // Counting sort by left, then append to AM[right] in that order: lists
  // come out sorted by left. Appending needs the tail, kept in a scratch.
  std::vector<std::size_t> start(n + 2, 0);
  for (const SetExtent& e : extents) ++start[e.left + 1];
  for (std::size_t i = 1; i < start.size(); ++i) start[i] += start[i - 1];
  std::vector<SetId> by_left(m);
  for (SetId x = 0; x < m; ++x) by_left[start[extents[x].left]++] = x;

  std::vector<SetId> tail(n + 1, kNoSet);
  for (SetId x : by_left) {
    const Position r = extents[x].right;
    right_[x] = r;
    if (tail[r] == kNoSet) {
      head_[r] = x;
    } else {
      next_[tail[r]] = x;
      prev_[x] = tail[r];
    }
    tail[r] = x;
  }

  // Size classes, indexed directly by size.
  std::size_t max_size = lf.order.empty() ? 0 : f.size_of(lf.order.front());
  size_offsets_.assign(max_size + 2, 0);
  for (SetId x = 0; x < m; ++x) ++size_offsets_[f.size_of(x) + 1];
  for (std::size_t s = 1; s < size_offsets_.size(); ++s)
    size_offsets_[s] += size_offsets_[s - 1];
  by_size_.resize(m);
  std::vector<std::size_t> fill(size_offsets_.begin(), size_offsets_.end() - 1);
  for (SetId x = 0; x < m; ++x) by_size_[fill[f.size_of(x)]++] = x;
}

void AMStructure::remove(SetId x) noexcept {
  if (!live_[x]) return;
  live_[x] = 0;
  --live_total_;
  if (prev_[x] != kNoSet)
    next_[prev_[x]] = next_[x];
  else
    head_[right_[x]] = next_[x];
  if (next_[x] != kNoSet) prev_[next_[x]] = prev_[x];
  prev_[x] = next_[x] = kNoSet;
}

void AMStructure::remove_size(std::size_t size) noexcept {
  if (size + 1 >= size_offsets_.size()) return;
  for (std::size_t i = size_offsets_[size]; i < size_offsets_[size + 1]; ++i)
    remove(by_size_[i]);
}

std::vector<SetId> AMStructure::list(Position p) const {
  std::vector<SetId> out;
  for (SetId x = head_[p]; x != kNoSet; x = next_[x]) out.push_back(x);
  return out;
}

MaxAssignment compute_max(const SetFamily& f, const LFOrder& lf,
                          const PfOrder& pf, std::span<const SetExtent> extents,
                          AMStructure& am) {
  MaxAssignment max(f.set_count(), kNoSet);
  OrderedPartition part = OrderedPartition::from_order(pf.elem_at);
  std::vector<SplitEvent> events;

  for (std::size_t k = 0; k < lf.order.size(); ++k) {
    const SetId y = lf.order[k];
    part.refine(f.set(y), events);
    for (const SplitEvent& ev : events) {
      if (ev.displaced != 0)
        throw std::logic_error("refinement moved an element of the P_f table");
      const Position l = ev.boundary;
      for (Position p = ev.suffix.lo; p <= ev.suffix.hi; ++p) {
        while (!am.empty(p) && extents[am.front(p)].left <= l) {
          const SetId x = am.front(p);
          max[x] = y;
          am.remove(x);
        }
      }
    }
    const std::size_t size = f.size_of(y);
    if (k + 1 == lf.order.size() || f.size_of(lf.order[k + 1]) != size)
      am.remove_size(size);
  }
  return max;
}

MaxComputation compute_all_max(const SetFamily& f, const LFOrder& lf) {
  MaxComputation out;
  out.pf = compute_pf(f, lf);
  out.extents = compute_bounds(f, out.pf);
  AMStructure am(f, lf, out.extents);
  out.max = compute_max(f, lf, out.pf, out.extents, am);
  return out;
}

}  // namespace overlap
