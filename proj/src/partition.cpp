#include "overlap/partition.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace overlap {

OrderedPartition::OrderedPartition(std::size_t n) {
  if (n == 0) throw std::invalid_argument("partition of an empty set");
  slots_.resize(n + 1, {0, 0});
  position_.resize(n);
  for (Element v = 0; v < n; ++v) {
    slots_[v + 1].elem = v;
    position_[v] = v + 1;
  }
  parts_.push_back({{1, static_cast<Position>(n)}});
  marked_.assign(n, 0);
}

OrderedPartition OrderedPartition::from_order(std::span<const Element> order) {
  OrderedPartition p(order.size());
  std::vector<char> seen(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Element v = order[i];
    if (v >= order.size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = 1;
    p.slots_[i + 1].elem = v;
    p.position_[v] = static_cast<Position>(i + 1);
  }
  return p;
}

std::vector<SplitEvent> OrderedPartition::refine(std::span<const Element> x) {
  std::vector<SplitEvent> events;
  refine(x, events);
  return events;
}

void OrderedPartition::refine(std::span<const Element> x, std::vector<SplitEvent>& events) {
  events.clear();
  for (Element v : x) {
    assert(v < marked_.size() && !marked_[v]);
    marked_[v] = 1;
    const PartId p = slots_[position_[v]].part;
    if (parts_[p].hits++ == 0) touched_.push_back(p);
  }
  // Suffix start per split part; 0 marks a part left unchanged.
  for (PartId p : touched_) {
    Part& c = parts_[p];
    c.cursor = c.hits == c.b.size() ? 0 : c.b.hi - c.hits + 1;
  }

  // Move members of x lying below their part's suffix into holes of the
  // suffix. Members already inside the suffix never move.
  for (Element v : x) {
    const Position from = position_[v];
    Part& c = parts_[slots_[from].part];
    if (c.cursor == 0 || from >= c.b.hi - c.hits + 1) continue;
    while (marked_[slots_[c.cursor].elem]) ++c.cursor;
    const Element w = slots_[c.cursor].elem;
    slots_[from].elem = w;
    slots_[c.cursor].elem = v;
    position_[v] = c.cursor;
    position_[w] = from;
    ++c.displaced;
  }

  for (PartId p : touched_) {
    const Part c = std::exchange(parts_[p], Part{parts_[p].b});
    if (c.cursor == 0) continue;

    const Position start = c.b.hi - c.hits + 1;
    const PartId np = static_cast<PartId>(parts_.size());
    parts_[p].b.hi = start - 1;
    parts_.push_back({{start, c.b.hi}});
    for (Position q = start; q <= c.b.hi; ++q) slots_[q].part = np;
    events.push_back({p, np, static_cast<Position>(start - 1), {start, c.b.hi}, c.displaced});
  }
  touched_.clear();
  for (Element v : x) marked_[v] = 0;
}

std::vector<Bounds> OrderedPartition::parts_in_order() const {
  std::vector<Bounds> out;
  for (Position q = 1; q < slots_.size(); q = parts_[slots_[q].part].b.hi + 1)
    out.push_back(parts_[slots_[q].part].b);
  return out;
}

std::vector<Element> OrderedPartition::snapshot_order() const {
  std::vector<Element> out;
  out.reserve(element_count());
  for (std::size_t q = 1; q < slots_.size(); ++q) out.push_back(slots_[q].elem);
  return out;
}

bool OrderedPartition::valid() const {
  const std::size_t n = element_count();
  if (position_.size() != n) return false;
  for (Position q = 1; q <= n; ++q) {
    const Element v = slots_[q].elem;
    if (v >= n || position_[v] != q) return false;
    const PartId p = slots_[q].part;
    if (p >= parts_.size()) return false;
    if (q < parts_[p].b.lo || q > parts_[p].b.hi) return false;
  }
  // Parts tile [1, n] in order, each interval owned by exactly its id.
  Position expect = 1;
  std::size_t seen = 0;
  while (expect <= n) {
    const Bounds b = parts_[slots_[expect].part].b;
    if (b.lo != expect || b.hi < b.lo) return false;
    expect = b.hi + 1;
    ++seen;
  }
  return expect == n + 1 && seen == parts_.size();
}

}  // namespace overlap
