#include "overlap/oracle.hpp"

#include <algorithm>
#include <string>

namespace overlap::oracle {

CapExceeded::CapExceeded(std::size_t m, std::size_t cap)
    : std::runtime_error("oracle refused: " + std::to_string(m) +
                         " sets exceeds cap " + std::to_string(cap)),
      m_(m),
      cap_(cap) {}

namespace {

// |A ∩ B| via a mark array sized to the universe.
class Intersector {
 public:
  explicit Intersector(std::size_t n) : mark_(n, 0) {}

  std::size_t common(std::span<const Element> a, std::span<const Element> b) {
    for (Element v : a) mark_[v] = 1;
    std::size_t c = 0;
    for (Element v : b) c += mark_[v];
    for (Element v : a) mark_[v] = 0;
    return c;
  }

  bool overlaps(std::span<const Element> a, std::span<const Element> b) {
    const std::size_t c = common(a, b);
    return c != 0 && c != a.size() && c != b.size();
  }

 private:
  std::vector<char> mark_;
};

void check_cap(const SetFamily& f, std::size_t cap) {
  if (f.set_count() > cap) throw CapExceeded(f.set_count(), cap);
}

}  // namespace

bool overlaps(std::span<const Element> a, std::span<const Element> b,
              std::size_t universe) {
  return Intersector(universe).overlaps(a, b);
}

bool overlaps(const SetFamily& f, SetId x, SetId y) {
  return overlaps(f.set(x), f.set(y), f.universe_size());
}

OverlapGraphFull overlap_graph_full(const SetFamily& f, std::size_t cap) {
  check_cap(f, cap);
  Intersector isect(f.universe_size());
  OverlapGraphFull g;
  for (SetId x = 0; x < f.set_count(); ++x)
    for (SetId y = x + 1; y < f.set_count(); ++y)
      if (isect.overlaps(f.set(x), f.set(y))) g.edges.push_back({x, y});
  g.classes = components(g.edges, f.set_count());
  return g;
}

MaxAssignment max_oracle(const SetFamily& f, const LFOrder& lf, std::size_t cap) {
  check_cap(f, cap);
  Intersector isect(f.universe_size());
  MaxAssignment max(f.set_count(), kNoSet);
  for (SetId x = 0; x < f.set_count(); ++x) {
    for (SetId y : lf.order) {
      if (f.size_of(y) < f.size_of(x)) break;
      if (isect.overlaps(f.set(x), f.set(y))) {
        max[x] = y;
        break;
      }
    }
  }
  return max;
}

std::vector<std::vector<SetId>> canonical_classes(const ComponentLabeling& c) {
  auto out = c.members;
  for (auto& cls : out) std::sort(cls.begin(), cls.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace overlap::oracle
