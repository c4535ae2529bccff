#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "overlap/family.hpp"

namespace overlap::testing {

// X1={1,2} X2={2,3} X3={3,4} X4={1,2,3,4}; tokens "1".."4" map to 0..3.
inline SetFamily fam_a() { return parse_family("1 2\n2 3\n3 4\n1 2 3 4\n"); }

/// Random family with its own RNG path, independent of overlap::gen. Each
/// set picks elements with a per-family density so the corpus mixes sparse
/// and dense families; duplicate sets are allowed.
inline SetFamily random_family(std::mt19937_64& rng, std::size_t max_n, std::size_t max_m) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(1, max_m)(rng);
  const double density = std::uniform_real_distribution<double>(0.05, 0.9)(rng);
  std::bernoulli_distribution take(density);
  std::uniform_int_distribution<Element> any(0, static_cast<Element>(n - 1));
  std::vector<std::vector<Element>> sets(m);
  for (auto& s : sets) {
    for (Element v = 0; v < n; ++v)
      if (take(rng)) s.push_back(v);
    if (s.empty()) s.push_back(any(rng));
  }
  return SetFamily::from_sets(n, sets);
}

/// Calls fn(family) for every family of `m` distinct non-empty subsets of an
/// n-element universe (as ordered sequences), 1 <= m <= max_m.
template <class Fn>
void for_each_small_family(std::size_t n, std::size_t max_m, Fn&& fn) {
  const std::uint32_t subsets = (1u << n) - 1;  // masks 1..subsets
  std::vector<std::uint32_t> pick;
  auto emit = [&] {
    std::vector<std::vector<Element>> sets;
    for (std::uint32_t mask : pick) {
      auto& s = sets.emplace_back();
      for (Element v = 0; v < n; ++v)
        if (mask >> v & 1u) s.push_back(v);
    }
    fn(SetFamily::from_sets(n, sets));
  };
  auto rec = [&](auto& self, std::size_t depth) -> void {
    if (depth > 0) emit();
    if (depth == max_m) return;
    for (std::uint32_t mask = 1; mask <= subsets; ++mask) {
      bool used = false;
      for (std::uint32_t p : pick) used |= p == mask;
      if (used) continue;
      pick.push_back(mask);
      self(self, depth + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace overlap::testing
