#include "overlap/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace overlap::gen {

namespace {

std::vector<std::string> numbered(char prefix, std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

SetFamily star(std::size_t m) {
  if (m == 0) throw std::invalid_argument("star: m must be >= 1");
  std::vector<std::vector<Element>> sets;
  sets.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) sets.push_back({0, static_cast<Element>(i)});
  return SetFamily::from_sets(m + 1, sets, numbered('x', m + 1));
}

SetFamily nested(std::size_t k) {
  if (k == 0) throw std::invalid_argument("nested: k must be >= 1");
  std::vector<std::vector<Element>> sets(k);
  for (std::size_t i = 0; i < k; ++i) {
    sets[i].resize(i + 1);
    std::iota(sets[i].begin(), sets[i].end(), Element{0});
  }
  return SetFamily::from_sets(k, sets, numbered('e', k));
}

SetFamily random(std::size_t n, std::size_t m, std::size_t min_size,
                 std::size_t max_size, std::uint64_t seed) {
  if (n == 0 || m == 0) throw std::invalid_argument("random: n and m must be >= 1");
  if (min_size == 0 || min_size > max_size || max_size > n)
    throw std::invalid_argument("random: need 1 <= min_size <= max_size <= n");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size_dist(min_size, max_size);
  std::vector<Element> pool(n);
  std::iota(pool.begin(), pool.end(), Element{0});

  std::vector<std::vector<Element>> sets(m);
  for (auto& s : sets) {
    // Partial Fisher-Yates over a persistent pool: O(|s|) per set.
    const std::size_t size = size_dist(rng);
    s.resize(size);
    for (std::size_t j = 0; j < size; ++j) {
      std::uniform_int_distribution<std::size_t> pick(j, n - 1);
      std::swap(pool[j], pool[pick(rng)]);
      s[j] = pool[j];
    }
  }
  return SetFamily::from_sets(n, sets, numbered('v', n));
}

SetFamily blocks(std::size_t blocks, std::size_t k, std::uint64_t seed) {
  if (blocks == 0 || k < 2) throw std::invalid_argument("blocks: need blocks >= 1, k >= 2");
  std::vector<std::vector<Element>> sets;
  for (std::size_t b = 0; b < blocks; ++b) {
    const auto base = static_cast<Element>(b * k);
    for (std::size_t i = 0; i + 1 < k; ++i)
      sets.push_back({static_cast<Element>(base + i), static_cast<Element>(base + i + 1)});
    std::vector<Element> whole(k);
    std::iota(whole.begin(), whole.end(), base);
    sets.push_back(std::move(whole));
  }
  std::mt19937_64 rng(seed);
  std::shuffle(sets.begin(), sets.end(), rng);
  return SetFamily::from_sets(blocks * k, sets, numbered('b', blocks * k));
}

}  // namespace overlap::gen
