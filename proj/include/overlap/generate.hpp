#pragma once

#include <cstddef>
#include <cstdint>

#include "overlap/family.hpp"

// Instance generators. Output depends only on the parameters and seed.
namespace overlap::gen {

/// m two-element sets {x1, x_i}, i = 2..m+1: one class with m(m-1)/2
/// overlapping pairs.
SetFamily star(std::size_t m);

/// k sets e1 ⊂ e1e2 ⊂ ... ⊂ e1..ek: no overlaps.
SetFamily nested(std::size_t k);

/// m sets over n elements, each of uniform random size in [min_size,
/// max_size], elements drawn without replacement. Tokens are v1..vn; all n
/// are declared even if unused.
SetFamily random(std::size_t n, std::size_t m, std::size_t min_size,
                 std::size_t max_size, std::uint64_t seed);

/// `blocks` disjoint groups of k elements; each group holds the k-1 pairs
/// {e_i, e_i+1} (one overlap class per group) plus the whole group (which
/// overlaps nothing). Set order is shuffled by `seed`.
SetFamily blocks(std::size_t blocks, std::size_t k, std::uint64_t seed);

}  // namespace overlap::gen
