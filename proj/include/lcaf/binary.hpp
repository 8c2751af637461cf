#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lcaf/alphabet.hpp"
#include "lcaf/solvers.hpp"

namespace lcaf {

/// Per-length extrema of window one-counts of a binary string: for every
/// ell in 1..n, the minimum and maximum number of ones over all ell-length
/// windows. Both arrays are non-decreasing in ell with steps in {0,1}.
struct MinMaxProfile {
    std::size_t n = 0;
    std::vector<std::uint32_t> min_one;  // indexed by ell, entry 0 unused
    std::vector<std::uint32_t> max_one;
};

/// Prefix-sum sweep, O(n) per length and O(n^2) total, linear extra space.
/// The lexicographically smaller alphabet symbol plays zero. Requires
/// alpha.size() <= 2 and s drawn from alpha.
MinMaxProfile min_max_profile(std::string_view s, const AlphabetMap& alpha);

/// Same contract as min_max_profile, evaluated over machine words: the
/// one-count walk between adjacent windows is processed 64 positions per
/// block, and blocks whose deltas are all non-negative (or all
/// non-positive) cost a couple of word operations. Constant-factor
/// refinement, identical output.
MinMaxProfile min_max_profile_bitpacked(std::string_view s, const AlphabetMap& alpha);

/// Closed integer range of one-counts shared by both profiles at ell.
struct OnesRange {
    std::uint32_t lo = 0;
    std::uint32_t hi = 0;
};

/// [max(minA,minB) .. min(maxA,maxB)] when non-empty; non-empty exactly
/// when an ell-length common abelian factor exists.
std::optional<OnesRange> overlap_at(const MinMaxProfile& pa, const MinMaxProfile& pb,
                                    std::size_t ell);

/// Smallest 1-based position of an ell-length window with exactly k ones
/// (folklore sliding window). Throws if no window qualifies, which means
/// the caller asked for a k outside [minOne(ell), maxOne(ell)].
std::size_t find_window_with_ones(std::string_view s, std::size_t ell, std::uint32_t k,
                                  const AlphabetMap& alpha);

/// Binary-alphabet solver: largest ell whose one-count ranges overlap,
/// witnesses recovered via find_window_with_ones. Requires the combined
/// alphabet of a and b to have at most two symbols.
LcafResult lcaf_binary(std::string_view a, std::string_view b);

}  // namespace lcaf
