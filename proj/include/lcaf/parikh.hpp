#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lcaf/alphabet.hpp"

namespace lcaf {

/// Per-letter occurrence counts of one factor, in alphabet index order.
/// Two factors with equal Parikh vectors are permutations of each other.
struct ParikhVector {
    std::vector<std::uint32_t> counts;

    std::size_t size() const { return counts.size(); }
    std::uint64_t sum() const;
    std::uint32_t operator[](std::size_t j) const { return counts[j]; }

    friend bool operator==(const ParikhVector&, const ParikhVector&) = default;

    /// Lexicographic on components, first component most significant.
    friend auto operator<=>(const ParikhVector& x, const ParikhVector& y) {
        return x.counts <=> y.counts;
    }
};

/// Parikh vectors of all ell-length windows of one string, stored flat
/// (window-major). Window w (0-based) describes s[w+1 .. w+ell] in 1-based
/// string positions. Adjacent windows differ by one decrement and one
/// increment.
struct Row {
    std::uint32_t ell = 0;
    std::uint32_t sigma = 0;
    std::uint32_t window_count = 0;
    std::vector<std::uint32_t> counts;  // window_count * sigma entries

    std::span<const std::uint32_t> window(std::uint32_t w) const {
        return {counts.data() + static_cast<std::size_t>(w) * sigma, sigma};
    }

    ParikhVector vector_at(std::uint32_t w) const {
        const auto v = window(w);
        return {{v.begin(), v.end()}};
    }
};

/// Componentwise extrema of the window counts of one Row. The two arrays
/// in general are not Parikh vectors of any factor.
struct ComponentExtrema {
    std::vector<std::uint32_t> min;
    std::vector<std::uint32_t> max;
};

/// A vector common to two rows, with 1-based witness window positions.
struct RowHit {
    std::size_t pos_a = 0;
    std::size_t pos_b = 0;
    ParikhVector vec;
};

/// Reusable buffers for the sort/intersect hot path.
struct RowScratch {
    std::vector<std::uint32_t> order_a;
    std::vector<std::uint32_t> order_b;
    std::vector<std::uint32_t> tmp;
    std::vector<std::uint32_t> hist;
};

/// Parikh vector of s[i .. i+ell-1] (1-based i) by direct counting.
/// Requires 1 <= i and i+ell-1 <= |s|; ell = 0 yields the all-zero vector.
ParikhVector parikh(std::string_view s, std::size_t i, std::size_t ell, const AlphabetMap& alpha);

/// All ell-length window vectors of s in one left-to-right sliding pass.
/// Requires 1 <= ell <= |s|.
Row compute_row(std::string_view s, std::size_t ell, const AlphabetMap& alpha);
void compute_row_into(Row& out, std::string_view s, std::size_t ell, const AlphabetMap& alpha);

ComponentExtrema row_extrema(const Row& row);
void row_extrema_into(ComponentExtrema& out, const Row& row);

/// Given v = parikh(s, 1, ell), returns parikh(s, 1, ell-1) in constant
/// time: the count of symbol s[ell] drops by one.
ParikhVector shrink_first_vector(const ParikhVector& v, std::string_view s, std::size_t ell,
                                 const AlphabetMap& alpha);

/// Stable order of the row's windows under the vector order, returned as
/// 1-based window positions. Counting-sort pass per component, keys in
/// [0..ell], O(sigma * n) total.
std::vector<std::uint32_t> sort_row(const Row& row);

/// Smallest-position common vector of two equal-length rows: among all
/// vectors present in both, the hit with minimal pos_a, then minimal pos_b.
std::optional<RowHit> intersect_rows(const Row& row_a, const Row& row_b);
std::optional<RowHit> intersect_rows(const Row& row_a, const Row& row_b, RowScratch& scratch);

}  // namespace lcaf
