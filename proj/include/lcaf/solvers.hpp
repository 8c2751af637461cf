#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lcaf/parikh.hpp"

namespace lcaf {

/// Work counters of one solver run. rows_computed counts visited lengths
/// (one row pair per length). first_vectors_computed counts the per-string
/// constant-time prefix-vector updates (the counts for A and B are equal,
/// so one field suffices). rows_skipped counts lengths ruled out without
/// computing their rows. For a descending run over lengths m..1,
/// rows_computed + rows_skipped + final_length == m + (final_length > 0).
struct RowStats {
    std::uint64_t rows_computed = 0;
    std::uint64_t first_vectors_computed = 0;
    std::uint64_t rows_skipped = 0;
};

struct LcafResult {
    std::size_t length = 0;
    std::optional<std::size_t> pos_a;  // 1-based, present iff length > 0
    std::optional<std::size_t> pos_b;
    std::optional<ParikhVector> witness;
    RowStats stats;
};

/// Lengths visited by a descending solver, in visit order.
struct SolveTrace {
    std::vector<std::size_t> visited;
};

/// Exhaustive oracle: compares every (ell, p, q) with fresh per-window
/// counting. Independent of the row/sort/intersect machinery; intended for
/// testing, O(sigma * n^4).
LcafResult lcaf_bruteforce(std::string_view a, std::string_view b);

/// Row intersection for ell descending from min(|a|,|b|), stopping at the
/// first non-empty intersection. O(sigma * n^2) worst case, O(sigma * n)
/// working space.
LcafResult lcaf_quadratic(std::string_view a, std::string_view b);

/// Provably safe number of lengths to jump after an empty intersection:
/// max(1, max_j gap[j]) with gap[j] = max(0, min_a[j]-max_b[j],
/// min_b[j]-max_a[j]). Per-letter window counts shift by at most one per
/// unit of ell, so every bypassed length has disjoint ranges in the
/// maximizing component.
std::size_t skip_amount(const ComponentExtrema& ea, const ComponentExtrema& eb);

/// The gap formula as published: per component j < sigma-1, the branch on
/// max_a[j] >= min_b[j] takes |min_a[j]-max_b[j]|, else |min_b[j]-max_a[j]|,
/// floored here at 1. When the per-letter ranges overlap this can exceed
/// the provable gap; kept for diagnostics only.
std::size_t skip_amount_literal(const ComponentExtrema& ea, const ComponentExtrema& eb);

/// Descending scan with the skip trick: on a miss at ell, jump by
/// skip_amount of the two rows' extrema.
LcafResult lcaf_skip(std::string_view a, std::string_view b, SolveTrace* trace = nullptr);

/// Same visit sequence as lcaf_skip, but each visited row is seeded in
/// O(1) from the maintained first vector, updated across skipped lengths
/// by shrink steps instead of recounting.
LcafResult lcaf_first_vector(std::string_view a, std::string_view b, SolveTrace* trace = nullptr);

/// Diagnostic for the published gap formula: replays the safe solver and
/// reports where the literal formula would have jumped past a length whose
/// rows intersect.
struct LiteralSkipAudit {
    std::uint64_t misses = 0;          // visited lengths with empty intersection
    std::uint64_t literal_larger = 0;  // misses where literal gap > safe gap
    std::uint64_t overskips = 0;       // bypassed lengths with non-empty intersection
    std::optional<std::size_t> first_overskip_ell;
};

LiteralSkipAudit audit_literal_skip(std::string_view a, std::string_view b);

}  // namespace lcaf
