#include "lcaf/solvers.hpp"

#include <algorithm>
#include <stdexcept>

#include "lcaf/alphabet.hpp"

namespace lcaf {

namespace {

// Fresh O(ell) count of s[p0 .. p0+ell-1] (0-based p0) into `out`.
void count_window(std::string_view s, std::size_t p0, std::size_t ell, const AlphabetMap& alpha,
                  std::vector<std::uint32_t>& out) {
    out.assign(alpha.size(), 0);
    for (std::size_t k = p0; k < p0 + ell; ++k) {
        ++out[alpha.index_of(s[k])];
    }
}

// Bypassed lengths when jumping from ell by `skip`: the values strictly
// between max(ell - skip, 0) and ell. Lengths below 1 are not counted.
std::uint64_t bypassed_count(std::size_t ell, std::size_t skip) {
    const std::size_t low = skip >= ell ? 0 : ell - skip;
    return static_cast<std::uint64_t>(ell - 1 - low);
}

// Like compute_row_into, but the first window is copied from `seed`
// instead of being recounted.
void seed_row_into(Row& out, std::string_view s, std::size_t ell, const ParikhVector& seed,
                   const AlphabetMap& alpha) {
    const std::size_t n = s.size();
    const std::uint32_t sigma = alpha.size();
    out.ell = static_cast<std::uint32_t>(ell);
    out.sigma = sigma;
    out.window_count = static_cast<std::uint32_t>(n - ell + 1);
    out.counts.resize(static_cast<std::size_t>(out.window_count) * sigma);

    std::uint32_t* cur = out.counts.data();
    std::copy(seed.counts.begin(), seed.counts.end(), cur);
    for (std::uint32_t w = 1; w < out.window_count; ++w) {
        std::uint32_t* nxt = out.counts.data() + static_cast<std::size_t>(w) * sigma;
        std::copy(cur, cur + sigma, nxt);
        --nxt[alpha.index_of(s[w - 1])];
        ++nxt[alpha.index_of(s[w - 1 + ell])];
        cur = nxt;
    }
}

LcafResult hit_result(std::size_t ell, const RowHit& hit, RowStats stats) {
    LcafResult r;
    r.length = ell;
    r.pos_a = hit.pos_a;
    r.pos_b = hit.pos_b;
    r.witness = hit.vec;
    r.stats = stats;
    return r;
}

}  // namespace

LcafResult lcaf_bruteforce(std::string_view a, std::string_view b) {
    const AlphabetMap alpha = build_alphabet(a, b);
    const std::size_t m = std::min(a.size(), b.size());
    std::vector<std::uint32_t> va, vb;
    for (std::size_t ell = m; ell >= 1; --ell) {
        for (std::size_t p0 = 0; p0 + ell <= a.size(); ++p0) {
            count_window(a, p0, ell, alpha, va);
            for (std::size_t q0 = 0; q0 + ell <= b.size(); ++q0) {
                count_window(b, q0, ell, alpha, vb);
                if (va == vb) {
                    LcafResult r;
                    r.length = ell;
                    r.pos_a = p0 + 1;
                    r.pos_b = q0 + 1;
                    r.witness = ParikhVector{va};
                    return r;
                }
            }
        }
    }
    return {};
}

LcafResult lcaf_quadratic(std::string_view a, std::string_view b) {
    const AlphabetMap alpha = build_alphabet(a, b);
    const std::size_t m = std::min(a.size(), b.size());
    Row row_a, row_b;
    RowScratch scratch;
    RowStats stats;
    for (std::size_t ell = m; ell >= 1; --ell) {
        compute_row_into(row_a, a, ell, alpha);
        compute_row_into(row_b, b, ell, alpha);
        ++stats.rows_computed;
        if (const auto hit = intersect_rows(row_a, row_b, scratch)) {
            return hit_result(ell, *hit, stats);
        }
    }
    LcafResult r;
    r.stats = stats;
    return r;
}

std::size_t skip_amount(const ComponentExtrema& ea, const ComponentExtrema& eb) {
    if (ea.min.size() != eb.min.size()) {
        throw std::invalid_argument("skip_amount: extrema over different alphabets");
    }
    std::uint32_t best = 0;
    for (std::size_t j = 0; j < ea.min.size(); ++j) {
        if (ea.min[j] > eb.max[j]) {
            best = std::max(best, ea.min[j] - eb.max[j]);
        }
        if (eb.min[j] > ea.max[j]) {
            best = std::max(best, eb.min[j] - ea.max[j]);
        }
    }
    return std::max<std::size_t>(1, best);
}

std::size_t skip_amount_literal(const ComponentExtrema& ea, const ComponentExtrema& eb) {
    if (ea.min.size() != eb.min.size()) {
        throw std::invalid_argument("skip_amount_literal: extrema over different alphabets");
    }
    std::uint32_t best = 0;
    const std::size_t sigma = ea.min.size();
    for (std::size_t j = 0; j + 1 < sigma; ++j) {  // components 1..sigma-1 only
        std::uint32_t gap;
        if (ea.max[j] >= eb.min[j]) {
            gap = ea.min[j] > eb.max[j] ? ea.min[j] - eb.max[j] : eb.max[j] - ea.min[j];
        } else {
            gap = eb.min[j] > ea.max[j] ? eb.min[j] - ea.max[j] : ea.max[j] - eb.min[j];
        }
        best = std::max(best, gap);
    }
    return std::max<std::size_t>(1, best);
}

LcafResult lcaf_skip(std::string_view a, std::string_view b, SolveTrace* trace) {
    const AlphabetMap alpha = build_alphabet(a, b);
    const std::size_t m = std::min(a.size(), b.size());
    Row row_a, row_b;
    RowScratch scratch;
    ComponentExtrema ea, eb;
    RowStats stats;
    std::size_t ell = m;
    while (ell >= 1) {
        compute_row_into(row_a, a, ell, alpha);
        compute_row_into(row_b, b, ell, alpha);
        ++stats.rows_computed;
        if (trace != nullptr) {
            trace->visited.push_back(ell);
        }
        if (const auto hit = intersect_rows(row_a, row_b, scratch)) {
            return hit_result(ell, *hit, stats);
        }
        row_extrema_into(ea, row_a);
        row_extrema_into(eb, row_b);
        const std::size_t skip = skip_amount(ea, eb);
        stats.rows_skipped += bypassed_count(ell, skip);
        ell = skip >= ell ? 0 : ell - skip;
    }
    LcafResult r;
    r.stats = stats;
    return r;
}

LcafResult lcaf_first_vector(std::string_view a, std::string_view b, SolveTrace* trace) {
    const AlphabetMap alpha = build_alphabet(a, b);
    const std::size_t m = std::min(a.size(), b.size());
    if (m == 0) {
        return {};
    }
    ParikhVector first_a = parikh(a, 1, m, alpha);
    ParikhVector first_b = parikh(b, 1, m, alpha);
    Row row_a, row_b;
    RowScratch scratch;
    ComponentExtrema ea, eb;
    RowStats stats;
    std::size_t ell = m;
    while (ell >= 1) {
        seed_row_into(row_a, a, ell, first_a, alpha);
        seed_row_into(row_b, b, ell, first_b, alpha);
        ++stats.rows_computed;
        if (trace != nullptr) {
            trace->visited.push_back(ell);
        }
        if (const auto hit = intersect_rows(row_a, row_b, scratch)) {
            return hit_result(ell, *hit, stats);
        }
        row_extrema_into(ea, row_a);
        row_extrema_into(eb, row_b);
        const std::size_t skip = skip_amount(ea, eb);
        stats.rows_skipped += bypassed_count(ell, skip);
        if (skip >= ell) {
            ell = 0;
        } else {
            // Shrink the maintained prefix vectors down to the next visited
            // length, one constant-time decrement per unit of ell.
            for (std::size_t t = ell; t > ell - skip; --t) {
                --first_a.counts[alpha.index_of(a[t - 1])];
                --first_b.counts[alpha.index_of(b[t - 1])];
            }
            stats.first_vectors_computed += skip;
            ell -= skip;
        }
    }
    LcafResult r;
    r.stats = stats;
    return r;
}

LiteralSkipAudit audit_literal_skip(std::string_view a, std::string_view b) {
    const AlphabetMap alpha = build_alphabet(a, b);
    const std::size_t m = std::min(a.size(), b.size());
    Row row_a, row_b;
    RowScratch scratch;
    ComponentExtrema ea, eb;
    LiteralSkipAudit audit;
    std::size_t ell = m;
    while (ell >= 1) {
        compute_row_into(row_a, a, ell, alpha);
        compute_row_into(row_b, b, ell, alpha);
        if (intersect_rows(row_a, row_b, scratch)) {
            break;
        }
        ++audit.misses;
        row_extrema_into(ea, row_a);
        row_extrema_into(eb, row_b);
        const std::size_t safe = skip_amount(ea, eb);
        const std::size_t literal = skip_amount_literal(ea, eb);
        if (literal > safe) {
            ++audit.literal_larger;
            // Lengths the literal jump would bypass beyond the safe jump:
            // (ell - literal, ell - safe], clamped to >= 1.
            const std::size_t lo = literal >= ell ? 1 : ell - literal + 1;
            const std::size_t hi = ell - safe;
            for (std::size_t probe = lo; probe <= hi; ++probe) {
                compute_row_into(row_a, a, probe, alpha);
                compute_row_into(row_b, b, probe, alpha);
                if (intersect_rows(row_a, row_b, scratch)) {
                    ++audit.overskips;
                    if (!audit.first_overskip_ell) {
                        audit.first_overskip_ell = probe;
                    }
                }
            }
        }
        ell = safe >= ell ? 0 : ell - safe;
    }
    return audit;
}

}  // namespace lcaf
