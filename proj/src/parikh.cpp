#include "lcaf/parikh.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lcaf {

std::uint64_t ParikhVector::sum() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

ParikhVector parikh(std::string_view s, std::size_t i, std::size_t ell, const AlphabetMap& alpha) {
    if (i < 1 || i - 1 + ell > s.size()) {
        throw std::out_of_range("parikh: window [i, i+ell-1] outside the string");
    }
    ParikhVector v{std::vector<std::uint32_t>(alpha.size(), 0)};
    for (std::size_t k = i - 1; k < i - 1 + ell; ++k) {
        ++v.counts[alpha.index_of(s[k])];
    }
    return v;
}

void compute_row_into(Row& out, std::string_view s, std::size_t ell, const AlphabetMap& alpha) {
    const std::size_t n = s.size();
    if (ell < 1 || ell > n) {
        throw std::out_of_range("compute_row: ell must be in [1, |s|]");
    }
    const std::uint32_t sigma = alpha.size();
    out.ell = static_cast<std::uint32_t>(ell);
    out.sigma = sigma;
    out.window_count = static_cast<std::uint32_t>(n - ell + 1);
    out.counts.assign(static_cast<std::size_t>(out.window_count) * sigma, 0);

    std::uint32_t* cur = out.counts.data();
    for (std::size_t k = 0; k < ell; ++k) {
        ++cur[alpha.index_of(s[k])];
    }
    for (std::uint32_t w = 1; w < out.window_count; ++w) {
        std::uint32_t* nxt = out.counts.data() + static_cast<std::size_t>(w) * sigma;
        std::copy(cur, cur + sigma, nxt);
        --nxt[alpha.index_of(s[w - 1])];
        ++nxt[alpha.index_of(s[w - 1 + ell])];
        cur = nxt;
    }
}

Row compute_row(std::string_view s, std::size_t ell, const AlphabetMap& alpha) {
    Row row;
    compute_row_into(row, s, ell, alpha);
    return row;
}

void row_extrema_into(ComponentExtrema& out, const Row& row) {
    if (row.window_count == 0) {
        throw std::invalid_argument("row_extrema: empty row");
    }
    const std::uint32_t sigma = row.sigma;
    out.min.assign(row.counts.begin(), row.counts.begin() + sigma);
    out.max.assign(row.counts.begin(), row.counts.begin() + sigma);
    for (std::uint32_t w = 1; w < row.window_count; ++w) {
        const std::uint32_t* v = row.counts.data() + static_cast<std::size_t>(w) * sigma;
        for (std::uint32_t j = 0; j < sigma; ++j) {
            out.min[j] = std::min(out.min[j], v[j]);
            out.max[j] = std::max(out.max[j], v[j]);
        }
    }
}

ComponentExtrema row_extrema(const Row& row) {
    ComponentExtrema e;
    row_extrema_into(e, row);
    return e;
}

ParikhVector shrink_first_vector(const ParikhVector& v, std::string_view s, std::size_t ell,
                                 const AlphabetMap& alpha) {
    if (ell < 1) {
        throw std::invalid_argument("shrink_first_vector: ell must be positive");
    }
    if (ell > s.size()) {
        throw std::out_of_range("shrink_first_vector: ell exceeds |s|");
    }
    if (v.size() != alpha.size() || v.sum() != ell) {
        throw std::invalid_argument("shrink_first_vector: v is not the length-ell prefix vector");
    }
    ParikhVector out = v;
    --out.counts[alpha.index_of(s[ell - 1])];
    return out;
}

namespace {

// Stable LSD counting sort: component sigma-1 first, component 0 last, so
// the final order is lexicographic with component 0 most significant.
// Keys are bounded by ell. `order` holds 0-based window indices.
void sorted_window_order(const Row& row, std::vector<std::uint32_t>& order,
                         std::vector<std::uint32_t>& tmp, std::vector<std::uint32_t>& hist) {
    const std::uint32_t n = row.window_count;
    const std::uint32_t sigma = row.sigma;
    order.resize(n);
    std::iota(order.begin(), order.end(), 0u);
    if (n == 0 || sigma == 0) {
        return;
    }
    tmp.resize(n);
    const std::size_t buckets = static_cast<std::size_t>(row.ell) + 1;
    for (std::uint32_t comp = sigma; comp-- > 0;) {
        hist.assign(buckets, 0);
        for (std::uint32_t w : order) {
            ++hist[row.counts[static_cast<std::size_t>(w) * sigma + comp]];
        }
        std::uint32_t running = 0;
        for (std::uint32_t& h : hist) {
            const std::uint32_t c = h;
            h = running;
            running += c;
        }
        for (std::uint32_t w : order) {
            tmp[hist[row.counts[static_cast<std::size_t>(w) * sigma + comp]]++] = w;
        }
        order.swap(tmp);
    }
}

int compare_windows(const Row& ra, std::uint32_t wa, const Row& rb, std::uint32_t wb) {
    const std::uint32_t* va = ra.counts.data() + static_cast<std::size_t>(wa) * ra.sigma;
    const std::uint32_t* vb = rb.counts.data() + static_cast<std::size_t>(wb) * rb.sigma;
    for (std::uint32_t j = 0; j < ra.sigma; ++j) {
        if (va[j] != vb[j]) {
            return va[j] < vb[j] ? -1 : 1;
        }
    }
    return 0;
}

bool same_window(const Row& row, std::uint32_t w1, std::uint32_t w2) {
    return compare_windows(row, w1, row, w2) == 0;
}

}  // namespace

std::vector<std::uint32_t> sort_row(const Row& row) {
    std::vector<std::uint32_t> order, tmp, hist;
    sorted_window_order(row, order, tmp, hist);
    for (std::uint32_t& w : order) {
        ++w;  // 1-based positions
    }
    return order;
}

std::optional<RowHit> intersect_rows(const Row& row_a, const Row& row_b, RowScratch& scratch) {
    if (row_a.ell != row_b.ell) {
        throw std::invalid_argument("intersect_rows: rows of different lengths");
    }
    if (row_a.sigma != row_b.sigma) {
        throw std::invalid_argument("intersect_rows: rows over different alphabets");
    }
    sorted_window_order(row_a, scratch.order_a, scratch.tmp, scratch.hist);
    sorted_window_order(row_b, scratch.order_b, scratch.tmp, scratch.hist);

    const auto& oa = scratch.order_a;
    const auto& ob = scratch.order_b;
    std::size_t ia = 0;
    std::size_t ib = 0;
    bool found = false;
    std::uint32_t best_a = 0;
    std::uint32_t best_b = 0;
    // The counting sort is stable, so within a run of equal vectors the
    // original window indices are ascending: the head of a run is the
    // smallest position for that vector. Scan all runs to minimize pos_a
    // globally (positions are unique, so no tie on pos_a across vectors).
    while (ia < oa.size() && ib < ob.size()) {
        const int c = compare_windows(row_a, oa[ia], row_b, ob[ib]);
        if (c < 0) {
            ++ia;
        } else if (c > 0) {
            ++ib;
        } else {
            if (!found || oa[ia] < best_a) {
                found = true;
                best_a = oa[ia];
                best_b = ob[ib];
            }
            const std::uint32_t run_a = oa[ia];
            const std::uint32_t run_b = ob[ib];
            do {
                ++ia;
            } while (ia < oa.size() && same_window(row_a, oa[ia], run_a));
            do {
                ++ib;
            } while (ib < ob.size() && same_window(row_b, ob[ib], run_b));
        }
    }
    if (!found) {
        return std::nullopt;
    }
    return RowHit{best_a + 1, best_b + 1, row_a.vector_at(best_a)};
}

std::optional<RowHit> intersect_rows(const Row& row_a, const Row& row_b) {
    RowScratch scratch;
    return intersect_rows(row_a, row_b, scratch);
}

}  // namespace lcaf
