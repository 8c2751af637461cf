#include "lcaf/binary.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lcaf {

namespace {

void require_binary(const AlphabetMap& alpha, const char* who) {
    if (alpha.size() > 2) {
        throw std::invalid_argument(std::string(who) +
                                    ": alphabet has more than two symbols");
    }
}

// One-count prefix sums: ones[i] = number of one-symbols in s[1..i].
// With sigma <= 2 the lexicographically larger symbol (index 1) plays one;
// a unary or empty alphabet has no one-symbol at all.
std::vector<std::uint32_t> ones_prefix(std::string_view s, const AlphabetMap& alpha) {
    std::vector<std::uint32_t> ones(s.size() + 1, 0);
    for (std::size_t k = 0; k < s.size(); ++k) {
        ones[k + 1] = ones[k] + (alpha.index_of(s[k]) == 1 ? 1 : 0);
    }
    return ones;
}

}  // namespace

MinMaxProfile min_max_profile(std::string_view s, const AlphabetMap& alpha) {
    require_binary(alpha, "min_max_profile");
    const std::size_t n = s.size();
    const std::vector<std::uint32_t> ones = ones_prefix(s, alpha);
    MinMaxProfile prof;
    prof.n = n;
    prof.min_one.assign(n + 1, 0);
    prof.max_one.assign(n + 1, 0);
    for (std::size_t ell = 1; ell <= n; ++ell) {
        std::uint32_t mn = ones[ell];
        std::uint32_t mx = ones[ell];
        for (std::size_t i = 1; i + ell <= n; ++i) {
            const std::uint32_t c = ones[i + ell] - ones[i];
            mn = std::min(mn, c);
            mx = std::max(mx, c);
        }
        prof.min_one[ell] = mn;
        prof.max_one[ell] = mx;
    }
    return prof;
}

MinMaxProfile min_max_profile_bitpacked(std::string_view s, const AlphabetMap& alpha) {
    require_binary(alpha, "min_max_profile");
    const std::size_t n = s.size();
    MinMaxProfile prof;
    prof.n = n;
    prof.min_one.assign(n + 1, 0);
    prof.max_one.assign(n + 1, 0);
    if (n == 0) {
        return prof;
    }

    // Pack the one-symbol indicator into words, two zero words of padding
    // so unaligned 64-bit reads past the end stay in bounds.
    const std::size_t words = (n + 63) / 64 + 2;
    std::vector<std::uint64_t> bits(words, 0);
    for (std::size_t k = 0; k < n; ++k) {
        if (alpha.index_of(s[k]) == 1) {
            bits[k / 64] |= std::uint64_t{1} << (k % 64);
        }
    }
    const auto word_at = [&](std::size_t bitpos) -> std::uint64_t {
        const std::size_t w = bitpos / 64;
        const unsigned r = bitpos % 64;
        if (r == 0) {
            return bits[w];
        }
        return (bits[w] >> r) | (bits[w + 1] << (64 - r));
    };

    std::uint32_t first = 0;  // ones in s[1..ell], updated incrementally
    for (std::size_t ell = 1; ell <= n; ++ell) {
        first += (bits[(ell - 1) / 64] >> ((ell - 1) % 64)) & 1u;
        std::uint32_t v = first;
        std::uint32_t mn = v;
        std::uint32_t mx = v;
        // Walk the window counts: moving from window i to i+1 adds
        // bit[i+ell] and removes bit[i]. Per 64-position block the deltas
        // come out of two words; a block whose walk is monotone is settled
        // by popcount alone, positions with zero delta are never touched.
        const std::size_t steps = n - ell;  // deltas for i = 0 .. steps-1
        for (std::size_t base = 0; base < steps; base += 64) {
            const std::size_t chunk = std::min<std::size_t>(64, steps - base);
            const std::uint64_t live =
                chunk == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << chunk) - 1);
            const std::uint64_t old_bits = word_at(base) & live;
            const std::uint64_t new_bits = word_at(base + ell) & live;
            const std::uint64_t inc = new_bits & ~old_bits;
            const std::uint64_t dec = old_bits & ~new_bits;
            if (dec == 0) {
                v += static_cast<std::uint32_t>(std::popcount(inc));
                mx = std::max(mx, v);
                continue;
            }
            if (inc == 0) {
                v -= static_cast<std::uint32_t>(std::popcount(dec));
                mn = std::min(mn, v);
                continue;
            }
            std::uint64_t active = inc | dec;
            while (active != 0) {
                const unsigned k = static_cast<unsigned>(std::countr_zero(active));
                active &= active - 1;
                if ((inc >> k) & 1u) {
                    ++v;
                    mx = std::max(mx, v);
                } else {
                    --v;
                    mn = std::min(mn, v);
                }
            }
        }
        prof.min_one[ell] = mn;
        prof.max_one[ell] = mx;
    }
    return prof;
}

std::optional<OnesRange> overlap_at(const MinMaxProfile& pa, const MinMaxProfile& pb,
                                    std::size_t ell) {
    if (ell < 1 || ell > pa.n || ell > pb.n) {
        throw std::out_of_range("overlap_at: ell outside both profiles");
    }
    const std::uint32_t lo = std::max(pa.min_one[ell], pb.min_one[ell]);
    const std::uint32_t hi = std::min(pa.max_one[ell], pb.max_one[ell]);
    if (lo > hi) {
        return std::nullopt;
    }
    return OnesRange{lo, hi};
}

std::size_t find_window_with_ones(std::string_view s, std::size_t ell, std::uint32_t k,
                                  const AlphabetMap& alpha) {
    require_binary(alpha, "find_window_with_ones");
    if (ell < 1 || ell > s.size()) {
        throw std::out_of_range("find_window_with_ones: ell must be in [1, |s|]");
    }
    std::uint32_t count = 0;
    for (std::size_t t = 0; t < ell; ++t) {
        count += alpha.index_of(s[t]) == 1 ? 1 : 0;
    }
    if (count == k) {
        return 1;
    }
    for (std::size_t i = 1; i + ell <= s.size(); ++i) {
        count -= alpha.index_of(s[i - 1]) == 1 ? 1 : 0;
        count += alpha.index_of(s[i + ell - 1]) == 1 ? 1 : 0;
        if (count == k) {
            return i + 1;
        }
    }
    throw std::invalid_argument(
        "find_window_with_ones: no window with the requested one-count "
        "(k outside [minOne, maxOne])");
}

LcafResult lcaf_binary(std::string_view a, std::string_view b) {
    const AlphabetMap alpha = build_alphabet(a, b);
    require_binary(alpha, "lcaf_binary");
    const std::size_t m = std::min(a.size(), b.size());
    if (m == 0) {
        return {};
    }
    const MinMaxProfile pa = min_max_profile_bitpacked(a, alpha);
    const MinMaxProfile pb = min_max_profile_bitpacked(b, alpha);
    for (std::size_t ell = m; ell >= 1; --ell) {
        const auto range = overlap_at(pa, pb, ell);
        if (!range) {
            continue;
        }
        const std::uint32_t k = range->lo;  // = max of the two minOne values
        LcafResult r;
        r.length = ell;
        r.pos_a = find_window_with_ones(a, ell, k, alpha);
        r.pos_b = find_window_with_ones(b, ell, k, alpha);
        ParikhVector witness;
        if (alpha.size() == 2) {
            witness.counts = {static_cast<std::uint32_t>(ell) - k, k};
        } else {  // sigma == 1: the single symbol plays zero
            witness.counts = {static_cast<std::uint32_t>(ell)};
        }
        r.witness = std::move(witness);
        return r;
    }
    return {};
}

}  // namespace lcaf
