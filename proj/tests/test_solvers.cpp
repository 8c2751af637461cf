#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "lcaf/experiment.hpp"
#include "lcaf/parikh.hpp"
#include "lcaf/solvers.hpp"
#include "test_support.hpp"

using namespace lcaf;

namespace {

ComponentExtrema extrema(std::vector<std::uint32_t> mn, std::vector<std::uint32_t> mx) {
    return ComponentExtrema{std::move(mn), std::move(mx)};
}

}  // namespace

TEST_CASE("bruteforce oracle handles the small worked examples") {
    const auto full = lcaf_bruteforce("ab", "ba");
    CHECK(full.length == 2);
    CHECK(full.pos_a == 1);
    CHECK(full.pos_b == 1);

    const auto none = lcaf_bruteforce("000", "111");
    CHECK(none.length == 0);
    CHECK(!none.pos_a);
    CHECK(!none.witness);

    const auto mid = lcaf_bruteforce("aab", "abb");
    CHECK(mid.length == 2);
    CHECK(mid.pos_a == 2);
    CHECK(mid.pos_b == 1);
    REQUIRE(mid.witness.has_value());
    CHECK(mid.witness->counts == std::vector<std::uint32_t>{1, 1});
}

TEST_CASE("quadratic solver visits lengths downward with early exit") {
    const auto same = lcaf_quadratic("aacgcctaatcg", "aacgcctaatcg");
    CHECK(same.length == 12);
    CHECK(same.pos_a == 1);
    CHECK(same.pos_b == 1);
    CHECK(same.stats.rows_computed == 1);

    const auto whole = lcaf_quadratic("0110", "1001");
    CHECK(whole.length == 4);

    const auto miss = lcaf_quadratic("0000", "1111");
    CHECK(miss.length == 0);
    CHECK(miss.stats.rows_computed == 4);
    CHECK(miss.stats.rows_skipped == 0);
}

TEST_CASE("skip_amount is the per-letter disjointness gap, floored at one") {
    const auto both = build_alphabet("0000", "1111");
    const auto ea = row_extrema(compute_row("0000", 4, both));
    const auto eb = row_extrema(compute_row("1111", 4, both));
    CHECK(skip_amount(ea, eb) == 4);
    CHECK(skip_amount(eb, ea) == 4);

    // Overlapping ranges in every component: minimum progress.
    CHECK(skip_amount(extrema({0, 1}, {2, 3}), extrema({1, 0}, {3, 2})) == 1);

    // One-component view: ranges [0,1] vs [3,5] gap to 2.
    CHECK(skip_amount(extrema({0}, {1}), extrema({3}, {5})) == 2);
    CHECK(skip_amount(extrema({3}, {5}), extrema({0}, {1})) == 2);

    CHECK_THROWS_AS(skip_amount(extrema({0}, {1}), extrema({0, 0}, {1, 1})),
                    std::invalid_argument);
}

TEST_CASE("lcaf_skip jumps past provably empty lengths") {
    const auto disjoint = lcaf_skip("0000", "1111");
    CHECK(disjoint.length == 0);
    CHECK(disjoint.stats.rows_computed == 1);
    CHECK(disjoint.stats.rows_skipped == 3);

    const auto same = lcaf_skip("0110", "0110");
    CHECK(same.length == 4);
    CHECK(same.stats.rows_computed == 1);
    CHECK(same.stats.rows_skipped == 0);

    const auto oracle = lcaf_bruteforce("aab", "abb");
    const auto skip = lcaf_skip("aab", "abb");
    CHECK(skip.length == oracle.length);
    CHECK(test::witness_ok("aab", "abb", skip));
}

TEST_CASE("first-vector solver matches lcaf_skip and counts shrink steps") {
    const auto same = lcaf_first_vector("0110", "0110");
    CHECK(same.length == 4);
    CHECK(same.stats.first_vectors_computed == 0);

    // Hand-traced run: the g-gap at ell=12 forces a jump of 10, then one
    // more of 1, and the hit lands at ell=1 on the common letter g.
    const std::string a = "aacgcctaatcg";
    const std::string b = "gggggggggggg";
    SolveTrace trace_skip;
    SolveTrace trace_fv;
    const auto rs = lcaf_skip(a, b, &trace_skip);
    const auto rf = lcaf_first_vector(a, b, &trace_fv);
    CHECK(trace_skip.visited == std::vector<std::size_t>{12, 2, 1});
    CHECK(trace_fv.visited == trace_skip.visited);
    CHECK(rf.length == 1);
    CHECK(rf.pos_a == 4);
    CHECK(rf.pos_b == 1);
    REQUIRE(rf.witness.has_value());
    CHECK(rf.witness->counts == std::vector<std::uint32_t>{0, 0, 1, 0});
    CHECK(rf.stats.rows_computed == 3);
    CHECK(rf.stats.rows_skipped == 9);
    CHECK(rf.stats.first_vectors_computed == 11);
    CHECK(rs.length == rf.length);
    CHECK(rs.pos_a == rf.pos_a);
    CHECK(rs.pos_b == rf.pos_b);
    CHECK(rs.witness == rf.witness);
    CHECK(rs.stats.rows_computed == rf.stats.rows_computed);
    CHECK(rs.stats.rows_skipped == rf.stats.rows_skipped);
}

TEST_CASE("all solvers agree with the oracle on every binary pair up to n=6") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const std::uint64_t strings = std::uint64_t{1} << n;
        for (std::uint64_t xa = 0; xa < strings; ++xa) {
            for (std::uint64_t xb = 0; xb < strings; ++xb) {
                const std::string a = test::spell_binary(xa, n);
                const std::string b = test::spell_binary(xb, n);
                const auto oracle = lcaf_bruteforce(a, b);

                SolveTrace ts;
                SolveTrace tf;
                const auto rq = lcaf_quadratic(a, b);
                const auto rs = lcaf_skip(a, b, &ts);
                const auto rf = lcaf_first_vector(a, b, &tf);

                REQUIRE(rq.length == oracle.length);
                REQUIRE(rs.length == oracle.length);
                REQUIRE(rf.length == oracle.length);
                REQUIRE(test::witness_ok(a, b, rq));
                REQUIRE(test::witness_ok(a, b, rs));
                REQUIRE(test::witness_ok(a, b, rf));
                REQUIRE(test::stats_identity_ok(a, b, rq));
                REQUIRE(test::stats_identity_ok(a, b, rs));
                REQUIRE(test::stats_identity_ok(a, b, rf));
                REQUIRE(ts.visited == tf.visited);
                REQUIRE(rs.stats.rows_computed == rf.stats.rows_computed);
                REQUIRE(rf.stats.first_vectors_computed <= n);
            }
        }
    }
}

TEST_CASE("solvers agree with the oracle on random wider alphabets") {
    std::mt19937_64 rng(8086);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t sigma = 2 + rng() % 3;
        const std::string_view symbols = std::string_view("acgt").substr(0, sigma);
        const std::size_t na = 1 + rng() % 24;
        const std::size_t nb = 1 + rng() % 24;
        const std::string a = test::random_string(rng, na, symbols);
        const std::string b = test::random_string(rng, nb, symbols);
        const auto oracle = lcaf_bruteforce(a, b);
        for (const auto& r : {lcaf_quadratic(a, b), lcaf_skip(a, b), lcaf_first_vector(a, b)}) {
            REQUIRE(r.length == oracle.length);
            REQUIRE(test::witness_ok(a, b, r));
            REQUIRE(test::stats_identity_ok(a, b, r));
        }
    }
}

TEST_CASE("skip soundness: every bypassed length has an empty intersection") {
    std::mt19937_64 rng(616);
    for (int iter = 0; iter < 150; ++iter) {
        const std::size_t sigma = 2 + rng() % 3;
        const std::string_view symbols = std::string_view("acgt").substr(0, sigma);
        const std::size_t n = 2 + rng() % 20;
        const std::string a = test::random_string(rng, n, symbols);
        const std::string b = test::random_string(rng, n, symbols);
        const auto alpha = build_alphabet(a, b);

        SolveTrace trace;
        const auto r = lcaf_skip(a, b, &trace);
        std::vector<bool> visited(n + 1, false);
        for (std::size_t ell : trace.visited) {
            visited[ell] = true;
        }
        // Everything above the answer that was not visited must be empty.
        for (std::size_t ell = r.length + 1; ell <= std::min(a.size(), b.size()); ++ell) {
            if (visited[ell]) {
                continue;
            }
            const auto hit = intersect_rows(compute_row(a, ell, alpha), compute_row(b, ell, alpha));
            REQUIRE(!hit.has_value());
        }
    }
}

TEST_CASE("empty and disjoint inputs yield length zero without witnesses") {
    for (const auto& r : {lcaf_bruteforce("", ""), lcaf_quadratic("", "abc"), lcaf_skip("x", "y"),
                          lcaf_first_vector("", "")}) {
        CHECK(r.length == 0);
        CHECK(!r.pos_a);
        CHECK(!r.pos_b);
        CHECK(!r.witness);
    }
}

TEST_CASE("literal gap formula matches the safe gap on binary misses") {
    // On a miss over a binary alphabet the one-count ranges are disjoint
    // (that is exactly the overlap criterion), and on disjoint ranges the
    // published formula reduces to the disjointness gap.
    for (std::size_t n = 1; n <= 6; ++n) {
        const std::uint64_t strings = std::uint64_t{1} << n;
        for (std::uint64_t xa = 0; xa < strings; ++xa) {
            for (std::uint64_t xb = 0; xb < strings; ++xb) {
                const std::string a = test::spell_binary(xa, n);
                const std::string b = test::spell_binary(xb, n);
                const auto audit = audit_literal_skip(a, b);
                REQUIRE(audit.literal_larger == 0);
                REQUIRE(audit.overskips == 0);
            }
        }
    }
}

TEST_CASE("literal gap formula can jump past the answer on three letters") {
    // With overlapping per-letter ranges the published |min - max| gap is
    // not a disjointness gap. Here it would leap from the miss at ell=6
    // straight past ell=5, which is the actual LCAF length.
    const std::string a = "ccaccbcca";
    const std::string b = "baabcaccb";
    REQUIRE(lcaf_bruteforce(a, b).length == 5);

    SolveTrace trace;
    const auto safe = lcaf_skip(a, b, &trace);
    CHECK(safe.length == 5);
    CHECK(trace.visited == std::vector<std::size_t>{9, 6, 5});

    const auto audit = audit_literal_skip(a, b);
    CHECK(audit.misses == 2);
    CHECK(audit.literal_larger == 1);
    CHECK(audit.overskips == 1);
    REQUIRE(audit.first_overskip_ell.has_value());
    CHECK(*audit.first_overskip_ell == 5);
}
