#include "lcaf/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <stdexcept>

namespace lcaf {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Unbiased draw from [0, m); rejection keeps the mapping independent of
// any library distribution implementation.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t m) {
    const std::uint64_t threshold = (-m) % m;  // 2^64 mod m
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) {
            return r % m;
        }
    }
}

std::string random_string(std::mt19937_64& rng, std::size_t n, const AlphabetMap& alpha) {
    std::string s;
    s.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        s.push_back(alpha.symbol(static_cast<std::uint32_t>(bounded(rng, alpha.size()))));
    }
    return s;
}

const char* algo_name(HarnessAlgo algo) {
    switch (algo) {
        case HarnessAlgo::Naive:
            return "naive";
        case HarnessAlgo::Skip:
            return "skip";
        case HarnessAlgo::FirstVector:
            return "first-vector";
    }
    throw std::invalid_argument("unknown algorithm");
}

LcafResult run_algo(HarnessAlgo algo, std::string_view a, std::string_view b) {
    switch (algo) {
        case HarnessAlgo::Naive:
            return lcaf_quadratic(a, b);
        case HarnessAlgo::Skip:
            return lcaf_skip(a, b);
        case HarnessAlgo::FirstVector:
            return lcaf_first_vector(a, b);
    }
    throw std::invalid_argument("unknown algorithm");
}

std::string sig6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

void validate(const DatasetSpec& spec) {
    if (spec.lengths.empty()) {
        throw std::invalid_argument("experiment: no lengths given");
    }
    for (std::size_t n : spec.lengths) {
        if (n < 1) {
            throw std::invalid_argument("experiment: lengths must be positive");
        }
    }
    switch (spec.source) {
        case Source::ExhaustiveBinary:
            for (std::size_t n : spec.lengths) {
                if (n > kExhaustiveModeCap) {
                    throw std::invalid_argument(
                        "experiment: exhaustive source supports lengths up to " +
                        std::to_string(kExhaustiveModeCap));
                }
                if (n > kExhaustiveEnumCap && spec.trials < 1) {
                    throw std::invalid_argument("experiment: trials must be >= 1");
                }
            }
            break;
        case Source::IidRandom:
            if (spec.trials < 1) {
                throw std::invalid_argument("experiment: trials must be >= 1");
            }
            if (spec.alphabet.size() == 0) {
                throw std::invalid_argument("experiment: empty alphabet");
            }
            break;
        case Source::Fasta:
            if (spec.trials < 1) {
                throw std::invalid_argument("experiment: trials must be >= 1");
            }
            if (!spec.fasta_path) {
                throw std::invalid_argument("experiment: FASTA source needs a file path");
            }
            break;
    }
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t n, std::uint64_t trial) {
    return splitmix64(splitmix64(master + 0x9E3779B97F4A7C15ULL * (n + 1)) + trial);
}

AlphabetMap alphabet_for_sigma(std::uint32_t sigma) {
    if (sigma == 2) {
        return AlphabetMap::from_symbols("01");
    }
    if (sigma == 4) {
        return AlphabetMap::from_symbols("acgt");
    }
    if (sigma > 26) {
        throw std::invalid_argument("alphabet_for_sigma: sigma must be <= 26");
    }
    static constexpr std::string_view letters = "abcdefghijklmnopqrstuvwxyz";
    return AlphabetMap::from_symbols(letters.substr(0, sigma));
}

std::pair<std::string, std::string> gen_iid_pair(std::size_t n, const AlphabetMap& alpha,
                                                 std::uint64_t seed) {
    if (n > 0 && alpha.size() == 0) {
        throw std::invalid_argument("gen_iid_pair: empty alphabet with n > 0");
    }
    if (n == 0) {
        return {"", ""};
    }
    std::mt19937_64 rng(seed);
    std::string a = random_string(rng, n, alpha);
    std::string b = random_string(rng, n, alpha);
    return {std::move(a), std::move(b)};
}

std::uint64_t binary_pair_count(std::size_t n) {
    if (n > kExhaustiveEnumCap) {
        throw std::invalid_argument("binary_pair_count: n above the exhaustive enumeration cap");
    }
    return std::uint64_t{1} << (2 * n);
}

std::pair<std::string, std::string> binary_pair_at(std::size_t n, std::uint64_t index) {
    if (index >= binary_pair_count(n)) {
        throw std::out_of_range("binary_pair_at: index out of range");
    }
    const std::uint64_t x = index >> n;
    const std::uint64_t y = index & ((std::uint64_t{1} << n) - 1);
    const auto spell = [n](std::uint64_t code) {
        std::string s(n, '0');
        for (std::size_t i = 0; i < n; ++i) {
            if ((code >> (n - 1 - i)) & 1u) {
                s[i] = '1';
            }
        }
        return s;
    };
    return {spell(x), spell(y)};
}

std::vector<std::pair<std::string, std::string>> extract_fasta_pairs(const FastaData& fasta,
                                                                     std::size_t n,
                                                                     std::uint64_t trials,
                                                                     std::uint64_t seed) {
    const std::size_t len = fasta.sequence.size();
    if (n < 1 || n > len) {
        throw std::invalid_argument("extract_fasta_pairs: length " + std::to_string(n) +
                                    " exceeds the sequence (" + std::to_string(len) + " bases)");
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    pairs.reserve(trials);
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::mt19937_64 rng(derive_seed(seed, n, t));
        const std::size_t i = static_cast<std::size_t>(bounded(rng, len - n + 1));
        const std::size_t j = static_cast<std::size_t>(bounded(rng, len - n + 1));
        pairs.emplace_back(fasta.sequence.substr(i, n), fasta.sequence.substr(j, n));
    }
    return pairs;
}

std::vector<AggregateRow> run_experiment(const DatasetSpec& spec,
                                         const std::vector<HarnessAlgo>& algos) {
    validate(spec);
    if (algos.empty()) {
        throw std::invalid_argument("experiment: no algorithms selected");
    }

    std::vector<HarnessAlgo> selected = algos;
    std::sort(selected.begin(), selected.end(), [](HarnessAlgo x, HarnessAlgo y) {
        return std::string_view(algo_name(x)) < std::string_view(algo_name(y));
    });
    selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

    std::vector<std::size_t> lengths = spec.lengths;
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());

    std::optional<FastaData> fasta;
    if (spec.source == Source::Fasta) {
        fasta = load_fasta(*spec.fasta_path);
        const std::size_t max_n = lengths.back();
        if (fasta->sequence.size() < max_n) {
            throw std::invalid_argument("experiment: FASTA sequence shorter than requested length");
        }
    }
    const AlphabetMap binary_alpha = AlphabetMap::from_symbols("01");

    struct Accum {
        double rows = 0;
        double first_vectors = 0;
        double lcaf = 0;
    };

    std::vector<AggregateRow> out;
    for (std::size_t n : lengths) {
        std::vector<Accum> acc(selected.size());
        std::uint64_t count = 0;
        const auto feed = [&](std::string_view a, std::string_view b) {
            for (std::size_t k = 0; k < selected.size(); ++k) {
                const LcafResult r = run_algo(selected[k], a, b);
                acc[k].rows += static_cast<double>(r.stats.rows_computed);
                acc[k].first_vectors += static_cast<double>(r.stats.first_vectors_computed);
                acc[k].lcaf += static_cast<double>(r.length);
            }
            ++count;
        };

        switch (spec.source) {
            case Source::ExhaustiveBinary:
                if (n <= kExhaustiveEnumCap) {
                    const std::uint64_t total = binary_pair_count(n);
                    for (std::uint64_t idx = 0; idx < total; ++idx) {
                        const auto [a, b] = binary_pair_at(n, idx);
                        feed(a, b);
                    }
                } else {
                    for (std::uint64_t t = 0; t < spec.trials; ++t) {
                        const auto [a, b] = gen_iid_pair(n, binary_alpha, derive_seed(spec.seed, n, t));
                        feed(a, b);
                    }
                }
                break;
            case Source::IidRandom:
                for (std::uint64_t t = 0; t < spec.trials; ++t) {
                    const auto [a, b] = gen_iid_pair(n, spec.alphabet, derive_seed(spec.seed, n, t));
                    feed(a, b);
                }
                break;
            case Source::Fasta: {
                for (auto& [a, b] : extract_fasta_pairs(*fasta, n, spec.trials, spec.seed)) {
                    feed(a, b);
                }
                break;
            }
        }

        for (std::size_t k = 0; k < selected.size(); ++k) {
            AggregateRow row;
            row.n = n;
            row.algorithm = algo_name(selected[k]);
            row.mean_rows = acc[k].rows / static_cast<double>(count);
            row.mean_first_vectors = acc[k].first_vectors / static_cast<double>(count);
            row.mean_total = (acc[k].rows + acc[k].first_vectors) / static_cast<double>(count);
            row.mean_lcaf = acc[k].lcaf / static_cast<double>(count);
            row.log2_n = std::log2(static_cast<double>(n));
            row.trials = count;
            out.push_back(std::move(row));
        }
    }
    return out;
}

void write_csv(const std::vector<AggregateRow>& rows, std::uint64_t seed, std::ostream& out) {
    out << "n,algorithm,mean_rows,mean_first_vectors,mean_total,mean_lcaf,log2_n,trials,seed\n";
    for (const AggregateRow& r : rows) {
        out << r.n << ',' << r.algorithm << ',' << sig6(r.mean_rows) << ','
            << sig6(r.mean_first_vectors) << ',' << sig6(r.mean_total) << ',' << sig6(r.mean_lcaf)
            << ',' << sig6(r.log2_n) << ',' << r.trials << ',' << seed << '\n';
    }
}

ConjectureReport conjecture_check(std::size_t n, std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) {
        throw std::invalid_argument("conjecture_check: trials must be >= 1");
    }
    const AlphabetMap alpha = AlphabetMap::from_symbols("01");
    double sum_lcaf = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const auto [a, b] = gen_iid_pair(n, alpha, derive_seed(seed, n, t));
        sum_lcaf += static_cast<double>(lcaf_skip(a, b).length);
    }
    ConjectureReport report;
    report.mean_lcaf = sum_lcaf / static_cast<double>(trials);
    report.gap = static_cast<double>(n) - report.mean_lcaf;
    report.log2_n = std::log2(static_cast<double>(n));
    return report;
}

}  // namespace lcaf
