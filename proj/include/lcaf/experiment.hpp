#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcaf/alphabet.hpp"
#include "lcaf/fasta.hpp"
#include "lcaf/solvers.hpp"

namespace lcaf {

enum class Source {
    ExhaustiveBinary,  // all 4^n ordered binary pairs (sampled above the enum cap)
    IidRandom,         // seeded uniform i.i.d. pairs over a given alphabet
    Fasta,             // random equal-length substring pairs of one FASTA sequence
};

/// Full enumeration of the 4^n ordered pairs up to here.
inline constexpr std::size_t kExhaustiveEnumCap = 10;
/// Above the enum cap and up to here the exhaustive source switches to
/// seeded uniform pair sampling; larger n is rejected.
inline constexpr std::size_t kExhaustiveModeCap = 16;

struct DatasetSpec {
    Source source = Source::IidRandom;
    std::vector<std::size_t> lengths;
    std::uint64_t trials = 1000;
    AlphabetMap alphabet;  // used by IidRandom
    std::uint64_t seed = 0;
    std::optional<std::filesystem::path> fasta_path;
};

enum class HarnessAlgo {
    Naive,        // descending one length at a time, no skipping
    Skip,         // skip trick
    FirstVector,  // skip trick + first-vector maintenance
};

/// One aggregated result line: arithmetic means over exactly `trials` runs
/// (the full enumeration counts as trials for exhaustive inputs).
struct AggregateRow {
    std::size_t n = 0;
    std::string algorithm;
    double mean_rows = 0;
    double mean_first_vectors = 0;
    double mean_total = 0;  // mean_rows + mean_first_vectors
    double mean_lcaf = 0;
    double log2_n = 0;
    std::uint64_t trials = 0;
};

/// Per-(n, trial) sub-seed of a master seed; splitmix64-based, stable
/// across platforms, and independent of trial execution order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t n, std::uint64_t trial);

/// Conventional alphabets by size: 2 -> {0,1}, 4 -> {a,c,g,t}, otherwise
/// the first sigma lower-case letters (sigma <= 26).
AlphabetMap alphabet_for_sigma(std::uint32_t sigma);

/// Two independent uniform i.i.d. strings, fully determined by
/// (n, alphabet, seed). The generator is mt19937_64 with rejection-sampled
/// bounded draws, so the output is reproducible across implementations.
std::pair<std::string, std::string> gen_iid_pair(std::size_t n, const AlphabetMap& alpha,
                                                 std::uint64_t seed);

/// 4^n, the number of ordered binary pairs of length n (n <= enum cap).
std::uint64_t binary_pair_count(std::size_t n);

/// Pair number `index` in the fixed enumeration order: index = x * 2^n + y,
/// strings spelled most-significant bit first over {'0','1'}.
std::pair<std::string, std::string> binary_pair_at(std::size_t n, std::uint64_t index);

/// `trials` substring pairs of length n at seeded uniform offsets.
std::vector<std::pair<std::string, std::string>> extract_fasta_pairs(const FastaData& fasta,
                                                                     std::size_t n,
                                                                     std::uint64_t trials,
                                                                     std::uint64_t seed);

/// Runs each algorithm on every generated pair and aggregates RowStats and
/// LCAF lengths per (n, algorithm). Output is sorted by n, then algorithm
/// name, independent of execution order.
std::vector<AggregateRow> run_experiment(const DatasetSpec& spec,
                                         const std::vector<HarnessAlgo>& algos);

/// CSV with header, one AggregateRow per line, '.' decimal separator and
/// 6 significant digits, '\n' line endings.
void write_csv(const std::vector<AggregateRow>& rows, std::uint64_t seed, std::ostream& out);

/// Empirical gap between n and the mean LCAF of seeded i.i.d. binary
/// pairs, reported next to log2(n). Makes no pass/fail claim by itself.
struct ConjectureReport {
    double mean_lcaf = 0;
    double gap = 0;  // n - mean_lcaf
    double log2_n = 0;
};

ConjectureReport conjecture_check(std::size_t n, std::uint64_t trials, std::uint64_t seed);

}  // namespace lcaf
