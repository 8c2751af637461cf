// Command-line front end: compute the LCAF of two strings, cross-check the
// algorithms against the brute-force oracle, and run the row-count
// experiments as plot-ready CSV.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lcaf/binary.hpp"
#include "lcaf/experiment.hpp"
#include "lcaf/fasta.hpp"
#include "lcaf/parikh.hpp"
#include "lcaf/solvers.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("LCAF_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("LCAF_SEED is not a valid integer: " + std::string(env));
        }
    }
    return 0;
}

std::string read_input_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open input file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string s = buf.str();
    // Raw symbol sequence; a single trailing newline is an artifact of
    // text editors, not part of the string.
    if (!s.empty() && s.back() == '\n') {
        s.pop_back();
        if (!s.empty() && s.back() == '\r') {
            s.pop_back();
        }
    }
    return s;
}

// "2..10" or "10,20,30" or a mix: "2..4,8".
std::vector<std::size_t> parse_lengths(const std::string& text) {
    std::vector<std::size_t> lengths;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty()) {
            continue;
        }
        const auto dots = token.find("..");
        try {
            if (dots == std::string::npos) {
                lengths.push_back(std::stoull(token));
            } else {
                const std::size_t lo = std::stoull(token.substr(0, dots));
                const std::size_t hi = std::stoull(token.substr(dots + 2));
                if (hi < lo) {
                    throw std::invalid_argument("empty range");
                }
                for (std::size_t n = lo; n <= hi; ++n) {
                    lengths.push_back(n);
                }
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse lengths element '" + token + "'");
        }
    }
    if (lengths.empty()) {
        throw std::invalid_argument("no lengths given");
    }
    return lengths;
}

std::string witness_text(const lcaf::LcafResult& r, const lcaf::AlphabetMap& alpha) {
    if (!r.witness) {
        return "-";
    }
    std::ostringstream out;
    for (std::uint32_t j = 0; j < alpha.size(); ++j) {
        if (j > 0) {
            out << ' ';
        }
        out << alpha.symbol(j) << ':' << r.witness->counts[j];
    }
    return out.str();
}

json result_json(const lcaf::LcafResult& r) {
    json j;
    j["length"] = r.length;
    j["p"] = r.pos_a ? json(*r.pos_a) : json(nullptr);
    j["q"] = r.pos_b ? json(*r.pos_b) : json(nullptr);
    j["witness"] = r.witness ? json(r.witness->counts) : json(nullptr);
    j["stats"] = {{"rows_computed", r.stats.rows_computed},
                  {"first_vectors_computed", r.stats.first_vectors_computed},
                  {"rows_skipped", r.stats.rows_skipped}};
    return j;
}

void print_result_text(const std::string& algo, const lcaf::LcafResult& r,
                       const lcaf::AlphabetMap& alpha) {
    std::cout << "algorithm: " << algo << '\n';
    std::cout << "length: " << r.length << '\n';
    std::cout << "p: " << (r.pos_a ? std::to_string(*r.pos_a) : "-") << '\n';
    std::cout << "q: " << (r.pos_b ? std::to_string(*r.pos_b) : "-") << '\n';
    std::cout << "witness: " << witness_text(r, alpha) << '\n';
    std::cout << "rows_computed: " << r.stats.rows_computed << '\n';
    std::cout << "first_vectors_computed: " << r.stats.first_vectors_computed << '\n';
    std::cout << "rows_skipped: " << r.stats.rows_skipped << '\n';
}

lcaf::LcafResult run_named(const std::string& algo, const std::string& a, const std::string& b) {
    if (algo == "oracle") {
        return lcaf::lcaf_bruteforce(a, b);
    }
    if (algo == "quadratic") {
        return lcaf::lcaf_quadratic(a, b);
    }
    if (algo == "skip") {
        return lcaf::lcaf_skip(a, b);
    }
    if (algo == "first-vector") {
        return lcaf::lcaf_first_vector(a, b);
    }
    if (algo == "binary") {
        return lcaf::lcaf_binary(a, b);  // throws on sigma > 2
    }
    throw std::invalid_argument("unknown algorithm: " + algo);
}

struct ComputeOpts {
    std::string a;
    std::string b;
    std::string file_a;
    std::string file_b;
    std::string algo = "skip";
    std::string format = "text";
    bool a_given = false;
    bool b_given = false;
};

int cmd_compute(const ComputeOpts& opts) {
    std::string a = opts.a;
    std::string b = opts.b;
    if (!opts.file_a.empty()) {
        a = read_input_file(opts.file_a);
    } else if (!opts.a_given) {
        throw std::invalid_argument("missing input string A (positional or --file-a)");
    }
    if (!opts.file_b.empty()) {
        b = read_input_file(opts.file_b);
    } else if (!opts.b_given) {
        throw std::invalid_argument("missing input string B (positional or --file-b)");
    }

    const lcaf::AlphabetMap alpha = lcaf::build_alphabet(a, b);
    if (opts.algo != "all") {
        if (opts.algo == "binary" && alpha.size() > 2) {
            throw std::invalid_argument("binary algorithm needs an alphabet of at most 2 symbols; got " +
                                        std::to_string(alpha.size()));
        }
        const lcaf::LcafResult r = run_named(opts.algo, a, b);
        if (opts.format == "json") {
            std::cout << result_json(r).dump(2) << '\n';
        } else {
            print_result_text(opts.algo, r, alpha);
        }
        return kExitOk;
    }

    const std::vector<std::string> names = {"oracle", "quadratic", "binary", "skip",
                                            "first-vector"};
    if (opts.format == "json") {
        json all = json::object();
        for (const auto& name : names) {
            if (name == "binary" && alpha.size() > 2) {
                all[name] = nullptr;
                continue;
            }
            all[name] = result_json(run_named(name, a, b));
        }
        std::cout << all.dump(2) << '\n';
        return kExitOk;
    }
    std::printf("%-14s %8s %6s %6s %8s %10s %9s\n", "algorithm", "length", "p", "q", "rows",
                "first_vec", "skipped");
    std::optional<lcaf::LcafResult> skip_result;
    for (const auto& name : names) {
        if (name == "binary" && alpha.size() > 2) {
            std::printf("%-14s %s\n", name.c_str(), "(skipped: alphabet larger than 2 symbols)");
            continue;
        }
        const lcaf::LcafResult r = run_named(name, a, b);
        if (name == "skip") {
            skip_result = r;
        }
        std::printf("%-14s %8zu %6s %6s %8llu %10llu %9llu\n", name.c_str(), r.length,
                    r.pos_a ? std::to_string(*r.pos_a).c_str() : "-",
                    r.pos_b ? std::to_string(*r.pos_b).c_str() : "-",
                    static_cast<unsigned long long>(r.stats.rows_computed),
                    static_cast<unsigned long long>(r.stats.first_vectors_computed),
                    static_cast<unsigned long long>(r.stats.rows_skipped));
    }
    if (skip_result) {
        std::printf("witness (skip): %s\n", witness_text(*skip_result, alpha).c_str());
    }
    return kExitOk;
}

struct OracleDiffOpts {
    std::string lengths = "1..12";
    std::uint64_t trials = 500;
    std::uint64_t seed = 0;
    std::uint32_t sigma = 2;
    bool audit_literal = false;
};

int cmd_oracle_diff(const OracleDiffOpts& opts) {
    if (opts.trials < 1) {
        throw std::invalid_argument("trials must be >= 1");
    }
    const auto lengths = parse_lengths(opts.lengths);
    const lcaf::AlphabetMap alpha = lcaf::alphabet_for_sigma(opts.sigma);

    std::uint64_t pairs = 0;
    std::uint64_t checks = 0;
    lcaf::LiteralSkipAudit audit_total;
    for (const std::size_t n : lengths) {
        for (std::uint64_t t = 0; t < opts.trials; ++t) {
            const auto seed = lcaf::derive_seed(opts.seed, n, t);
            const auto [a, b] = lcaf::gen_iid_pair(n, alpha, seed);
            const auto oracle = lcaf::lcaf_bruteforce(a, b);
            // Witness vectors live over the union alphabet of the pair,
            // which can be narrower than the generation alphabet.
            const lcaf::AlphabetMap pair_alpha = lcaf::build_alphabet(a, b);
            ++pairs;

            std::vector<std::string> algos = {"quadratic", "skip", "first-vector"};
            if (pair_alpha.size() <= 2) {
                algos.push_back("binary");
            }
            for (const auto& name : algos) {
                const auto r = run_named(name, a, b);
                ++checks;
                std::string fail;
                if (r.length != oracle.length) {
                    fail = "length " + std::to_string(r.length) + " != oracle " +
                           std::to_string(oracle.length);
                } else if (r.length > 0) {
                    if (!r.pos_a || !r.pos_b || !r.witness) {
                        fail = "missing witness";
                    } else if (lcaf::parikh(a, *r.pos_a, r.length, pair_alpha).counts !=
                                   r.witness->counts ||
                               lcaf::parikh(b, *r.pos_b, r.length, pair_alpha).counts !=
                                   r.witness->counts) {
                        fail = "witness does not validate";
                    }
                }
                if (!fail.empty()) {
                    std::cout << "MISMATCH n=" << n << " trial=" << t << " seed=" << seed
                              << " algorithm=" << name << '\n';
                    std::cout << "  a=" << a << '\n';
                    std::cout << "  b=" << b << '\n';
                    std::cout << "  " << fail << '\n';
                    return kExitMismatch;
                }
            }
            if (opts.audit_literal) {
                const auto audit = lcaf::audit_literal_skip(a, b);
                audit_total.misses += audit.misses;
                audit_total.literal_larger += audit.literal_larger;
                audit_total.overskips += audit.overskips;
                if (!audit_total.first_overskip_ell && audit.first_overskip_ell) {
                    audit_total.first_overskip_ell = audit.first_overskip_ell;
                }
            }
        }
    }
    std::cout << "oracle-diff: " << pairs << " pairs, " << checks << " checks, all agree\n";
    if (opts.audit_literal) {
        std::cout << "literal-skip audit: " << audit_total.misses << " misses, "
                  << audit_total.literal_larger << " with a larger literal gap, "
                  << audit_total.overskips << " lengths the literal gap would overskip\n";
    }
    return kExitOk;
}

struct ExperimentOpts {
    std::string source;
    std::string lengths;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::uint32_t sigma = 4;
    std::string fasta;
    std::string algo = "all";
    std::string output;
};

int cmd_experiment(const ExperimentOpts& opts) {
    lcaf::DatasetSpec spec;
    if (opts.source == "exhaustive") {
        spec.source = lcaf::Source::ExhaustiveBinary;
    } else if (opts.source == "iid") {
        spec.source = lcaf::Source::IidRandom;
        spec.alphabet = lcaf::alphabet_for_sigma(opts.sigma);
    } else if (opts.source == "fasta") {
        spec.source = lcaf::Source::Fasta;
        if (opts.fasta.empty()) {
            throw std::invalid_argument("--fasta is required for the fasta source");
        }
        spec.fasta_path = opts.fasta;
    } else {
        throw std::invalid_argument("unknown source: " + opts.source);
    }
    spec.lengths = parse_lengths(opts.lengths);
    spec.trials = opts.trials;
    spec.seed = opts.seed;

    std::vector<lcaf::HarnessAlgo> algos;
    if (opts.algo == "all") {
        algos = {lcaf::HarnessAlgo::Naive, lcaf::HarnessAlgo::Skip, lcaf::HarnessAlgo::FirstVector};
    } else if (opts.algo == "naive") {
        algos = {lcaf::HarnessAlgo::Naive};
    } else if (opts.algo == "skip") {
        algos = {lcaf::HarnessAlgo::Skip};
    } else if (opts.algo == "first-vector") {
        algos = {lcaf::HarnessAlgo::FirstVector};
    } else {
        throw std::invalid_argument("unknown experiment algorithm: " + opts.algo);
    }

    if (spec.source == lcaf::Source::Fasta) {
        const auto data = lcaf::load_fasta(*spec.fasta_path);
        if (data.dropped > 0) {
            std::cerr << "note: dropped " << data.dropped << " non-ACGT symbols from "
                      << opts.fasta << '\n';
        }
    }

    const auto rows = lcaf::run_experiment(spec, algos);
    if (opts.output.empty()) {
        lcaf::write_csv(rows, spec.seed, std::cout);
    } else {
        std::ofstream out(opts.output, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot open output file: " + opts.output);
        }
        lcaf::write_csv(rows, spec.seed, out);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Longest common abelian factor (LCAF) toolkit"};
    app.require_subcommand(1);

    ComputeOpts compute;
    auto* compute_cmd =
        app.add_subcommand("compute", "Compute the LCAF of two strings and report witnesses");
    auto* opt_a = compute_cmd->add_option("a", compute.a, "first string (inline)");
    auto* opt_b = compute_cmd->add_option("b", compute.b, "second string (inline)");
    compute_cmd->add_option("--file-a", compute.file_a, "read the first string from a file");
    compute_cmd->add_option("--file-b", compute.file_b, "read the second string from a file");
    compute_cmd
        ->add_option("--algo", compute.algo, "oracle|quadratic|binary|skip|first-vector|all")
        ->check(CLI::IsMember({"oracle", "quadratic", "binary", "skip", "first-vector", "all"}));
    compute_cmd->add_option("--format", compute.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    OracleDiffOpts diff;
    auto* diff_cmd = app.add_subcommand(
        "oracle-diff", "Cross-check every algorithm against the brute-force oracle");
    diff_cmd->add_option("--lengths", diff.lengths, "lengths, e.g. 1..12 or 8,16");
    diff_cmd->add_option("--trials", diff.trials, "random pairs per length");
    diff_cmd->add_option("--seed", diff.seed, "master seed");
    diff_cmd->add_option("--sigma", diff.sigma, "alphabet size for generated pairs");
    diff_cmd->add_flag("--audit-literal-skip", diff.audit_literal,
                       "also report where the published gap formula would overskip");

    ExperimentOpts exp;
    auto* exp_cmd =
        app.add_subcommand("experiment", "Run the row-count experiments and emit CSV");
    exp_cmd->add_option("--source", exp.source, "exhaustive|iid|fasta")->required();
    exp_cmd->add_option("--lengths", exp.lengths, "lengths, e.g. 2..10 or 10,20,30")->required();
    exp_cmd->add_option("--trials", exp.trials, "pairs per length (sampled sources)");
    exp_cmd->add_option("--seed", exp.seed, "master seed");
    exp_cmd->add_option("--sigma", exp.sigma, "alphabet size for the iid source");
    exp_cmd->add_option("--fasta", exp.fasta, "FASTA file for the fasta source");
    exp_cmd->add_option("--algo", exp.algo, "naive|skip|first-vector|all");
    exp_cmd->add_option("-o,--output", exp.output, "write CSV here instead of stdout");

    try {
        const std::uint64_t seed = default_seed();
        diff.seed = seed;
        exp.seed = seed;
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        compute.a_given = opt_a->count() > 0;
        compute.b_given = opt_b->count() > 0;
        if (compute_cmd->parsed()) {
            return cmd_compute(compute);
        }
        if (diff_cmd->parsed()) {
            return cmd_oracle_diff(diff);
        }
        if (exp_cmd->parsed()) {
            return cmd_experiment(exp);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
