#include "lcaf/fasta.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <stdexcept>

namespace lcaf {

FastaData parse_fasta(std::istream& in) {
    FastaData data;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.front() == '>') {
            continue;
        }
        for (char c : line) {
            if (std::isspace(static_cast<unsigned char>(c))) {
                continue;
            }
            const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            if (lower == 'a' || lower == 'c' || lower == 'g' || lower == 't') {
                data.sequence.push_back(lower);
            } else {
                ++data.dropped;
            }
        }
    }
    return data;
}

FastaData load_fasta(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open FASTA file: " + path.string());
    }
    return parse_fasta(in);
}

}  // namespace lcaf
