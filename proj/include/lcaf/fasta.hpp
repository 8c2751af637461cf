#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

namespace lcaf {

/// Concatenated sequence of a FASTA file: header lines ignored, letters
/// case-folded to lower case, anything outside {a,c,g,t} dropped and
/// counted. Line terminators are not sequence symbols and are not counted.
struct FastaData {
    std::string sequence;
    std::uint64_t dropped = 0;
};

FastaData parse_fasta(std::istream& in);
FastaData load_fasta(const std::filesystem::path& path);

}  // namespace lcaf
