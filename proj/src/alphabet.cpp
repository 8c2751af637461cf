#include "lcaf/alphabet.hpp"

#include <array>

namespace lcaf {

AlphabetMap AlphabetMap::from_symbols(std::string_view pool) {
    std::array<bool, 256> seen{};
    for (char c : pool) {
        seen[byte(c)] = true;
    }
    AlphabetMap map;
    for (std::size_t b = 0; b < seen.size(); ++b) {
        if (seen[b]) {
            map.index_[b] = static_cast<std::int16_t>(map.symbols_.size());
            map.symbols_.push_back(static_cast<char>(b));
        }
    }
    return map;
}

AlphabetMap build_alphabet(std::string_view a, std::string_view b) {
    std::array<bool, 256> seen{};
    for (char c : a) {
        seen[static_cast<unsigned char>(c)] = true;
    }
    for (char c : b) {
        seen[static_cast<unsigned char>(c)] = true;
    }
    std::string symbols;
    for (std::size_t b2 = 0; b2 < seen.size(); ++b2) {
        if (seen[b2]) {
            symbols.push_back(static_cast<char>(b2));
        }
    }
    return AlphabetMap::from_symbols(symbols);
}

}  // namespace lcaf
