#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lcaf {

/// Bijection between input symbols and the dense indices 0..sigma-1.
/// Symbols are kept in ascending byte order, so the mapping does not depend
/// on the order in which they appear in the input.
class AlphabetMap {
public:
    AlphabetMap() { index_.fill(-1); }

    /// Alphabet over the distinct symbols of `pool`.
    static AlphabetMap from_symbols(std::string_view pool);

    std::uint32_t size() const { return static_cast<std::uint32_t>(symbols_.size()); }
    bool empty() const { return symbols_.empty(); }

    bool contains(char c) const { return index_[byte(c)] >= 0; }

    /// Dense index of `c`; throws std::invalid_argument for unmapped symbols.
    std::uint32_t index_of(char c) const {
        const int j = index_[byte(c)];
        if (j < 0) {
            throw std::invalid_argument("symbol not in alphabet");
        }
        return static_cast<std::uint32_t>(j);
    }

    char symbol(std::uint32_t j) const { return symbols_.at(j); }
    const std::string& symbols() const { return symbols_; }

    friend bool operator==(const AlphabetMap&, const AlphabetMap&) = default;

private:
    static std::size_t byte(char c) { return static_cast<unsigned char>(c); }

    std::string symbols_;
    std::array<std::int16_t, 256> index_{};
};

/// Alphabet over the union of symbols occurring in `a` and `b`.
AlphabetMap build_alphabet(std::string_view a, std::string_view b);

}  // namespace lcaf
