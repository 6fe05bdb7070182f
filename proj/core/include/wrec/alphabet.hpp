#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace wrec {

/// A finite, ordered alphabet of single-character symbols.
///
/// Symbols are ASCII letters or digits, at most 64 of them, each listed once.
/// Declaration order is the canonical order used for sorting words and
/// letter sets everywhere in the library.
class Alphabet {
public:
    static constexpr std::size_t max_size = 64;

    Alphabet() = default;
    /// Throws AlphabetError on duplicate, non-alphanumeric or too many symbols.
    explicit Alphabet(std::string_view symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    const std::string& symbols() const noexcept { return symbols_; }
    char symbol(std::size_t rank) const { return symbols_.at(rank); }

    bool contains(char c) const noexcept { return rank_[static_cast<unsigned char>(c)] >= 0; }
    /// Position of `c` in declaration order; throws AlphabetError if absent.
    std::size_t rank(char c) const;

    /// Shortlex order: shorter words first, then letter by letter by rank.
    bool less(std::string_view a, std::string_view b) const noexcept;
    /// Throws AlphabetError naming the first foreign symbol in `word`.
    void check_word(std::string_view word) const;

    bool operator==(const Alphabet& other) const noexcept { return symbols_ == other.symbols_; }

private:
    std::string symbols_;
    std::array<signed char, 256> rank_ = filled();

    static constexpr std::array<signed char, 256> filled() {
        std::array<signed char, 256> a{};
        a.fill(-1);
        return a;
    }
};

} // namespace wrec
