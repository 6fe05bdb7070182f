#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wrec/alphabet.hpp"

namespace wrec {

/// A subset of an alphabet, i.e. an element of P(Σ). Stored as a bit mask
/// indexed by alphabet rank, so iteration is in declaration order.
class LetterSet {
public:
    constexpr LetterSet() = default;
    constexpr explicit LetterSet(std::uint64_t mask) : mask_(mask) {}

    /// Parses a string of letters; duplicates are ignored.
    static LetterSet from_letters(const Alphabet& alphabet, std::string_view letters);
    static LetterSet single(const Alphabet& alphabet, char letter);

    constexpr std::uint64_t mask() const noexcept { return mask_; }
    constexpr bool empty() const noexcept { return mask_ == 0; }
    constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }
    constexpr bool contains_rank(std::size_t rank) const noexcept { return (mask_ >> rank) & 1U; }
    bool contains(const Alphabet& alphabet, char letter) const {
        return alphabet.contains(letter) && contains_rank(alphabet.rank(letter));
    }

    constexpr void insert_rank(std::size_t rank) noexcept { mask_ |= std::uint64_t{1} << rank; }

    /// Letters in declaration order.
    std::string letters(const Alphabet& alphabet) const;

    constexpr LetterSet operator|(LetterSet o) const noexcept { return LetterSet(mask_ | o.mask_); }
    constexpr LetterSet operator&(LetterSet o) const noexcept { return LetterSet(mask_ & o.mask_); }
    constexpr LetterSet& operator|=(LetterSet o) noexcept {
        mask_ |= o.mask_;
        return *this;
    }
    constexpr bool disjoint(LetterSet o) const noexcept { return (mask_ & o.mask_) == 0; }

    constexpr bool operator==(const LetterSet&) const = default;

private:
    std::uint64_t mask_ = 0;
};

/// A finite language: a sorted, duplicate-free list of words in the shortlex
/// order of some alphabet. The empty word is the empty string.
///
/// Sortedness is relative to the alphabet the set was built with; every
/// operation that combines sets takes that alphabet explicitly.
class WordSet {
public:
    WordSet() = default;

    /// {ε}
    static WordSet epsilon() { return WordSet(std::vector<std::string>{std::string()}); }
    /// Sorts and deduplicates; throws AlphabetError on foreign symbols.
    static WordSet from_words(const Alphabet& alphabet, std::vector<std::string> words);
    static WordSet from_letters(const Alphabet& alphabet, LetterSet letters);

    bool empty() const noexcept { return words_.empty(); }
    std::size_t size() const noexcept { return words_.size(); }
    std::span<const std::string> words() const noexcept { return words_; }
    auto begin() const noexcept { return words_.begin(); }
    auto end() const noexcept { return words_.end(); }

    bool contains(const Alphabet& alphabet, std::string_view word) const;
    bool is_epsilon() const noexcept { return words_.size() == 1 && words_.front().empty(); }
    /// True when every word has exactly length `n` (vacuously true for ∅).
    bool uniform_length(std::size_t n) const noexcept;
    /// If every member is a single letter, the corresponding LetterSet.
    bool is_letter_set() const noexcept { return uniform_length(1); }
    LetterSet to_letter_set(const Alphabet& alphabet) const;

    /// Set union.
    static WordSet unite(const Alphabet& alphabet, const WordSet& a, const WordSet& b);
    /// Element-wise concatenation { uv : u ∈ a, v ∈ b }.
    static WordSet concat(const Alphabet& alphabet, const WordSet& a, const WordSet& b);

    bool operator==(const WordSet&) const = default;

private:
    explicit WordSet(std::vector<std::string> sorted) : words_(std::move(sorted)) {}

    std::vector<std::string> words_;
};

/// Renders a word for display; ε becomes "&".
inline std::string display_word(std::string_view word) {
    return word.empty() ? std::string("&") : std::string(word);
}

} // namespace wrec
