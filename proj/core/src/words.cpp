#include "wrec/words.hpp"

#include <algorithm>
#include <iterator>

#include "wrec/errors.hpp"

namespace wrec {

LetterSet LetterSet::from_letters(const Alphabet& alphabet, std::string_view letters) {
    LetterSet set;
    for (char c : letters) set.insert_rank(alphabet.rank(c));
    return set;
}

LetterSet LetterSet::single(const Alphabet& alphabet, char letter) {
    LetterSet set;
    set.insert_rank(alphabet.rank(letter));
    return set;
}

std::string LetterSet::letters(const Alphabet& alphabet) const {
    std::string out;
    for (std::size_t r = 0; r < alphabet.size(); ++r) {
        if (contains_rank(r)) out.push_back(alphabet.symbol(r));
    }
    return out;
}

WordSet WordSet::from_words(const Alphabet& alphabet, std::vector<std::string> words) {
    for (const auto& w : words) alphabet.check_word(w);
    auto less = [&](const std::string& a, const std::string& b) { return alphabet.less(a, b); };
    std::sort(words.begin(), words.end(), less);
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return WordSet(std::move(words));
}

WordSet WordSet::from_letters(const Alphabet& alphabet, LetterSet letters) {
    std::vector<std::string> words;
    words.reserve(letters.size());
    for (std::size_t r = 0; r < alphabet.size(); ++r) {
        if (letters.contains_rank(r)) words.emplace_back(1, alphabet.symbol(r));
    }
    return WordSet(std::move(words));
}

bool WordSet::contains(const Alphabet& alphabet, std::string_view word) const {
    auto less = [&](const auto& a, const auto& b) { return alphabet.less(a, b); };
    auto it = std::lower_bound(words_.begin(), words_.end(), word, less);
    return it != words_.end() && *it == word;
}

bool WordSet::uniform_length(std::size_t n) const noexcept {
    return std::all_of(words_.begin(), words_.end(), [n](const std::string& w) { return w.size() == n; });
}

LetterSet WordSet::to_letter_set(const Alphabet& alphabet) const {
    LetterSet set;
    for (const auto& w : words_) {
        if (w.size() != 1) {
            throw AlphabetError("word '" + display_word(w) + "' is not a single letter");
        }
        set.insert_rank(alphabet.rank(w.front()));
    }
    return set;
}

WordSet WordSet::unite(const Alphabet& alphabet, const WordSet& a, const WordSet& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    std::vector<std::string> out;
    out.reserve(a.size() + b.size());
    auto less = [&](const std::string& x, const std::string& y) { return alphabet.less(x, y); };
    std::set_union(a.words_.begin(), a.words_.end(), b.words_.begin(), b.words_.end(),
                   std::back_inserter(out), less);
    return WordSet(std::move(out));
}

WordSet WordSet::concat(const Alphabet& alphabet, const WordSet& a, const WordSet& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::string> out;
    out.reserve(a.size() * b.size());
    for (const auto& u : a.words_) {
        for (const auto& v : b.words_) out.push_back(u + v);
    }
    // Already sorted when both operands are graded; sort anyway for the general case.
    auto less = [&](const std::string& x, const std::string& y) { return alphabet.less(x, y); };
    if (!std::is_sorted(out.begin(), out.end(), less)) std::sort(out.begin(), out.end(), less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return WordSet(std::move(out));
}

} // namespace wrec
