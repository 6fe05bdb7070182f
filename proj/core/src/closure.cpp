#include "wrec/closure.hpp"

#include <string>
#include <vector>

#include "wrec/errors.hpp"

namespace wrec {

namespace {

void require_same_alphabet(const LanguageAutomaton& a, const LanguageAutomaton& b) {
    if (!(a.alphabet() == b.alphabet())) {
        throw AlphabetError("alphabet mismatch: {" + a.alphabet().symbols() + "} vs {" + b.alphabet().symbols() +
                            "}");
    }
}

/// Copies `src` into `dst` with every state index shifted by `offset`.
void embed(const LanguageAutomaton& src, Matrix<LetterSet>& dst, std::vector<bool>& finals, std::size_t offset) {
    for (std::size_t i = 0; i < src.size(); ++i) {
        finals[offset + i] = src.is_final(i);
        for (std::size_t j = 0; j < src.size(); ++j) dst(offset + i, offset + j) |= src.letters(i, j);
    }
}

/// Adds to row `row` of `dst` the out-edges of `src`'s initial state, shifted by `offset`.
void copy_initial_edges(const LanguageAutomaton& src, Matrix<LetterSet>& dst, std::size_t row, std::size_t offset) {
    for (std::size_t j = 0; j < src.size(); ++j) dst(row, offset + j) |= src.letters(LanguageAutomaton::initial(), j);
}

} // namespace

LanguageAutomaton empty_language(const Alphabet& alphabet) {
    return LanguageAutomaton(alphabet, Matrix<LetterSet>(1, 1), {false});
}

LanguageAutomaton epsilon_language(const Alphabet& alphabet) {
    return LanguageAutomaton(alphabet, Matrix<LetterSet>(1, 1), {true});
}

LanguageAutomaton letter_language(const Alphabet& alphabet, char letter) {
    Matrix<LetterSet> m(2, 2);
    m(0, 1) = LetterSet::single(alphabet, letter);
    return LanguageAutomaton(alphabet, std::move(m), {false, true});
}

LanguageAutomaton unite(const LanguageAutomaton& a, const LanguageAutomaton& b) {
    require_same_alphabet(a, b);
    const std::size_t k = a.size();
    const std::size_t n = 1 + k + b.size();
    Matrix<LetterSet> m(n, n);
    std::vector<bool> finals(n, false);
    embed(a, m, finals, 1);
    embed(b, m, finals, 1 + k);
    copy_initial_edges(a, m, 0, 1);
    copy_initial_edges(b, m, 0, 1 + k);
    finals[0] = a.is_final(0) || b.is_final(0);
    return LanguageAutomaton(a.alphabet(), std::move(m), std::move(finals));
}

LanguageAutomaton concat(const LanguageAutomaton& a, const LanguageAutomaton& b) {
    require_same_alphabet(a, b);
    const std::size_t k = a.size();
    const std::size_t n = k + b.size();
    Matrix<LetterSet> m(n, n);
    std::vector<bool> finals(n, false);
    embed(a, m, finals, 0);
    embed(b, m, finals, k);
    for (std::size_t i = 0; i < k; ++i) finals[i] = false;

    // f_i →(∪ of letters into A's final states)→ g_1; an empty union adds no edge.
    for (std::size_t i = 0; i < k; ++i) {
        LetterSet into_final;
        for (std::size_t j = 0; j < k; ++j) {
            if (a.is_final(j)) into_final |= a.letters(i, j);
        }
        m(i, k) |= into_final;
    }
    if (a.is_final(0)) {
        copy_initial_edges(b, m, 0, k);
        if (b.is_final(0)) finals[0] = true;
    }
    return LanguageAutomaton(a.alphabet(), std::move(m), std::move(finals));
}

LanguageAutomaton star(const LanguageAutomaton& a) {
    const std::size_t k = a.size();
    const std::size_t n = 1 + k;
    Matrix<LetterSet> m(n, n);
    std::vector<bool> finals(n, false);
    embed(a, m, finals, 1);
    finals[0] = true;
    copy_initial_edges(a, m, 0, 1);
    for (std::size_t i = 0; i < k; ++i) {
        if (a.is_final(i)) copy_initial_edges(a, m, 1 + i, 1);
    }
    return LanguageAutomaton(a.alphabet(), std::move(m), std::move(finals));
}

} // namespace wrec
