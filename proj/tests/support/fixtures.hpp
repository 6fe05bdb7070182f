#pragma once

// Machines that recur across test files.

#include "wrec/language.hpp"

namespace wrec::testing {

inline const Alphabet& ab() {
    static const Alphabet alphabet("ab");
    return alphabet;
}

/// (ab*a)*: f1 -a-> f2, f2 -a-> f1, f2 -b-> f2, f1 final.
inline LanguageAutomaton abstar() {
    Matrix<LetterSet> m(2, 2, LetterSet{});
    m(0, 1) = LetterSet::from_letters(ab(), "a");
    m(1, 0) = LetterSet::from_letters(ab(), "a");
    m(1, 1) = LetterSet::from_letters(ab(), "b");
    return {ab(), std::move(m), {true, false}, {"f1", "f2"}};
}

/// a*ba*ba*: f_i loops on a, f1 -b-> f2 -b-> f3, f3 final.
inline LanguageAutomaton two_bs() {
    Matrix<LetterSet> m(3, 3, LetterSet{});
    for (std::size_t i = 0; i < 3; ++i) m(i, i) = LetterSet::from_letters(ab(), "a");
    m(0, 1) = LetterSet::from_letters(ab(), "b");
    m(1, 2) = LetterSet::from_letters(ab(), "b");
    return {ab(), std::move(m), {false, false, true}, {"f1", "f2", "f3"}};
}

} // namespace wrec::testing
