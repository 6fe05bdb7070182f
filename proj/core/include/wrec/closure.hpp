#pragma once

#include "wrec/alphabet.hpp"
#include "wrec/language.hpp"

namespace wrec {

// Base automata for the regular-language building blocks.

/// 1 state, no transitions, non-final: f_1(n+1) = ∅·f_1(n), f_1(0) = ∅.
LanguageAutomaton empty_language(const Alphabet& alphabet);
/// 1 state, no transitions, final: f_1(n+1) = ∅·f_1(n), f_1(0) = {ε}.
LanguageAutomaton epsilon_language(const Alphabet& alphabet);
/// 2 states, f_1 →{a}→ f_2, f_2 final.
LanguageAutomaton letter_language(const Alphabet& alphabet, char letter);

// Closure constructions. None introduces ε-moves; an added edge parallel to
// an existing one is merged into it by union of letter sets. The binary
// ones throw AlphabetError when the operands' alphabets differ.

/// States: fresh initial h (index 0), then A's, then B's. h copies the
/// out-edges of both old initial states and is final iff either was.
LanguageAutomaton unite(const LanguageAutomaton& a, const LanguageAutomaton& b);

/// States: A's then B's. Every edge into a final state of A is duplicated
/// towards B's initial state; if A accepts ε, A's initial state also copies
/// B's initial out-edges. Final states are B's, plus A's initial state when
/// both accept ε.
LanguageAutomaton concat(const LanguageAutomaton& a, const LanguageAutomaton& b);

/// States: fresh initial final h (index 0), then A's. h and every final
/// state of A copy the out-edges of A's initial state.
LanguageAutomaton star(const LanguageAutomaton& a);

} // namespace wrec
