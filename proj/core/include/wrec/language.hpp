#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wrec/alphabet.hpp"
#include "wrec/automaton.hpp"
#include "wrec/matrix.hpp"
#include "wrec/semiring.hpp"
#include "wrec/words.hpp"

namespace wrec {

/// A counting automaton over P(Σ): every transition weight is a set of
/// letters, every final weight is ∅ or {ε}, and state 0 is the unique
/// initial state.
class LanguageAutomaton {
public:
    /// Throws ValidationError on shape problems.
    LanguageAutomaton(Alphabet alphabet, Matrix<LetterSet> transitions, std::vector<bool> finals,
                      std::vector<std::string> names = {});

    /// Accepts any counting automaton over the language semiring whose
    /// weights are letter sets and whose final weights are ∅ or {ε}; the
    /// initial state is moved to the front if needed. Throws ValidationError
    /// with a diagnostic otherwise.
    static LanguageAutomaton from_counting(const CountingAutomaton<LanguageSemiring>& a);
    CountingAutomaton<LanguageSemiring> to_counting() const;

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return finals_.size(); }
    static constexpr StateIndex initial() noexcept { return 0; }
    const std::vector<std::string>& names() const noexcept { return names_; }

    const Matrix<LetterSet>& transitions() const noexcept { return transitions_; }
    LetterSet letters(StateIndex i, StateIndex j) const { return transitions_(i, j); }
    bool is_final(StateIndex i) const { return finals_.at(i); }
    const std::vector<bool>& finals() const noexcept { return finals_; }

    bool operator==(const LanguageAutomaton&) const = default;

private:
    Alphabet alphabet_;
    Matrix<LetterSet> transitions_;
    std::vector<bool> finals_;
    std::vector<std::string> names_;
};

/// Guard for computations that materialize word sets.
struct WordLimits {
    std::size_t max_words = 1'000'000;
};

/// The n-th cross-section L_n: all words of length n in the language.
struct CrossSection {
    std::size_t length = 0;
    WordSet words;

    bool operator==(const CrossSection&) const = default;
};

/// f_1(n) of the system f_i(n+1) = ∪_j L_ij · f_j(n), f_i(0) = c_i.
/// Throws ResourceLimitError when the predicted number of materialized words
/// in a step exceeds `limits.max_words`.
CrossSection cross_section(const LanguageAutomaton& a, std::size_t n, WordLimits limits = {});

/// Cross-sections 0..N from one sweep of the recurrence.
std::vector<CrossSection> enumerate_up_to(const LanguageAutomaton& a, std::size_t max_length,
                                          WordLimits limits = {});

/// Membership by scanning the set of reachable states letter by letter.
/// Throws AlphabetError if `word` uses a symbol outside the alphabet.
bool member(const LanguageAutomaton& a, std::string_view word);

/// Every state's outgoing letter sets are pairwise disjoint.
bool is_deterministic(const LanguageAutomaton& a);

struct DeterminizeLimits {
    std::size_t max_states = std::size_t{1} << 20;
};

/// Subset construction over reachable state sets. New state names list the
/// member states, e.g. "{q1,q3}". Throws ResourceLimitError past the limit.
LanguageAutomaton determinize(const LanguageAutomaton& a, DeterminizeLimits limits = {});

} // namespace wrec
