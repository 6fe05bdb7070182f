#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wrec/alphabet.hpp"
#include "wrec/language.hpp"
#include "wrec/words.hpp"

namespace wrec {

/// Right-hand side `a A_j` of a non-ε production.
struct GrammarStep {
    char terminal;
    std::size_t next;

    bool operator==(const GrammarStep&) const = default;
};

/// A_head → terminal A_next, or A_head → ε when `step` is empty.
struct Production {
    std::size_t head;
    std::optional<GrammarStep> step;

    bool is_epsilon() const noexcept { return !step.has_value(); }
    bool operator==(const Production&) const = default;
};

/// Right-linear grammar with nonterminals A_1..A_k, where A_1 is the start
/// symbol S. Productions are kept sorted by head, then terminal (alphabet
/// order), then target, with the ε-production of a head last.
class RegularGrammar {
public:
    /// Throws ValidationError for out-of-range nonterminals or foreign terminals.
    RegularGrammar(Alphabet alphabet, std::size_t nonterminals, std::vector<Production> productions);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t nonterminals() const noexcept { return nonterminals_; }
    const std::vector<Production>& productions() const noexcept { return productions_; }

    bool operator==(const RegularGrammar&) const = default;

private:
    Alphabet alphabet_;
    std::size_t nonterminals_;
    std::vector<Production> productions_;
};

/// "S" for the start symbol, "A<i+1>" otherwise.
std::string nonterminal_name(std::size_t index);

/// One production A_i → a A_j for each letter a of L_ij, and A_i → ε for
/// each final state.
RegularGrammar to_grammar(const LanguageAutomaton& a);

/// All words of length n derivable from S, by breadth-first expansion of
/// sentential forms. Throws ResourceLimitError if more than
/// `limits.max_words` distinct forms are alive at once.
WordSet grammar_generate(const RegularGrammar& g, std::size_t n, WordLimits limits = {});

/// One production per line: `S -> a A2`, `A2 -> eps`.
std::string format_grammar(const RegularGrammar& g);

} // namespace wrec
