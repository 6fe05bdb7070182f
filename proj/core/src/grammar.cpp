#include "wrec/grammar.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

#include "wrec/errors.hpp"

namespace wrec {

RegularGrammar::RegularGrammar(Alphabet alphabet, std::size_t nonterminals, std::vector<Production> productions)
    : alphabet_(std::move(alphabet)), nonterminals_(nonterminals), productions_(std::move(productions)) {
    std::vector<std::string> problems;
    if (nonterminals_ == 0) problems.push_back("grammar has no nonterminals");
    for (const auto& p : productions_) {
        if (p.head >= nonterminals_) problems.push_back("production head out of range");
        if (p.step) {
            if (p.step->next >= nonterminals_) problems.push_back("production target out of range");
            if (!alphabet_.contains(p.step->terminal)) {
                problems.push_back(std::string("terminal '") + p.step->terminal + "' is not in the alphabet");
            }
        }
    }
    if (!problems.empty()) throw ValidationError(problems);

    auto key = [&](const Production& p) {
        // ε sorts after every terminal of the same head.
        const std::size_t t = p.step ? alphabet_.rank(p.step->terminal) : alphabet_.size();
        const std::size_t n = p.step ? p.step->next : 0;
        return std::tuple(p.head, t, n);
    };
    std::sort(productions_.begin(), productions_.end(),
              [&](const Production& x, const Production& y) { return key(x) < key(y); });
    productions_.erase(std::unique(productions_.begin(), productions_.end()), productions_.end());
}

std::string nonterminal_name(std::size_t index) {
    return index == 0 ? std::string("S") : "A" + std::to_string(index + 1);
}

RegularGrammar to_grammar(const LanguageAutomaton& a) {
    std::vector<Production> productions;
    const Alphabet& alphabet = a.alphabet();
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            const LetterSet l = a.letters(i, j);
            for (std::size_t r = 0; r < alphabet.size(); ++r) {
                if (l.contains_rank(r)) productions.push_back({i, GrammarStep{alphabet.symbol(r), j}});
            }
        }
        if (a.is_final(i)) productions.push_back({i, std::nullopt});
    }
    return RegularGrammar(alphabet, a.size(), std::move(productions));
}

WordSet grammar_generate(const RegularGrammar& g, std::size_t n, WordLimits limits) {
    // Sentential forms are `prefix A_j`; right-linearity keeps them this shape.
    using Form = std::pair<std::string, std::size_t>;
    std::vector<std::vector<const Production*>> by_head(g.nonterminals());
    for (const auto& p : g.productions()) by_head[p.head].push_back(&p);

    std::set<Form> forms{{std::string(), 0}};
    for (std::size_t step = 0; step < n && !forms.empty(); ++step) {
        std::set<Form> next;
        for (const auto& [prefix, head] : forms) {
            for (const Production* p : by_head[head]) {
                if (p->is_epsilon()) continue;
                next.emplace(prefix + p->step->terminal, p->step->next);
                if (next.size() > limits.max_words) {
                    throw ResourceLimitError("grammar derivation exceeds " + std::to_string(limits.max_words) +
                                             " sentential forms");
                }
            }
        }
        forms = std::move(next);
    }

    std::vector<std::string> words;
    for (const auto& [prefix, head] : forms) {
        const bool ends = std::any_of(by_head[head].begin(), by_head[head].end(),
                                      [](const Production* p) { return p->is_epsilon(); });
        if (ends) words.push_back(prefix);
    }
    return WordSet::from_words(g.alphabet(), std::move(words));
}

std::string format_grammar(const RegularGrammar& g) {
    std::string out;
    for (const auto& p : g.productions()) {
        out += nonterminal_name(p.head);
        out += " -> ";
        if (p.step) {
            out += p.step->terminal;
            out += ' ';
            out += nonterminal_name(p.step->next);
        } else {
            out += "eps";
        }
        out += '\n';
    }
    return out;
}

} // namespace wrec
