#include "wrec/language.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>

#include "wrec/errors.hpp"

namespace wrec {

LanguageAutomaton::LanguageAutomaton(Alphabet alphabet, Matrix<LetterSet> transitions, std::vector<bool> finals,
                                     std::vector<std::string> names)
    : alphabet_(std::move(alphabet)),
      transitions_(std::move(transitions)),
      finals_(std::move(finals)),
      names_(std::move(names)) {
    const std::size_t k = finals_.size();
    if (names_.empty()) names_ = detail::default_state_names(k);
    std::vector<Violation> problems;
    if (k == 0) problems.push_back({ViolationKind::NoStates, "automaton has no states"});
    if (transitions_.rows() != k || transitions_.cols() != k) {
        problems.push_back({ViolationKind::MatrixShape, "matrix shape does not match state count"});
    }
    detail::check_names(k, names_, problems);
    const std::uint64_t allowed =
        alphabet_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << alphabet_.size()) - 1;
    for (std::size_t i = 0; i < transitions_.rows() && problems.empty(); ++i) {
        for (std::size_t j = 0; j < transitions_.cols(); ++j) {
            if ((transitions_(i, j).mask() & ~allowed) != 0) {
                problems.push_back({ViolationKind::StateOutOfRange, "transition letters outside the alphabet"});
                break;
            }
        }
    }
    if (!problems.empty()) throw ValidationError(detail::messages(problems));
}

LanguageAutomaton LanguageAutomaton::from_counting(const CountingAutomaton<LanguageSemiring>& a) {
    const Alphabet& alphabet = a.semiring().alphabet();
    const std::size_t k = a.size();
    std::vector<std::string> problems;

    // New order: the initial state first, the rest in their original order.
    std::vector<StateIndex> order{a.initial()};
    for (StateIndex i = 0; i < k; ++i) {
        if (i != a.initial()) order.push_back(i);
    }

    Matrix<LetterSet> m(k, k);
    std::vector<bool> finals(k, false);
    std::vector<std::string> names(k);
    for (std::size_t ni = 0; ni < k; ++ni) {
        const StateIndex i = order[ni];
        names[ni] = a.names()[i];
        const WordSet& fw = a.final_weight(i);
        if (fw.is_epsilon()) {
            finals[ni] = true;
        } else if (!fw.empty()) {
            problems.push_back("final weight of state '" + a.names()[i] + "' is " + a.semiring().format(fw) +
                               "; only {} or {&} are allowed");
        }
        for (std::size_t nj = 0; nj < k; ++nj) {
            const WordSet& w = a.transition(i, order[nj]);
            if (!w.is_letter_set()) {
                problems.push_back("transition '" + a.names()[i] + "' -> '" + a.names()[order[nj]] + "' has weight " +
                                   a.semiring().format(w) + ", which is not a set of letters");
                continue;
            }
            m(ni, nj) = w.to_letter_set(alphabet);
        }
    }
    if (!problems.empty()) throw ValidationError(problems);
    return LanguageAutomaton(alphabet, std::move(m), std::move(finals), std::move(names));
}

CountingAutomaton<LanguageSemiring> LanguageAutomaton::to_counting() const {
    const std::size_t k = size();
    Matrix<WordSet> m(k, k);
    std::vector<WordSet> finals(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (finals_[i]) finals[i] = WordSet::epsilon();
        for (std::size_t j = 0; j < k; ++j) m(i, j) = WordSet::from_letters(alphabet_, transitions_(i, j));
    }
    return CountingAutomaton<LanguageSemiring>(LanguageSemiring(alphabet_), std::move(m), std::move(finals), 0,
                                               names_);
}

namespace {

using StateMask = std::vector<bool>;

/// reach[s][j]: state j is reachable from the initial state in exactly s steps.
std::vector<StateMask> exact_reach(const LanguageAutomaton& a, std::size_t max_steps) {
    const std::size_t k = a.size();
    std::vector<StateMask> reach(max_steps + 1, StateMask(k, false));
    reach[0][LanguageAutomaton::initial()] = true;
    for (std::size_t s = 1; s <= max_steps; ++s) {
        for (std::size_t i = 0; i < k; ++i) {
            if (!reach[s - 1][i]) continue;
            for (std::size_t j = 0; j < k; ++j) {
                if (!a.letters(i, j).empty()) reach[s][j] = true;
            }
        }
    }
    return reach;
}

/// Runs the recurrence from f(0) up to f(last), calling `emit(t, f_1(t))`
/// for every t in [first, last]. Only states whose value can still influence
/// an emitted f_1 are materialized.
template <class Emit>
void sweep(const LanguageAutomaton& a, std::size_t first, std::size_t last, WordLimits limits, Emit emit) {
    const std::size_t k = a.size();
    const Alphabet& alphabet = a.alphabet();
    const auto reach = exact_reach(a, last);

    // needed[t][j]: f_j(t) feeds some f_1(T) with first <= T <= last.
    auto needed_at = [&](std::size_t t) {
        StateMask need(k, false);
        for (std::size_t target = std::max(first, t); target <= last; ++target) {
            const auto& r = reach[target - t];
            for (std::size_t j = 0; j < k; ++j) need[j] = need[j] || r[j];
        }
        return need;
    };

    std::vector<WordSet> cur(k);
    {
        const auto need = needed_at(0);
        for (std::size_t i = 0; i < k; ++i) {
            if (need[i] && a.is_final(i)) cur[i] = WordSet::epsilon();
        }
    }
    if (first == 0) emit(0, cur[0]);

    std::vector<std::string> buffer;
    for (std::size_t t = 1; t <= last; ++t) {
        const auto need = needed_at(t);
        std::size_t predicted = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (!need[i]) continue;
            for (std::size_t j = 0; j < k; ++j) predicted += a.letters(i, j).size() * cur[j].size();
        }
        if (predicted > limits.max_words) {
            throw ResourceLimitError("cross-section computation at length " + std::to_string(t) + " needs up to " +
                                     std::to_string(predicted) + " words, above the limit of " +
                                     std::to_string(limits.max_words));
        }
        std::vector<WordSet> next(k);
        for (std::size_t i = 0; i < k; ++i) {
            if (!need[i]) continue;
            buffer.clear();
            for (std::size_t j = 0; j < k; ++j) {
                const LetterSet letters = a.letters(i, j);
                if (letters.empty() || cur[j].empty()) continue;
                for (std::size_t r = 0; r < alphabet.size(); ++r) {
                    if (!letters.contains_rank(r)) continue;
                    const char c = alphabet.symbol(r);
                    for (const auto& w : cur[j]) {
                        std::string word;
                        word.reserve(w.size() + 1);
                        word.push_back(c);
                        word += w;
                        buffer.push_back(std::move(word));
                    }
                }
            }
            if (!buffer.empty()) next[i] = WordSet::from_words(alphabet, std::move(buffer));
            buffer = {};
        }
        cur = std::move(next);
        if (t >= first) emit(t, cur[0]);
    }
}

} // namespace

CrossSection cross_section(const LanguageAutomaton& a, std::size_t n, WordLimits limits) {
    CrossSection out{n, {}};
    sweep(a, n, n, limits, [&](std::size_t, const WordSet& words) { out.words = words; });
    return out;
}

std::vector<CrossSection> enumerate_up_to(const LanguageAutomaton& a, std::size_t max_length, WordLimits limits) {
    std::vector<CrossSection> out;
    out.reserve(max_length + 1);
    sweep(a, 0, max_length, limits, [&](std::size_t t, const WordSet& words) { out.push_back({t, words}); });
    return out;
}

bool member(const LanguageAutomaton& a, std::string_view word) {
    const std::size_t k = a.size();
    StateMask current(k, false);
    current[LanguageAutomaton::initial()] = true;
    for (char c : word) {
        const std::size_t r = a.alphabet().rank(c);
        StateMask next(k, false);
        bool any = false;
        for (std::size_t i = 0; i < k; ++i) {
            if (!current[i]) continue;
            for (std::size_t j = 0; j < k; ++j) {
                if (a.letters(i, j).contains_rank(r)) {
                    next[j] = true;
                    any = true;
                }
            }
        }
        if (!any) {
            // Keep validating the remaining symbols before answering.
            a.alphabet().check_word(word);
            return false;
        }
        current = std::move(next);
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (current[i] && a.is_final(i)) return true;
    }
    return false;
}

bool is_deterministic(const LanguageAutomaton& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        LetterSet seen;
        for (std::size_t j = 0; j < a.size(); ++j) {
            const LetterSet l = a.letters(i, j);
            if (!seen.disjoint(l)) return false;
            seen |= l;
        }
    }
    return true;
}

namespace {

/// Fixed-width bit set over source states, usable as a map key.
struct Subset {
    std::vector<std::uint64_t> blocks;

    explicit Subset(std::size_t k) : blocks((k + 63) / 64, 0) {}
    void insert(std::size_t i) { blocks[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool contains(std::size_t i) const { return (blocks[i / 64] >> (i % 64)) & 1U; }
    bool empty() const {
        return std::all_of(blocks.begin(), blocks.end(), [](std::uint64_t b) { return b == 0; });
    }
    Subset& operator|=(const Subset& o) {
        for (std::size_t b = 0; b < blocks.size(); ++b) blocks[b] |= o.blocks[b];
        return *this;
    }
    auto operator<=>(const Subset&) const = default;
    bool operator==(const Subset&) const = default;
};

} // namespace

LanguageAutomaton determinize(const LanguageAutomaton& a, DeterminizeLimits limits) {
    const std::size_t k = a.size();
    const Alphabet& alphabet = a.alphabet();
    const std::size_t m = alphabet.size();

    // successors[i * m + r]: states reached from i on the letter of rank r.
    std::vector<Subset> successors(k * m, Subset(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const LetterSet l = a.letters(i, j);
            for (std::size_t r = 0; r < m; ++r) {
                if (l.contains_rank(r)) successors[i * m + r].insert(j);
            }
        }
    }

    std::map<Subset, std::size_t> index;
    std::vector<Subset> subsets;
    // Edges as (source, target, letters); the matrix is built at the end.
    std::vector<std::map<std::size_t, LetterSet>> edges;

    Subset start(k);
    start.insert(LanguageAutomaton::initial());
    index.emplace(start, 0);
    subsets.push_back(start);
    edges.emplace_back();

    for (std::size_t s = 0; s < subsets.size(); ++s) {
        for (std::size_t r = 0; r < m; ++r) {
            Subset target(k);
            for (std::size_t i = 0; i < k; ++i) {
                if (subsets[s].contains(i)) target |= successors[i * m + r];
            }
            if (target.empty()) continue;
            auto [it, inserted] = index.emplace(target, subsets.size());
            if (inserted) {
                if (subsets.size() >= limits.max_states) {
                    throw ResourceLimitError("determinization exceeds " + std::to_string(limits.max_states) +
                                             " states");
                }
                subsets.push_back(target);
                edges.emplace_back();
            }
            edges[s][it->second].insert_rank(r);
        }
    }

    const std::size_t n = subsets.size();
    Matrix<LetterSet> matrix(n, n);
    std::vector<bool> finals(n, false);
    std::vector<std::string> names(n);
    for (std::size_t s = 0; s < n; ++s) {
        std::string name = "{";
        bool first = true;
        for (std::size_t i = 0; i < k; ++i) {
            if (!subsets[s].contains(i)) continue;
            if (a.is_final(i)) finals[s] = true;
            if (!first) name += ",";
            name += a.names()[i];
            first = false;
        }
        names[s] = name + "}";
        for (const auto& [t, letters] : edges[s]) matrix(s, t) = letters;
    }
    return LanguageAutomaton(alphabet, std::move(matrix), std::move(finals), std::move(names));
}

} // namespace wrec
