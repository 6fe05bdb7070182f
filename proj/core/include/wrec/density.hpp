#pragma once

#include <cstddef>
#include <vector>

#include "wrec/automaton.hpp"
#include "wrec/language.hpp"
#include "wrec/recurrence.hpp"
#include "wrec/semiring.hpp"

namespace wrec {

/// ℕ-automaton with 0/1 weights whose behavior counts successful paths.
using PathCountingAutomaton = CountingAutomaton<NaturalSemiring>;

/// Same states and initial state as `source`; ā_ij = 1 iff a_ij ≠ 0 and
/// c̄_i = 1 iff q_i is final. Its behavior at n is the number of successful
/// paths of length n in `source`.
template <Semiring S>
PathCountingAutomaton path_counting(const CountingAutomaton<S>& source) {
    const S& s = source.semiring();
    const std::size_t k = source.size();
    Matrix<Natural> m(k, k, Natural(0));
    std::vector<Natural> finals(k, Natural(0));
    for (StateIndex i = 0; i < k; ++i) {
        if (source.is_final(i)) finals[i] = 1;
        for (StateIndex j = 0; j < k; ++j) {
            if (!is_zero(s, source.transition(i, j))) m(i, j) = 1;
        }
    }
    return PathCountingAutomaton(NaturalSemiring{}, std::move(m), std::move(finals), source.initial(),
                                 source.names());
}

PathCountingAutomaton path_counting(const LanguageAutomaton& source);

/// Counting automaton over K × ℕ: the first coordinate mimics `source`, the
/// second counts the paths traversed.
template <Semiring S>
using SelfCountingAutomaton = CountingAutomaton<ProductSemiring<S, NaturalSemiring>>;

template <Semiring S>
SelfCountingAutomaton<S> self_counting(const CountingAutomaton<S>& source) {
    using P = ProductSemiring<S, NaturalSemiring>;
    const PathCountingAutomaton shadow = path_counting(source);
    const std::size_t k = source.size();
    P product(source.semiring(), NaturalSemiring{});
    Matrix<value_t<P>> m(k, k, product.zero());
    std::vector<value_t<P>> finals(k, product.zero());
    for (StateIndex i = 0; i < k; ++i) {
        finals[i] = {source.final_weight(i), shadow.final_weight(i)};
        for (StateIndex j = 0; j < k; ++j) m(i, j) = {source.transition(i, j), shadow.transition(i, j)};
    }
    return SelfCountingAutomaton<S>(std::move(product), std::move(m), std::move(finals), source.initial(),
                                    source.names());
}

/// Identifies all letters: the single transition matrix is Σ_x τ(x).
template <Semiring S>
CountingAutomaton<S> collapse_alphabet(const GeneralWeightedAutomaton<S>& source) {
    const S& s = source.semiring();
    const std::size_t k = source.size();
    Matrix<value_t<S>> m(k, k, s.zero());
    for (std::size_t x = 0; x < source.letters().size(); ++x) {
        const auto& tx = source.transitions(x);
        for (StateIndex i = 0; i < k; ++i) {
            for (StateIndex j = 0; j < k; ++j) m(i, j) = s.add(m(i, j), tx(i, j));
        }
    }
    return CountingAutomaton<S>(s, std::move(m), source.final_weights(), source.initial());
}

/// The ℕ-system 𝔣_i(n+1) = Σ_j |L_ij| 𝔣_j(n), 𝔣_i(0) = |c_i| of a language
/// automaton, together with the automaton it came from.
struct DensitySystem {
    RecurrenceSystem<NaturalSemiring> system;
    LanguageAutomaton source;
};

/// Cardinality system without the determinism check. For a nondeterministic
/// source its first function over-counts words with several accepting paths.
DensitySystem cardinality_system(const LanguageAutomaton& source);

/// Cardinality system of a deterministic automaton, whose first function is
/// the density. Throws DeterminismRequiredError otherwise.
DensitySystem density_system(const LanguageAutomaton& source);

enum class DensityMethod { Step, MatrixPower };

/// ρ(n) = |L ∩ Σⁿ|, by matrix power on the density system. Nondeterministic
/// inputs are determinized first.
Natural density(const LanguageAutomaton& source, std::size_t n, DeterminizeLimits limits = {});

/// ρ(0), ..., ρ(N). `Step` runs one sweep of the recurrence; `MatrixPower`
/// evaluates every entry independently.
std::vector<Natural> density_prefix(const LanguageAutomaton& source, std::size_t max_length,
                                    DensityMethod method = DensityMethod::Step, DeterminizeLimits limits = {});

} // namespace wrec
