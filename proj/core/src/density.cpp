#include "wrec/density.hpp"

#include "wrec/errors.hpp"

namespace wrec {

PathCountingAutomaton path_counting(const LanguageAutomaton& source) {
    const std::size_t k = source.size();
    Matrix<Natural> m(k, k, Natural(0));
    std::vector<Natural> finals(k, Natural(0));
    for (StateIndex i = 0; i < k; ++i) {
        if (source.is_final(i)) finals[i] = 1;
        for (StateIndex j = 0; j < k; ++j) {
            if (!source.letters(i, j).empty()) m(i, j) = 1;
        }
    }
    return PathCountingAutomaton(NaturalSemiring{}, std::move(m), std::move(finals), LanguageAutomaton::initial(),
                                 source.names());
}

DensitySystem cardinality_system(const LanguageAutomaton& source) {
    const std::size_t k = source.size();
    Matrix<Natural> m(k, k, Natural(0));
    std::vector<Natural> init(k, Natural(0));
    for (std::size_t i = 0; i < k; ++i) {
        init[i] = source.is_final(i) ? 1 : 0;
        for (std::size_t j = 0; j < k; ++j) m(i, j) = source.letters(i, j).size();
    }
    return {RecurrenceSystem<NaturalSemiring>(NaturalSemiring{}, std::move(m), std::move(init), source.names()),
            source};
}

DensitySystem density_system(const LanguageAutomaton& source) {
    if (!is_deterministic(source)) {
        throw DeterminismRequiredError(
            "density system requires a deterministic automaton; determinize the input first");
    }
    return cardinality_system(source);
}

namespace {
DensitySystem deterministic_system(const LanguageAutomaton& source, DeterminizeLimits limits) {
    return is_deterministic(source) ? cardinality_system(source) : cardinality_system(determinize(source, limits));
}
} // namespace

Natural density(const LanguageAutomaton& source, std::size_t n, DeterminizeLimits limits) {
    return evaluate_matrix_power(deterministic_system(source, limits).system, n)[0];
}

std::vector<Natural> density_prefix(const LanguageAutomaton& source, std::size_t max_length, DensityMethod method,
                                    DeterminizeLimits limits) {
    const auto ds = deterministic_system(source, limits);
    if (method == DensityMethod::Step) return evaluate_prefix(ds.system, 0, max_length);
    std::vector<Natural> out;
    out.reserve(max_length + 1);
    for (std::size_t n = 0; n <= max_length; ++n) out.push_back(evaluate_matrix_power(ds.system, n)[0]);
    return out;
}

} // namespace wrec
