#pragma once

#include <cstddef>
#include <vector>

#include "wrec/errors.hpp"
#include "wrec/semiring.hpp"

namespace wrec {

/// The first N+1 coefficients (c_0, ..., c_N) of a formal power series over
/// the one-letter alphabet {x}: s(x^n) = c_n.
template <Semiring S>
struct SeriesPrefix {
    std::vector<value_t<S>> coefficients;

    std::size_t truncation() const noexcept { return coefficients.empty() ? 0 : coefficients.size() - 1; }
    typename std::vector<value_t<S>>::const_reference operator[](std::size_t n) const {
        return coefficients.at(n);
    }
};

/// The zero series 𝟎 truncated at N.
template <Semiring S>
SeriesPrefix<S> series_zero(const S& s, std::size_t truncation) {
    return {std::vector<value_t<S>>(truncation + 1, s.zero())};
}

/// The multiplicative identity 𝛆 = (1, 0, 0, ...) truncated at N.
template <Semiring S>
SeriesPrefix<S> series_one(const S& s, std::size_t truncation) {
    auto out = series_zero(s, truncation);
    out.coefficients[0] = s.one();
    return out;
}

template <Semiring S>
bool series_equal(const S& s, const SeriesPrefix<S>& a, const SeriesPrefix<S>& b) {
    if (a.coefficients.size() != b.coefficients.size()) return false;
    for (std::size_t n = 0; n < a.coefficients.size(); ++n) {
        if (!s.equal(a.coefficients[n], b.coefficients[n])) return false;
    }
    return true;
}

namespace detail {
template <Semiring S>
void require_same_truncation(const SeriesPrefix<S>& a, const SeriesPrefix<S>& b) {
    if (a.coefficients.size() != b.coefficients.size() || a.coefficients.empty()) {
        throw LengthMismatchError("series prefixes have different truncation lengths (" +
                                  std::to_string(a.coefficients.size()) + " vs " +
                                  std::to_string(b.coefficients.size()) + " coefficients)");
    }
}
} // namespace detail

/// Pointwise sum.
template <Semiring S>
SeriesPrefix<S> series_add(const S& s, const SeriesPrefix<S>& a, const SeriesPrefix<S>& b) {
    detail::require_same_truncation(a, b);
    SeriesPrefix<S> out;
    out.coefficients.reserve(a.coefficients.size());
    for (std::size_t n = 0; n < a.coefficients.size(); ++n) {
        out.coefficients.push_back(s.add(a.coefficients[n], b.coefficients[n]));
    }
    return out;
}

/// Cauchy product: entry n is Σ_{p+q=n} a_p · b_q, for n up to the truncation.
template <Semiring S>
SeriesPrefix<S> series_cauchy_product(const S& s, const SeriesPrefix<S>& a, const SeriesPrefix<S>& b) {
    detail::require_same_truncation(a, b);
    const std::size_t len = a.coefficients.size();
    SeriesPrefix<S> out = series_zero(s, len - 1);
    for (std::size_t n = 0; n < len; ++n) {
        auto acc = s.zero();
        for (std::size_t p = 0; p <= n; ++p) {
            acc = s.add(acc, s.mul(a.coefficients[p], b.coefficients[n - p]));
        }
        out.coefficients[n] = std::move(acc);
    }
    return out;
}

} // namespace wrec
