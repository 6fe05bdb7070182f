#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "wrec/semiring.hpp"

namespace wrec {

enum class GrowthClass { Zero, Bounded, Polynomial, Exponential };

struct GrowthEstimate {
    GrowthClass kind = GrowthClass::Zero;
    /// Degree for Polynomial, 0 otherwise.
    std::size_t degree = 0;
    /// Estimated base c for Exponential, 0 otherwise.
    double base = 0.0;

    /// "zero", "bounded", "polynomial(d)" or "exponential".
    std::string name() const;
    /// name() followed by " (heuristic)".
    std::string to_string() const;
};

/// Guesses the growth class of a density sequence from its tail. The answer
/// is a heuristic from a finite prefix, never a proof. Throws
/// LengthMismatchError when prefix.size() < 2 * window + 4 or window == 0.
///
/// Checks, in order: all zero; tail eventually periodic (period ≤ window,
/// covering constant tails); finite differences of the tail, taken per
/// residue class for strides up to 4, becoming constant; ratios
/// ρ(n+p)/ρ(n) agreeing within 1% over the window with c > 1. Anything left
/// falls back to a log-log slope fit.
GrowthEstimate estimate_growth(std::span<const Natural> prefix, std::size_t window = 16);

} // namespace wrec
