#include "wrec/growth.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "wrec/errors.hpp"

namespace wrec {

std::string GrowthEstimate::name() const {
    switch (kind) {
    case GrowthClass::Zero: return "zero";
    case GrowthClass::Bounded: return "bounded";
    case GrowthClass::Polynomial: return "polynomial(" + std::to_string(degree) + ")";
    case GrowthClass::Exponential: return "exponential";
    }
    return {};
}

std::string GrowthEstimate::to_string() const { return name() + " (heuristic)"; }

namespace {

constexpr std::size_t kMaxStride = 4;

bool eventually_periodic(std::span<const Natural> tail, std::size_t max_period) {
    for (std::size_t p = 1; p <= max_period && p < tail.size(); ++p) {
        bool ok = true;
        for (std::size_t t = 0; ok && t + p < tail.size(); ++t) ok = tail[t] == tail[t + p];
        if (ok) return true;
    }
    return false;
}

// Smallest d such that the d-th differences of `xs` are constant, provided
// at least three samples of that difference remain.
std::optional<std::size_t> difference_order(std::vector<Natural> xs) {
    for (std::size_t d = 0; xs.size() >= 3; ++d) {
        if (std::all_of(xs.begin(), xs.end(), [&](const Natural& v) { return v == xs.front(); })) return d;
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) xs[i] = xs[i + 1] - xs[i];
        xs.pop_back();
    }
    return std::nullopt;
}

// Degree of a (quasi-)polynomial tail: each residue class mod `stride` must
// be polynomial on its own.
std::optional<std::size_t> polynomial_degree(std::span<const Natural> tail, std::size_t stride) {
    std::size_t degree = 0;
    for (std::size_t r = 0; r < stride; ++r) {
        std::vector<Natural> xs;
        for (std::size_t t = r; t < tail.size(); t += stride) xs.push_back(tail[t]);
        const auto d = difference_order(xs);
        if (!d) return std::nullopt;
        degree = std::max(degree, *d);
    }
    return degree;
}

double ratio(const Natural& num, const Natural& den) {
    constexpr long long scale = 1'000'000'000LL;
    return static_cast<double>(Natural(num * scale / den)) / static_cast<double>(scale);
}

std::optional<double> exponential_base(std::span<const Natural> tail, std::size_t window) {
    for (std::size_t p = 1; p <= kMaxStride; ++p) {
        if (tail.size() < window + p) break;
        const std::size_t first = tail.size() - window - p;
        double lo = INFINITY, hi = 0.0;
        bool ok = true;
        for (std::size_t t = first; ok && t + p < tail.size(); ++t) {
            if (tail[t] == 0) {
                ok = false;
                break;
            }
            const double q = ratio(tail[t + p], tail[t]);
            lo = std::min(lo, q);
            hi = std::max(hi, q);
        }
        if (!ok || lo <= 0.0 || (hi - lo) / lo > 0.01) continue;
        const double c = std::pow((lo + hi) / 2.0, 1.0 / static_cast<double>(p));
        if (c > 1.0) return c;
    }
    return std::nullopt;
}

// Running maximum over the last kMaxStride entries smooths out sequences
// that vanish on some residue classes.
double smoothed_log(std::span<const Natural> prefix, std::size_t n) {
    Natural best = 0;
    for (std::size_t i = n + 1 >= kMaxStride ? n + 1 - kMaxStride : 0; i <= n; ++i) best = std::max(best, prefix[i]);
    return best == 0 ? 0.0 : std::log(static_cast<double>(best));
}

} // namespace

GrowthEstimate estimate_growth(std::span<const Natural> prefix, std::size_t window) {
    if (window == 0 || prefix.size() < 2 * window + 4) {
        throw LengthMismatchError("growth estimate needs a prefix of length at least 2*window+4 = " +
                                  std::to_string(2 * window + 4) + ", got " + std::to_string(prefix.size()));
    }
    if (std::all_of(prefix.begin(), prefix.end(), [](const Natural& v) { return v == 0; })) return {};

    const std::span<const Natural> tail = prefix.subspan(prefix.size() / 2);
    if (eventually_periodic(tail, window)) return {GrowthClass::Bounded, 0, 0.0};

    for (std::size_t p = 1; p <= kMaxStride; ++p) {
        if (const auto d = polynomial_degree(tail, p); d && *d > 0) return {GrowthClass::Polynomial, *d, 0.0};
    }
    if (const auto c = exponential_base(tail, window)) return {GrowthClass::Exponential, 0, *c};

    const std::size_t last = prefix.size() - 1;
    const std::size_t mid = last / 2;
    const double hi = smoothed_log(prefix, last);
    const double lo = smoothed_log(prefix, mid);
    const double per_step = std::exp((hi - lo) / static_cast<double>(last - mid));
    if (per_step > 1.05) return {GrowthClass::Exponential, 0, per_step};
    const double slope = (hi - lo) / std::log(static_cast<double>(last) / static_cast<double>(mid));
    const auto degree = static_cast<std::size_t>(std::max(1.0, std::round(slope)));
    return {GrowthClass::Polynomial, degree, 0.0};
}

} // namespace wrec
