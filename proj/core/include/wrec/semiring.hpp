#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <ranges>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wrec/alphabet.hpp"
#include "wrec/words.hpp"

namespace wrec {

/// A semiring (K, +, ·, 0, 1) given as a policy object.
///
/// The policy owns whatever context the operations need (the language
/// semiring carries its alphabet); values are plain data. All operations are
/// pure.
template <class S>
concept Semiring = std::copy_constructible<S> && requires(const S& s, const typename S::value_type& a,
                                                          const typename S::value_type& b) {
    typename S::value_type;
    { s.zero() } -> std::same_as<typename S::value_type>;
    { s.one() } -> std::same_as<typename S::value_type>;
    { s.add(a, b) } -> std::same_as<typename S::value_type>;
    { s.mul(a, b) } -> std::same_as<typename S::value_type>;
    { s.equal(a, b) } -> std::same_as<bool>;
    { s.format(a) } -> std::same_as<std::string>;
};

template <Semiring S>
using value_t = typename S::value_type;

template <Semiring S>
bool is_zero(const S& s, const value_t<S>& a) {
    return s.equal(a, s.zero());
}

/// ({false, true}, ∨, ∧, false, true)
struct BooleanSemiring {
    using value_type = bool;

    bool zero() const noexcept { return false; }
    bool one() const noexcept { return true; }
    bool add(bool a, bool b) const noexcept { return a || b; }
    bool mul(bool a, bool b) const noexcept { return a && b; }
    bool equal(bool a, bool b) const noexcept { return a == b; }
    std::string format(bool a) const { return a ? "1" : "0"; }
    bool operator==(const BooleanSemiring&) const = default;
};

/// Arbitrary-precision natural numbers.
using Natural = boost::multiprecision::cpp_int;

/// (ℕ, +, ×, 0, 1) without overflow.
struct NaturalSemiring {
    using value_type = Natural;

    Natural zero() const { return Natural(0); }
    Natural one() const { return Natural(1); }
    Natural add(const Natural& a, const Natural& b) const { return a + b; }
    Natural mul(const Natural& a, const Natural& b) const { return a * b; }
    bool equal(const Natural& a, const Natural& b) const { return a == b; }
    std::string format(const Natural& a) const { return a.str(); }
    bool operator==(const NaturalSemiring&) const = default;
};

/// Finite languages over an alphabet: (P(Σ*), ∪, ·, ∅, {ε}) restricted to
/// finite sets.
class LanguageSemiring {
public:
    using value_type = WordSet;

    LanguageSemiring() = default;
    explicit LanguageSemiring(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    const Alphabet& alphabet() const noexcept { return alphabet_; }

    WordSet zero() const { return {}; }
    WordSet one() const { return WordSet::epsilon(); }
    WordSet add(const WordSet& a, const WordSet& b) const { return WordSet::unite(alphabet_, a, b); }
    WordSet mul(const WordSet& a, const WordSet& b) const { return WordSet::concat(alphabet_, a, b); }
    bool equal(const WordSet& a, const WordSet& b) const { return a == b; }
    std::string format(const WordSet& a) const {
        std::string out = "{";
        bool first = true;
        for (const auto& w : a) {
            if (!first) out += ",";
            out += display_word(w);
            first = false;
        }
        return out + "}";
    }

    WordSet words(std::vector<std::string> ws) const { return WordSet::from_words(alphabet_, std::move(ws)); }
    WordSet letters(std::string_view ls) const {
        return WordSet::from_letters(alphabet_, LetterSet::from_letters(alphabet_, ls));
    }

    bool operator==(const LanguageSemiring&) const = default;

private:
    Alphabet alphabet_;
};

/// Direct product K1 × K2 with component-wise operations.
template <Semiring S1, Semiring S2>
class ProductSemiring {
public:
    using value_type = std::pair<value_t<S1>, value_t<S2>>;

    ProductSemiring() = default;
    ProductSemiring(S1 first, S2 second) : first_(std::move(first)), second_(std::move(second)) {}

    const S1& first() const noexcept { return first_; }
    const S2& second() const noexcept { return second_; }

    value_type zero() const { return {first_.zero(), second_.zero()}; }
    value_type one() const { return {first_.one(), second_.one()}; }
    value_type add(const value_type& a, const value_type& b) const {
        return {first_.add(a.first, b.first), second_.add(a.second, b.second)};
    }
    value_type mul(const value_type& a, const value_type& b) const {
        return {first_.mul(a.first, b.first), second_.mul(a.second, b.second)};
    }
    bool equal(const value_type& a, const value_type& b) const {
        return first_.equal(a.first, b.first) && second_.equal(a.second, b.second);
    }
    std::string format(const value_type& a) const {
        return "(" + first_.format(a.first) + ", " + second_.format(a.second) + ")";
    }

    bool operator==(const ProductSemiring&) const = default;

private:
    S1 first_;
    S2 second_;
};

// ---------------------------------------------------------------------------
// Axiom checking

enum class Axiom {
    AddAssociative,
    AddCommutative,
    AddIdentity,
    MulAssociative,
    MulIdentity,
    LeftDistributive,
    RightDistributive,
    ZeroAnnihilates,
};

constexpr std::string_view axiom_name(Axiom axiom) noexcept {
    switch (axiom) {
    case Axiom::AddAssociative: return "addition is associative";
    case Axiom::AddCommutative: return "addition is commutative";
    case Axiom::AddIdentity: return "zero is the additive identity";
    case Axiom::MulAssociative: return "multiplication is associative";
    case Axiom::MulIdentity: return "one is the multiplicative identity";
    case Axiom::LeftDistributive: return "multiplication left-distributes over addition";
    case Axiom::RightDistributive: return "multiplication right-distributes over addition";
    case Axiom::ZeroAnnihilates: return "zero annihilates";
    }
    return "unknown axiom";
}

struct AxiomViolation {
    Axiom axiom;
    /// Indices into the sample list; unused slots repeat the first index.
    std::array<std::size_t, 3> witness;
    std::string detail;
};

struct AxiomReport {
    std::size_t instances_checked = 0;
    std::vector<AxiomViolation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Evaluates every semiring axiom instance over all triples of `samples`.
/// Throws std::invalid_argument on an empty sample list.
template <Semiring S, std::ranges::random_access_range R>
    requires std::convertible_to<std::ranges::range_value_t<R>, value_t<S>>
AxiomReport check_semiring_axioms(const S& s, const R& samples) {
    if (std::ranges::empty(samples)) throw std::invalid_argument("check_semiring_axioms: empty sample list");

    AxiomReport report;
    const auto zero = s.zero();
    const auto one = s.one();
    auto expect = [&](bool holds, Axiom axiom, std::size_t i, std::size_t j, std::size_t k,
                      const value_t<S>& lhs, const value_t<S>& rhs) {
        ++report.instances_checked;
        if (!holds) {
            report.violations.push_back({axiom, {i, j, k}, s.format(lhs) + " != " + s.format(rhs)});
        }
    };
    auto same = [&](const value_t<S>& x, const value_t<S>& y) { return s.equal(x, y); };

    const std::vector<value_t<S>> values(std::ranges::begin(samples), std::ranges::end(samples));
    const std::size_t n = values.size();
    for (std::size_t i = 0; i < n; ++i) {
        const value_t<S> a = values[i];
        {
            auto l = s.add(zero, a), r = s.add(a, zero);
            expect(same(l, a), Axiom::AddIdentity, i, i, i, l, a);
            expect(same(r, a), Axiom::AddIdentity, i, i, i, r, a);
        }
        {
            auto l = s.mul(one, a), r = s.mul(a, one);
            expect(same(l, a), Axiom::MulIdentity, i, i, i, l, a);
            expect(same(r, a), Axiom::MulIdentity, i, i, i, r, a);
        }
        {
            auto l = s.mul(zero, a), r = s.mul(a, zero);
            expect(same(l, zero), Axiom::ZeroAnnihilates, i, i, i, l, zero);
            expect(same(r, zero), Axiom::ZeroAnnihilates, i, i, i, r, zero);
        }
        for (std::size_t j = 0; j < n; ++j) {
            const value_t<S> b = values[j];
            {
                auto l = s.add(a, b), r = s.add(b, a);
                expect(same(l, r), Axiom::AddCommutative, i, j, i, l, r);
            }
            for (std::size_t k = 0; k < n; ++k) {
                const value_t<S> c = values[k];
                {
                    auto l = s.add(s.add(a, b), c), r = s.add(a, s.add(b, c));
                    expect(same(l, r), Axiom::AddAssociative, i, j, k, l, r);
                }
                {
                    auto l = s.mul(s.mul(a, b), c), r = s.mul(a, s.mul(b, c));
                    expect(same(l, r), Axiom::MulAssociative, i, j, k, l, r);
                }
                {
                    auto l = s.mul(a, s.add(b, c)), r = s.add(s.mul(a, b), s.mul(a, c));
                    expect(same(l, r), Axiom::LeftDistributive, i, j, k, l, r);
                }
                {
                    auto l = s.mul(s.add(a, b), c), r = s.add(s.mul(a, c), s.mul(b, c));
                    expect(same(l, r), Axiom::RightDistributive, i, j, k, l, r);
                }
            }
        }
    }
    return report;
}

} // namespace wrec
