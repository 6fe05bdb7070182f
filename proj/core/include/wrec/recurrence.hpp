#pragma once

#include <concepts>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "wrec/automaton.hpp"
#include "wrec/errors.hpp"
#include "wrec/matrix.hpp"
#include "wrec/semiring.hpp"

namespace wrec {

/// First-order linear system f_i(n+1) = Σ_j a_ij f_j(n), f_i(0) = c_i.
///
/// `principal` names the function a paired automaton starts from; it is 0
/// unless the system was derived from an automaton whose initial state is
/// not the first one.
template <Semiring S>
class RecurrenceSystem {
public:
    using value_type = value_t<S>;

    /// Throws ValidationError on shape mismatches.
    RecurrenceSystem(S semiring, Matrix<value_type> coefficients, std::vector<value_type> initial_values,
                     std::vector<std::string> labels = {}, std::size_t principal = 0)
        : semiring_(std::move(semiring)),
          coefficients_(std::move(coefficients)),
          initial_values_(std::move(initial_values)),
          labels_(std::move(labels)),
          principal_(principal) {
        const std::size_t k = initial_values_.size();
        if (labels_.empty()) {
            for (std::size_t i = 1; i <= k; ++i) labels_.push_back("f" + std::to_string(i));
        }
        std::vector<std::string> problems;
        if (k == 0) problems.push_back("system has no functions");
        if (coefficients_.rows() != k || coefficients_.cols() != k) {
            problems.push_back("coefficient matrix is " + std::to_string(coefficients_.rows()) + "x" +
                               std::to_string(coefficients_.cols()) + " for " + std::to_string(k) + " functions");
        }
        if (labels_.size() != k) problems.push_back("label count does not match function count");
        if (principal_ >= k && k > 0) problems.push_back("principal function out of range");
        if (!problems.empty()) throw ValidationError(problems);
    }

    const S& semiring() const noexcept { return semiring_; }
    std::size_t size() const noexcept { return initial_values_.size(); }
    const Matrix<value_type>& coefficients() const noexcept { return coefficients_; }
    decltype(auto) coefficient(std::size_t i, std::size_t j) const { return coefficients_(i, j); }
    const std::vector<value_type>& initial_values() const noexcept { return initial_values_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::size_t principal() const noexcept { return principal_; }

private:
    S semiring_;
    Matrix<value_type> coefficients_;
    std::vector<value_type> initial_values_;
    std::vector<std::string> labels_;
    std::size_t principal_;
};

template <Semiring S>
bool structurally_equal(const RecurrenceSystem<S>& a, const RecurrenceSystem<S>& b) {
    if (a.size() != b.size() || a.labels() != b.labels() || a.principal() != b.principal()) return false;
    const S& s = a.semiring();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!s.equal(a.initial_values()[i], b.initial_values()[i])) return false;
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (!s.equal(a.coefficient(i, j), b.coefficient(i, j))) return false;
        }
    }
    return true;
}

/// The system generated by a counting automaton: a_ij is the weight of
/// q_i → q_j and c_i the final weight of q_i.
template <Semiring S>
RecurrenceSystem<S> automaton_to_recurrence(const CountingAutomaton<S>& a) {
    return RecurrenceSystem<S>(a.semiring(), a.transitions(), a.final_weights(), a.names(), a.initial());
}

/// The counting automaton recognizing a system; the principal function's
/// state is initial.
template <Semiring S>
CountingAutomaton<S> recurrence_to_automaton(const RecurrenceSystem<S>& system) {
    return CountingAutomaton<S>(system.semiring(), system.coefficients(), system.initial_values(),
                                system.principal(), system.labels());
}

namespace detail {
template <Semiring S>
std::vector<value_t<S>> apply(const S& s, const Matrix<value_t<S>>& m, const std::vector<value_t<S>>& v) {
    std::vector<value_t<S>> out(m.rows(), s.zero());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        value_t<S> acc = s.zero();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& a = m(i, j);
            if (is_zero(s, a)) continue;
            acc = s.add(acc, s.mul(a, v[j]));
        }
        out[i] = std::move(acc);
    }
    return out;
}

template <Semiring S>
Matrix<value_t<S>> multiply(const S& s, const Matrix<value_t<S>>& a, const Matrix<value_t<S>>& b) {
    Matrix<value_t<S>> out(a.rows(), b.cols(), s.zero());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const value_t<S> x = a(i, l);
            if (is_zero(s, x)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) = s.add(out(i, j), s.mul(x, b(l, j)));
            }
        }
    }
    return out;
}
} // namespace detail

/// (f_1(n), ..., f_k(n)) by iterating f(n+1) = M f(n) from f(0) = c.
template <Semiring S>
std::vector<value_t<S>> evaluate(const RecurrenceSystem<S>& system, std::size_t n) {
    std::vector<value_t<S>> v = system.initial_values();
    for (std::size_t step = 0; step < n; ++step) v = detail::apply(system.semiring(), system.coefficients(), v);
    return v;
}

/// f_i(0), ..., f_i(N) for one function, computed in a single sweep.
template <Semiring S>
std::vector<value_t<S>> evaluate_prefix(const RecurrenceSystem<S>& system, std::size_t function,
                                        std::size_t truncation) {
    if (function >= system.size()) throw InvalidStateError("function index out of range");
    std::vector<value_t<S>> out;
    out.reserve(truncation + 1);
    std::vector<value_t<S>> v = system.initial_values();
    for (std::size_t n = 0;; ++n) {
        out.push_back(v[function]);
        if (n == truncation) break;
        v = detail::apply(system.semiring(), system.coefficients(), v);
    }
    return out;
}

template <class S>
concept CountingSemiring = std::same_as<S, NaturalSemiring> || std::same_as<S, BooleanSemiring>;

/// Mⁿ c by square-and-multiply. Limited to ℕ and 𝔹, where squaring does not
/// blow up element sizes the way language products do.
template <CountingSemiring S>
std::vector<value_t<S>> evaluate_matrix_power(const RecurrenceSystem<S>& system, std::size_t n) {
    const S& s = system.semiring();
    std::vector<value_t<S>> v = system.initial_values();
    Matrix<value_t<S>> power = system.coefficients();
    // Powers of M commute, so the bits of n can be applied to v in any order.
    while (n > 0) {
        if (n & 1U) v = detail::apply(s, power, v);
        n >>= 1U;
        if (n > 0) power = detail::multiply(s, power, power);
    }
    return v;
}

/// One equation f_target(n + degree) = Σ_j coefficients[j] f_j(n), with
/// seeds f_target(0), ..., f_target(degree - 1).
template <Semiring S>
struct HigherDegreeEquation {
    std::size_t target = 0;
    std::size_t degree = 1;
    std::vector<value_t<S>> coefficients;
    std::vector<value_t<S>> seeds;
};

template <Semiring S>
struct HigherDegreeSystem {
    S semiring;
    std::vector<std::string> labels;
    std::vector<HigherDegreeEquation<S>> equations;
};

template <Semiring S>
struct ReducedSystem {
    RecurrenceSystem<S> system;
    /// index_of[i] is the position of original function i in `system`.
    std::vector<std::size_t> index_of;
};

/// Rewrites every equation of degree d > 1 as a chain through d - 1
/// auxiliary functions g_t(n) = f(n + t):
///   f(n+1) = g_1(n), g_t(n+1) = g_{t+1}(n), g_{d-1}(n+1) = original right side,
/// with g_t(0) = seed t. Auxiliaries are appended after the original
/// functions, ordered by original index and then chain position.
///
/// Throws SeedCountError when an equation's seed count differs from its
/// degree, ValidationError for other malformed input.
template <Semiring S>
ReducedSystem<S> reduce_to_first_order(const HigherDegreeSystem<S>& hs) {
    const S& s = hs.semiring;
    const std::size_t k = hs.labels.size();
    std::vector<std::string> problems;
    if (k == 0) problems.push_back("system has no functions");
    std::vector<const HigherDegreeEquation<S>*> by_target(k, nullptr);
    for (const auto& eq : hs.equations) {
        if (eq.target >= k) {
            problems.push_back("equation targets unknown function " + std::to_string(eq.target + 1));
            continue;
        }
        if (by_target[eq.target] != nullptr) {
            problems.push_back("function '" + hs.labels[eq.target] + "' has more than one equation");
        }
        by_target[eq.target] = &eq;
        if (eq.degree == 0) problems.push_back("equation for '" + hs.labels[eq.target] + "' has degree 0");
        if (eq.coefficients.size() != k) {
            problems.push_back("equation for '" + hs.labels[eq.target] + "' has " +
                               std::to_string(eq.coefficients.size()) + " coefficients for " + std::to_string(k) +
                               " functions");
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (by_target[i] == nullptr) problems.push_back("function '" + hs.labels[i] + "' has no equation");
    }
    if (!problems.empty()) throw ValidationError(problems);
    for (const auto* eq : by_target) {
        if (eq->seeds.size() != eq->degree) {
            throw SeedCountError("function '" + hs.labels[eq->target] + "' has degree " +
                                 std::to_string(eq->degree) + " but " + std::to_string(eq->seeds.size()) +
                                 " seed values");
        }
    }

    std::size_t total = k;
    for (const auto* eq : by_target) total += eq->degree - 1;

    Matrix<value_t<S>> m(total, total, s.zero());
    std::vector<value_t<S>> init(total, s.zero());
    std::vector<std::string> labels = hs.labels;
    labels.resize(total);

    std::size_t next_aux = k;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& eq = *by_target[i];
        init[i] = eq.seeds[0];
        // Row that receives the original right-hand side: f itself when d = 1,
        // otherwise the last auxiliary of the chain.
        std::size_t rhs_row = i;
        std::size_t prev = i;
        for (std::size_t t = 1; t < eq.degree; ++t) {
            const std::size_t g = next_aux++;
            labels[g] = "g" + std::to_string(t) + "(" + hs.labels[i] + ")";
            init[g] = eq.seeds[t];
            m(prev, g) = s.one();
            prev = g;
            rhs_row = g;
        }
        for (std::size_t j = 0; j < k; ++j) m(rhs_row, j) = eq.coefficients[j];
    }

    std::vector<std::size_t> index_of(k);
    for (std::size_t i = 0; i < k; ++i) index_of[i] = i;
    return {RecurrenceSystem<S>(s, std::move(m), std::move(init), std::move(labels)), std::move(index_of)};
}

} // namespace wrec
