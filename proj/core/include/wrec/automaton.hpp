#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wrec/errors.hpp"
#include "wrec/matrix.hpp"
#include "wrec/semiring.hpp"
#include "wrec/series.hpp"

namespace wrec {

/// 0-based state index. Documentation and text formats count from 1.
using StateIndex = std::size_t;

/// Unvalidated automaton parts, e.g. as read from a file. Initial weights are
/// kept as a full vector so that malformed inputs (several initial states)
/// can be reported rather than being unrepresentable.
template <class V>
struct AutomatonDraft {
    std::vector<std::string> states;
    std::vector<V> initial_weights;
    std::vector<V> final_weights;
    Matrix<V> transitions;
};

enum class ViolationKind {
    NoStates,
    MatrixShape,
    WeightVectorShape,
    MultipleInitialStates,
    NoInitialState,
    InitialWeightNotBoolean,
    DuplicateStateName,
    StateOutOfRange,
};

struct Violation {
    ViolationKind kind;
    std::string message;
};

namespace detail {
inline std::vector<std::string> default_state_names(std::size_t k) {
    std::vector<std::string> names;
    names.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) names.push_back("q" + std::to_string(i));
    return names;
}

inline void check_names(std::size_t k, const std::vector<std::string>& names, std::vector<Violation>& out) {
    if (names.size() != k) {
        out.push_back({ViolationKind::WeightVectorShape, "state name list has " + std::to_string(names.size()) +
                                                             " entries for " + std::to_string(k) + " states"});
        return;
    }
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (!seen.insert(n).second) {
            out.push_back({ViolationKind::DuplicateStateName, "duplicate state name '" + n + "'"});
        }
    }
}

inline std::vector<std::string> messages(const std::vector<Violation>& violations) {
    std::vector<std::string> out;
    for (const auto& v : violations) out.push_back(v.message);
    return out;
}
} // namespace detail

/// Checks shape, a unique 0/1 initial state and state naming. Returns every
/// violation found; an empty result means the draft is well formed.
template <Semiring S>
std::vector<Violation> validate(const S& s, const AutomatonDraft<value_t<S>>& d) {
    std::vector<Violation> out;
    const std::size_t k = d.states.size();
    if (k == 0) {
        out.push_back({ViolationKind::NoStates, "automaton has no states"});
        return out;
    }
    if (d.transitions.rows() != k || d.transitions.cols() != k) {
        out.push_back({ViolationKind::MatrixShape, "matrix shape: expected " + std::to_string(k) + "x" +
                                                       std::to_string(k) + ", got " +
                                                       std::to_string(d.transitions.rows()) + "x" +
                                                       std::to_string(d.transitions.cols())});
    }
    if (d.final_weights.size() != k) {
        out.push_back({ViolationKind::WeightVectorShape, "final weight vector has " +
                                                             std::to_string(d.final_weights.size()) +
                                                             " entries for " + std::to_string(k) + " states"});
    }
    if (d.initial_weights.size() != k) {
        out.push_back({ViolationKind::WeightVectorShape, "initial weight vector has " +
                                                             std::to_string(d.initial_weights.size()) +
                                                             " entries for " + std::to_string(k) + " states"});
    } else {
        std::size_t initials = 0;
        for (std::size_t i = 0; i < k; ++i) {
            const value_t<S> w = d.initial_weights[i];
            if (s.equal(w, s.one())) {
                ++initials;
            } else if (!is_zero(s, w)) {
                out.push_back({ViolationKind::InitialWeightNotBoolean,
                               "initial weight of state '" + d.states[i] + "' is neither 0 nor 1"});
            }
        }
        if (initials > 1) out.push_back({ViolationKind::MultipleInitialStates, "multiple initial states"});
        if (initials == 0) out.push_back({ViolationKind::NoInitialState, "no initial state"});
    }
    detail::check_names(k, d.states, out);
    return out;
}

/// A weighted automaton over a one-letter alphabet (a counting automaton).
///
/// Exactly one state is initial with weight one; final weights are arbitrary
/// semiring elements (zero meaning non-final). Transitions form a dense k×k
/// matrix whose (i, j) entry is the weight of q_i → q_j.
template <Semiring S>
class CountingAutomaton {
public:
    using semiring_type = S;
    using value_type = value_t<S>;

    /// Throws ValidationError on shape problems or an out-of-range initial state.
    CountingAutomaton(S semiring, Matrix<value_type> transitions, std::vector<value_type> final_weights,
                      StateIndex initial = 0, std::vector<std::string> names = {})
        : semiring_(std::move(semiring)),
          transitions_(std::move(transitions)),
          final_weights_(std::move(final_weights)),
          initial_(initial),
          names_(std::move(names)) {
        if (names_.empty()) names_ = detail::default_state_names(final_weights_.size());
        std::vector<Violation> problems;
        const std::size_t k = final_weights_.size();
        if (k == 0) problems.push_back({ViolationKind::NoStates, "automaton has no states"});
        if (transitions_.rows() != k || transitions_.cols() != k) {
            problems.push_back({ViolationKind::MatrixShape, "matrix shape does not match " + std::to_string(k) +
                                                                " final weights"});
        }
        if (initial_ >= k && k > 0) {
            problems.push_back({ViolationKind::StateOutOfRange, "initial state index out of range"});
        }
        detail::check_names(k, names_, problems);
        if (!problems.empty()) throw ValidationError(detail::messages(problems));
    }

    /// Validates a draft and builds the automaton; throws ValidationError
    /// listing every violation.
    static CountingAutomaton from_draft(S semiring, AutomatonDraft<value_type> d) {
        auto problems = validate(semiring, d);
        if (!problems.empty()) throw ValidationError(detail::messages(problems));
        StateIndex initial = 0;
        while (!semiring.equal(d.initial_weights[initial], semiring.one())) ++initial;
        return CountingAutomaton(std::move(semiring), std::move(d.transitions), std::move(d.final_weights),
                                 initial, std::move(d.states));
    }

    AutomatonDraft<value_type> to_draft() const {
        AutomatonDraft<value_type> d{names_, std::vector<value_type>(size(), semiring_.zero()), final_weights_,
                                     transitions_};
        d.initial_weights[initial_] = semiring_.one();
        return d;
    }

    const S& semiring() const noexcept { return semiring_; }
    std::size_t size() const noexcept { return final_weights_.size(); }
    StateIndex initial() const noexcept { return initial_; }
    const std::vector<std::string>& names() const noexcept { return names_; }

    const Matrix<value_type>& transitions() const noexcept { return transitions_; }
    decltype(auto) transition(StateIndex i, StateIndex j) const { return transitions_(i, j); }
    const std::vector<value_type>& final_weights() const noexcept { return final_weights_; }
    decltype(auto) final_weight(StateIndex i) const { return final_weights_.at(i); }
    bool is_final(StateIndex i) const { return !is_zero(semiring_, final_weights_.at(i)); }

    std::vector<StateIndex> final_states() const {
        std::vector<StateIndex> out;
        for (StateIndex i = 0; i < size(); ++i) {
            if (is_final(i)) out.push_back(i);
        }
        return out;
    }

private:
    S semiring_;
    Matrix<value_type> transitions_;
    std::vector<value_type> final_weights_;
    StateIndex initial_;
    std::vector<std::string> names_;
};

/// Validation of an already constructed automaton; it can only fail if the
/// invariants were broken, so this is mostly useful after deserialization.
template <Semiring S>
std::vector<Violation> validate(const CountingAutomaton<S>& a) {
    return validate(a.semiring(), a.to_draft());
}

/// Same shape, initial state, names and element-wise equal weights.
template <Semiring S>
bool structurally_equal(const CountingAutomaton<S>& a, const CountingAutomaton<S>& b) {
    if (a.size() != b.size() || a.initial() != b.initial() || a.names() != b.names()) return false;
    const S& s = a.semiring();
    for (StateIndex i = 0; i < a.size(); ++i) {
        if (!s.equal(a.final_weight(i), b.final_weight(i))) return false;
        for (StateIndex j = 0; j < a.size(); ++j) {
            if (!s.equal(a.transition(i, j), b.transition(i, j))) return false;
        }
    }
    return true;
}

/// A sequence of states q_0 → q_1 → ... → q_n; its length is n.
struct Path {
    std::vector<StateIndex> states;

    std::size_t length() const noexcept { return states.empty() ? 0 : states.size() - 1; }
    bool operator==(const Path&) const = default;
    auto operator<=>(const Path&) const = default;
};

/// ‖P‖ = ι(q_0) · a_1 ⋯ a_n · φ(q_n), multiplied left to right.
/// Throws InvalidPathError for empty paths, unknown states or zero-weight steps.
template <Semiring S>
value_t<S> path_weight(const CountingAutomaton<S>& a, const Path& path) {
    const S& s = a.semiring();
    if (path.states.empty()) throw InvalidPathError("path has no states");
    for (StateIndex q : path.states) {
        if (q >= a.size()) throw InvalidPathError("path visits unknown state " + std::to_string(q + 1));
    }
    value_t<S> w = path.states.front() == a.initial() ? s.one() : s.zero();
    for (std::size_t t = 1; t < path.states.size(); ++t) {
        const auto& step = a.transition(path.states[t - 1], path.states[t]);
        if (is_zero(s, step)) {
            throw InvalidPathError("no transition from state " + std::to_string(path.states[t - 1] + 1) +
                                   " to state " + std::to_string(path.states[t] + 1));
        }
        w = s.mul(w, step);
    }
    return s.mul(w, a.final_weight(path.states.back()));
}

namespace detail {
/// next = τ v
template <Semiring S>
void transition_step(const CountingAutomaton<S>& a, const std::vector<value_t<S>>& v,
                     std::vector<value_t<S>>& next) {
    const S& s = a.semiring();
    for (StateIndex i = 0; i < a.size(); ++i) {
        value_t<S> acc = s.zero();
        for (StateIndex j = 0; j < a.size(); ++j) {
            const auto& w = a.transition(i, j);
            if (is_zero(s, w)) continue;
            acc = s.add(acc, s.mul(w, v[j]));
        }
        next[i] = std::move(acc);
    }
}
} // namespace detail

/// Behavior of every state at length n: v = τⁿ φ, by n matrix-vector steps.
template <Semiring S>
std::vector<value_t<S>> state_behaviors(const CountingAutomaton<S>& a, std::size_t n) {
    std::vector<value_t<S>> v = a.final_weights();
    std::vector<value_t<S>> next(a.size(), a.semiring().zero());
    for (std::size_t step = 0; step < n; ++step) {
        detail::transition_step(a, v, next);
        std::swap(v, next);
    }
    return v;
}

/// ‖A‖_q(xⁿ): total weight of length-n paths starting at `state`, with the
/// initial weight taken as one.
template <Semiring S>
value_t<S> state_behavior(const CountingAutomaton<S>& a, StateIndex state, std::size_t n) {
    if (state >= a.size()) throw InvalidStateError("state index " + std::to_string(state + 1) + " out of range");
    return state_behaviors(a, n)[state];
}

/// ‖A‖(xⁿ) = ι τⁿ φ.
template <Semiring S>
value_t<S> behavior(const CountingAutomaton<S>& a, std::size_t n) {
    return state_behaviors(a, n)[a.initial()];
}

/// ‖A‖ truncated at N, computed in one sweep.
template <Semiring S>
SeriesPrefix<S> behavior_series(const CountingAutomaton<S>& a, std::size_t truncation) {
    SeriesPrefix<S> out;
    out.coefficients.reserve(truncation + 1);
    std::vector<value_t<S>> v = a.final_weights();
    std::vector<value_t<S>> next(a.size(), a.semiring().zero());
    for (std::size_t n = 0;; ++n) {
        out.coefficients.push_back(v[a.initial()]);
        if (n == truncation) break;
        detail::transition_step(a, v, next);
        std::swap(v, next);
    }
    return out;
}

struct PathLimits {
    std::size_t max_length = 16;
    std::size_t max_paths = 1'000'000;
};

/// Brute-force listing of successful paths of length n (initial state to a
/// final state over non-zero transitions), in lexicographic order of state
/// sequences. Intended as a test oracle.
template <Semiring S>
std::vector<Path> enumerate_successful_paths(const CountingAutomaton<S>& a, std::size_t n,
                                             PathLimits limits = {}) {
    if (n > limits.max_length) {
        throw ResourceLimitError("path enumeration length " + std::to_string(n) + " exceeds guard " +
                                 std::to_string(limits.max_length));
    }
    const S& s = a.semiring();
    std::vector<Path> out;
    Path current{{a.initial()}};
    auto dfs = [&](auto&& self) -> void {
        const StateIndex q = current.states.back();
        if (current.length() == n) {
            if (a.is_final(q)) {
                if (out.size() >= limits.max_paths) {
                    throw ResourceLimitError("more than " + std::to_string(limits.max_paths) + " paths");
                }
                out.push_back(current);
            }
            return;
        }
        for (StateIndex j = 0; j < a.size(); ++j) {
            if (is_zero(s, a.transition(q, j))) continue;
            current.states.push_back(j);
            self(self);
            current.states.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

/// A weighted automaton over an arbitrary finite alphabet: one transition
/// matrix per letter. Only used as input to alphabet collapsing.
template <Semiring S>
class GeneralWeightedAutomaton {
public:
    using value_type = value_t<S>;

    /// Throws ValidationError if the matrices are not all k×k.
    GeneralWeightedAutomaton(S semiring, std::vector<std::string> letters, std::vector<Matrix<value_type>> matrices,
                             std::vector<value_type> final_weights, StateIndex initial = 0)
        : semiring_(std::move(semiring)),
          letters_(std::move(letters)),
          matrices_(std::move(matrices)),
          final_weights_(std::move(final_weights)),
          initial_(initial) {
        std::vector<std::string> problems;
        const std::size_t k = final_weights_.size();
        if (k == 0) problems.push_back("automaton has no states");
        if (letters_.size() != matrices_.size()) problems.push_back("one transition matrix per letter required");
        for (const auto& m : matrices_) {
            if (m.rows() != k || m.cols() != k) problems.push_back("matrix shape does not match state count");
        }
        if (initial_ >= k && k > 0) problems.push_back("initial state index out of range");
        if (!problems.empty()) throw ValidationError(problems);
    }

    const S& semiring() const noexcept { return semiring_; }
    std::size_t size() const noexcept { return final_weights_.size(); }
    StateIndex initial() const noexcept { return initial_; }
    const std::vector<std::string>& letters() const noexcept { return letters_; }
    const Matrix<value_type>& transitions(std::size_t letter) const { return matrices_.at(letter); }
    const std::vector<value_type>& final_weights() const noexcept { return final_weights_; }

private:
    S semiring_;
    std::vector<std::string> letters_;
    std::vector<Matrix<value_type>> matrices_;
    std::vector<value_type> final_weights_;
    StateIndex initial_;
};

} // namespace wrec
