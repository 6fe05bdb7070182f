#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "wrec/recurrence.hpp"

using namespace wrec;
using namespace wrec::testing;

namespace {

RecurrenceSystem<NaturalSemiring> fibonacci_system() {
    return {NaturalSemiring{}, Matrix<Natural>::from_rows({{0, 1}, {1, 1}}), {1, 0}};
}

RecurrenceSystem<NaturalSemiring> two_bs_density() {
    return {NaturalSemiring{}, Matrix<Natural>::from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}), {0, 0, 1}};
}

} // namespace

TEST_SUITE("recurrence") {

TEST_CASE("the (ab*a)* automaton gives the displayed system") {
    const auto sys = automaton_to_recurrence(abstar().to_counting());
    const auto& s = sys.semiring();
    CHECK(sys.labels() == std::vector<std::string>{"f1", "f2"});
    CHECK(sys.coefficient(0, 0) == s.zero());
    CHECK(sys.coefficient(0, 1) == s.letters("a"));
    CHECK(sys.coefficient(1, 0) == s.letters("a"));
    CHECK(sys.coefficient(1, 1) == s.letters("b"));
    CHECK(sys.initial_values() == std::vector<WordSet>{s.one(), s.zero()});
    CHECK(evaluate(sys, 4)[0] == s.words({"aaaa", "abba"}));
    CHECK(evaluate(sys, 0) == sys.initial_values());
}

TEST_CASE("identity recurrence of a one-state loop") {
    const CountingAutomaton<NaturalSemiring> a(NaturalSemiring{}, Matrix<Natural>(1, 1, Natural(1)), {1});
    const auto sys = automaton_to_recurrence(a);
    CHECK(sys.coefficient(0, 0) == 1);
    CHECK(sys.initial_values() == std::vector<Natural>{1});
    CHECK(evaluate(sys, 9)[0] == 1);
}

TEST_CASE("the a*ba*ba* automaton gives the upper-triangular system") {
    const auto sys = automaton_to_recurrence(two_bs().to_counting());
    const auto& s = sys.semiring();
    CHECK(sys.coefficient(0, 0) == s.letters("a"));
    CHECK(sys.coefficient(0, 1) == s.letters("b"));
    CHECK(sys.coefficient(0, 2) == s.zero());
    CHECK(sys.coefficient(1, 2) == s.letters("b"));
    CHECK(sys.coefficient(2, 2) == s.letters("a"));
    CHECK(sys.coefficient(2, 0) == s.zero());
    CHECK(sys.initial_values() == std::vector<WordSet>{s.zero(), s.zero(), s.one()});
}

TEST_CASE("system to automaton") {
    const auto fib = recurrence_to_automaton(fibonacci_system());
    CHECK(fib.size() == 2);
    CHECK(fib.initial() == 0);
    CHECK(fib.transition(0, 1) == 1);
    CHECK(fib.transition(1, 0) == 1);
    CHECK(fib.transition(1, 1) == 1);
    CHECK(fib.transition(0, 0) == 0);
    CHECK(fib.final_weights() == std::vector<Natural>{1, 0});

    const LanguageSemiring s(ab());
    const RecurrenceSystem<LanguageSemiring> empty(s, Matrix<WordSet>(1, 1, s.zero()), {s.zero()});
    const auto a = recurrence_to_automaton(empty);
    CHECK(a.size() == 1);
    for (std::size_t n = 0; n <= 3; ++n) CHECK(behavior(a, n) == s.zero());
}

TEST_CASE("round trips are structural identities") {
    Rng rng(base_seed() + 3);
    for (int round = 0; round < 50; ++round) {
        const auto a = random_natural_automaton(rng, 5);
        CHECK(structurally_equal(recurrence_to_automaton(automaton_to_recurrence(a)), a));
        const auto sys = automaton_to_recurrence(a);
        CHECK(structurally_equal(automaton_to_recurrence(recurrence_to_automaton(sys)), sys));
    }
}

TEST_CASE("evaluation") {
    CHECK(evaluate(fibonacci_system(), 6)[0] == 5);
    CHECK(evaluate_prefix(fibonacci_system(), 0, 8) == std::vector<Natural>{1, 0, 1, 1, 2, 3, 5, 8, 13});
    CHECK(evaluate_matrix_power(fibonacci_system(), 0) == std::vector<Natural>{1, 0});
    CHECK(evaluate_matrix_power(two_bs_density(), 10)[0] == 45);
    CHECK(evaluate_matrix_power(two_bs_density(), 0) == std::vector<Natural>{0, 0, 1});
}

TEST_CASE("matrix power reaches F_49") {
    const auto fib = fibonacci(49);
    REQUIRE(fib[49] == Natural("7778742049"));
    CHECK(evaluate_matrix_power(fibonacci_system(), 50)[0] == Natural("7778742049"));
}

TEST_CASE("matrix power over the booleans") {
    Matrix<bool> m(2, 2, false);
    m(0, 1) = true;
    m(1, 0) = true;
    const RecurrenceSystem<BooleanSemiring> sys(BooleanSemiring{}, m, {true, false});
    for (std::size_t n = 0; n <= 9; ++n) CHECK(evaluate_matrix_power(sys, n) == evaluate(sys, n));
}

TEST_CASE("property: matrix power equals step iteration") {
    Rng rng(base_seed() + 4);
    for (int round = 0; round < 30; ++round) {
        const auto sys = automaton_to_recurrence(random_natural_automaton(rng, 5));
        for (std::size_t n : {0U, 1U, 2U, 7U, 31U, 64U}) CHECK(evaluate_matrix_power(sys, n) == evaluate(sys, n));
    }
}

TEST_CASE("system validation") {
    const NaturalSemiring s;
    CHECK_THROWS_AS(RecurrenceSystem<NaturalSemiring>(s, Matrix<Natural>(2, 2, Natural(0)), {0}), ValidationError);
    CHECK_THROWS_AS(RecurrenceSystem<NaturalSemiring>(s, Matrix<Natural>(1, 1, Natural(0)), {0}, {"f", "g"}),
                    ValidationError);
    CHECK_THROWS_AS(RecurrenceSystem<NaturalSemiring>(s, Matrix<Natural>(1, 1, Natural(0)), {0}, {}, 3),
                    ValidationError);
}

TEST_CASE("non-initial first state survives the round trip") {
    const CountingAutomaton<NaturalSemiring> a(NaturalSemiring{}, Matrix<Natural>::from_rows({{0, 1}, {1, 0}}),
                                               {1, 0}, 1);
    const auto sys = automaton_to_recurrence(a);
    CHECK(sys.principal() == 1);
    CHECK(structurally_equal(recurrence_to_automaton(sys), a));
}

TEST_CASE("higher-degree reduction of the degree-4 example") {
    // f1(n+4) = 2 f2(n), f2(n+1) = 3 f1(n) + f2(n); seeds f1: 1,4,5,6; f2: 7.
    HigherDegreeSystem<NaturalSemiring> hs{NaturalSemiring{}, {"f1", "f2"}, {}};
    hs.equations.push_back({0, 4, {0, 2}, {1, 4, 5, 6}});
    hs.equations.push_back({1, 1, {3, 1}, {7}});
    const auto reduced = reduce_to_first_order(hs);
    const auto& sys = reduced.system;
    REQUIRE(sys.size() == 5);
    CHECK(sys.labels() == std::vector<std::string>{"f1", "f2", "g1(f1)", "g2(f1)", "g3(f1)"});
    CHECK(reduced.index_of == std::vector<std::size_t>{0, 1});
    // f1 -> g1 -> g2 -> g3 -> 2 f2, and f2 unchanged.
    const Matrix<Natural> expected = Matrix<Natural>::from_rows({
        {0, 0, 1, 0, 0},
        {3, 1, 0, 0, 0},
        {0, 0, 0, 1, 0},
        {0, 0, 0, 0, 1},
        {0, 2, 0, 0, 0},
    });
    CHECK(sys.coefficients() == expected);
    CHECK(sys.initial_values() == std::vector<Natural>{1, 7, 4, 5, 6});

    const auto direct = unroll(hs, 20);
    for (std::size_t n = 0; n <= 20; ++n) {
        const auto v = evaluate(sys, n);
        CHECK(v[0] == direct[n][0]);
        CHECK(v[1] == direct[n][1]);
    }
}

TEST_CASE("degree-1 systems are unchanged") {
    HigherDegreeSystem<NaturalSemiring> hs{NaturalSemiring{}, {"f1", "f2"}, {}};
    hs.equations.push_back({0, 1, {0, 1}, {1}});
    hs.equations.push_back({1, 1, {1, 1}, {0}});
    const auto reduced = reduce_to_first_order(hs);
    CHECK(structurally_equal(reduced.system, fibonacci_system()));
}

TEST_CASE("two-term scalar recurrence alternates") {
    HigherDegreeSystem<NaturalSemiring> hs{NaturalSemiring{}, {"f"}, {}};
    hs.equations.push_back({0, 2, {1}, {3, 7}});
    const auto reduced = reduce_to_first_order(hs);
    CHECK(reduced.system.size() == 2);
    CHECK(evaluate_prefix(reduced.system, 0, 5) == std::vector<Natural>{3, 7, 3, 7, 3, 7});
}

TEST_CASE("reduction errors") {
    HigherDegreeSystem<NaturalSemiring> hs{NaturalSemiring{}, {"f"}, {}};
    hs.equations.push_back({0, 3, {1}, {1, 2}});
    CHECK_THROWS_AS(reduce_to_first_order(hs), SeedCountError);
    hs.equations[0].seeds.push_back(3);
    hs.equations[0].coefficients.push_back(1);
    CHECK_THROWS_AS(reduce_to_first_order(hs), ValidationError);
    hs.equations[0].coefficients.pop_back();
    hs.equations.push_back(hs.equations[0]);
    CHECK_THROWS_AS(reduce_to_first_order(hs), ValidationError);
    hs.equations.clear();
    CHECK_THROWS_AS(reduce_to_first_order(hs), ValidationError);
}

TEST_CASE("reduction over languages") {
    const LanguageSemiring s(ab());
    // f(n+2) = {a} f(n), f(0) = {ε}, f(1) = {b}: the words a^k and a^k b.
    HigherDegreeSystem<LanguageSemiring> hs{s, {"f"}, {}};
    hs.equations.push_back({0, 2, {s.letters("a")}, {s.one(), s.letters("b")}});
    const auto reduced = reduce_to_first_order(hs);
    const auto direct = unroll(hs, 8);
    for (std::size_t n = 0; n <= 8; ++n) CHECK(evaluate(reduced.system, n)[0] == direct[n][0]);
    CHECK(evaluate(reduced.system, 5)[0] == s.words({"aab"}));
}

} // TEST_SUITE
