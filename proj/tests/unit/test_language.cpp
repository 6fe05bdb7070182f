#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "wrec/closure.hpp"
#include "wrec/language.hpp"

using namespace wrec;
using namespace wrec::testing;

namespace {

WordSet ws(std::vector<std::string> words) { return WordSet::from_words(ab(), std::move(words)); }

LanguageAutomaton shared_letter() {
    Matrix<LetterSet> m(2, 2, LetterSet{});
    m(0, 0) = LetterSet::from_letters(ab(), "a");
    m(0, 1) = LetterSet::from_letters(ab(), "a");
    return {ab(), std::move(m), {false, true}};
}

} // namespace

TEST_SUITE("language") {

TEST_CASE("alphabet order and validation") {
    const Alphabet ba("ba");
    CHECK(ba.less("b", "a"));
    CHECK(ba.less("a", "bb"));
    CHECK_FALSE(ba.less("a", "a"));
    const auto sorted = WordSet::from_words(ba, {"a", "b", "ab", "ba", "", "a"});
    CHECK(std::vector<std::string>(sorted.begin(), sorted.end()) ==
          std::vector<std::string>{"", "b", "a", "ba", "ab"});
    CHECK_THROWS_AS(Alphabet("aa"), AlphabetError);
    CHECK_THROWS_AS(Alphabet("a-"), AlphabetError);
    CHECK(Alphabet("").size() == 0);
    CHECK_THROWS_AS(WordSet::from_words(ab(), {"abc"}), AlphabetError);
}

TEST_CASE("cross-sections of the (ab*a)* automaton") {
    const auto a = abstar();
    CHECK(cross_section(a, 4).words == ws({"aaaa", "abba"}));
    CHECK(cross_section(a, 1).words.empty());
    CHECK(cross_section(a, 0).words == WordSet::epsilon());
    CHECK(cross_section(a, 4).length == 4);
}

TEST_CASE("enumeration up to N") {
    const auto sections = enumerate_up_to(abstar(), 4);
    REQUIRE(sections.size() == 5);
    CHECK(sections[0].words == WordSet::epsilon());
    CHECK(sections[1].words.empty());
    CHECK(sections[2].words == ws({"aa"}));
    CHECK(sections[3].words == ws({"aba"}));
    CHECK(sections[4].words == ws({"aaaa", "abba"}));
    for (const auto& s : enumerate_up_to(empty_language(ab()), 3)) CHECK(s.words.empty());
    const auto eps = enumerate_up_to(epsilon_language(ab()), 2);
    CHECK(eps[0].words == WordSet::epsilon());
    CHECK(eps[1].words.empty());
    CHECK(eps[2].words.empty());
}

TEST_CASE("membership") {
    const auto a = abstar();
    CHECK(member(a, "abba"));
    CHECK_FALSE(member(a, "a"));
    CHECK(member(a, ""));
    CHECK_FALSE(member(two_bs(), ""));
    CHECK(member(two_bs(), "abab"));
    CHECK_THROWS_AS(member(a, "abc"), AlphabetError);
}

TEST_CASE("determinism") {
    CHECK(is_deterministic(abstar()));
    CHECK(is_deterministic(two_bs()));
    CHECK_FALSE(is_deterministic(shared_letter()));
}

TEST_CASE("determinization") {
    const auto d = determinize(shared_letter());
    CHECK(is_deterministic(d));
    for (std::size_t n = 0; n <= 6; ++n) CHECK(cross_section(d, n) == cross_section(shared_letter(), n));
    CHECK(d.names().front() == "{q1}");

    const auto same = determinize(abstar());
    CHECK(is_deterministic(same));
    for (std::size_t n = 0; n <= 6; ++n) CHECK(cross_section(same, n).words == cross_section(abstar(), n).words);

    const auto a = letter_language(ab(), 'a');
    const auto ab_word = concat(letter_language(ab(), 'a'), letter_language(ab(), 'b'));
    const auto u = unite(a, ab_word);
    CHECK_FALSE(is_deterministic(u));
    const auto du = determinize(u);
    CHECK(is_deterministic(du));
    CHECK(cross_section(du, 1).words == ws({"a"}));
    CHECK(cross_section(du, 2).words == ws({"ab"}));
}

TEST_CASE("determinization guard") {
    CHECK_THROWS_AS(determinize(shared_letter(), DeterminizeLimits{1}), ResourceLimitError);
}

TEST_CASE("cross-section guard") {
    Matrix<LetterSet> m(1, 1, LetterSet::from_letters(ab(), "ab"));
    const LanguageAutomaton all(ab(), m, {true});
    CHECK(cross_section(all, 10).words.size() == 1024);
    CHECK_THROWS_AS(cross_section(all, 12, WordLimits{1000}), ResourceLimitError);
    CHECK_THROWS_AS(enumerate_up_to(all, 12, WordLimits{1000}), ResourceLimitError);
}

TEST_CASE("unreachable branches do not trip the guard") {
    // State 1 generates Σ*, but nothing reaches it.
    Matrix<LetterSet> m(2, 2, LetterSet{});
    m(1, 1) = LetterSet::from_letters(ab(), "ab");
    const LanguageAutomaton a(ab(), m, {false, true});
    CHECK(cross_section(a, 30, WordLimits{10}).words.empty());
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(LanguageAutomaton(ab(), Matrix<LetterSet>(2, 2), {true}), ValidationError);
    CHECK_THROWS_AS(LanguageAutomaton(ab(), Matrix<LetterSet>(0, 0), {}), ValidationError);
    Matrix<LetterSet> foreign(1, 1, LetterSet{});
    foreign(0, 0).insert_rank(5);
    CHECK_THROWS_AS(LanguageAutomaton(ab(), foreign, {true}), ValidationError);
}

TEST_CASE("conversion from counting automata") {
    const auto a = abstar();
    CHECK(LanguageAutomaton::from_counting(a.to_counting()) == a);

    const LanguageSemiring s(ab());
    Matrix<WordSet> m(1, 1, s.words({"ab"}));
    CHECK_THROWS_AS(LanguageAutomaton::from_counting(CountingAutomaton<LanguageSemiring>(s, m, {s.one()})),
                    ValidationError);
    Matrix<WordSet> ok(2, 2, s.zero());
    ok(1, 0) = s.letters("a");
    const auto moved =
        LanguageAutomaton::from_counting(CountingAutomaton<LanguageSemiring>(s, ok, {s.one(), s.zero()}, 1));
    CHECK(moved.names() == std::vector<std::string>{"q2", "q1"});
    CHECK(cross_section(moved, 1).words == ws({"a"}));
    CHECK_THROWS_AS(LanguageAutomaton::from_counting(
                        CountingAutomaton<LanguageSemiring>(s, ok, {s.letters("a"), s.zero()})),
                    ValidationError);
}

TEST_CASE("property: cross-sections agree with path search") {
    Rng rng(base_seed() + 5);
    const Alphabet abc("abc");
    for (int round = 0; round < 60; ++round) {
        const auto a = random_language_automaton(rng, round % 2 ? ab() : abc, 1, 5);
        const auto sections = enumerate_up_to(a, 5);
        for (std::size_t n = 0; n <= 5; ++n) {
            CHECK(sections[n].words == brute_force_section(a, n));
            CHECK(cross_section(a, n) == sections[n]);
        }
        for (std::size_t n = 0; n <= 4; ++n) {
            for (const auto& w : all_words(a.alphabet(), n)) CHECK(member(a, w) == accepts_by_paths(a, w));
        }
    }
}

TEST_CASE("property: determinization preserves the language") {
    Rng rng(base_seed() + 6);
    for (int round = 0; round < 60; ++round) {
        const auto a = random_language_automaton(rng, ab(), 1, 6, 0.4);
        const auto d = determinize(a);
        CHECK(is_deterministic(d));
        for (std::size_t n = 0; n <= 6; ++n) CHECK(cross_section(d, n).words == cross_section(a, n).words);
    }
}

} // TEST_SUITE
