#include <doctest.h>

#include <sstream>

#include "commands.hpp"
#include "documents.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "wrec/closure.hpp"

using namespace wrec;
using namespace wrec::testing;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(WREC_TEST_DATA_DIR) + "/" + name; }

std::string last_line(const std::string& text) {
    const auto end = text.find_last_not_of('\n');
    const auto start = text.rfind('\n', end);
    return text.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("compile then cross-section through stdin") {
    const auto compiled = call({"compile", "--alphabet", "ab", "(ab*a)*"});
    REQUIRE(compiled.code == 0);
    const auto doc = cli::parse_json(compiled.out);
    CHECK(doc["states"].size() > 2);
    CHECK(call({"cross-section", "-", "4"}, compiled.out).out == "aaaa\nabba\n");
    CHECK(call({"cross-section", "-", "1"}, compiled.out).out.empty());
}

TEST_CASE("compile the empty language") {
    const auto r = call({"compile", "--alphabet", "ab", "!"});
    REQUIRE(r.code == 0);
    const auto doc = cli::parse_json(r.out);
    CHECK(doc["states"].size() == 1);
    CHECK(doc["final"].empty());
    CHECK(doc["transitions"].empty());
}

TEST_CASE("syntax errors exit with 2") {
    const auto r = call({"compile", "--alphabet", "ab", "a|"});
    CHECK(r.code == 2);
    CHECK(r.err.find("position 3") != std::string::npos);
    CHECK(r.out.empty());
    CHECK(call({"compile", "--alphabet", "ab", "abc"}).code == 2);
}

TEST_CASE("cross-sections and enumeration") {
    CHECK(call({"cross-section", data("abstar.json"), "4"}).out == "aaaa\nabba\n");
    CHECK(call({"cross-section", data("abstar.json"), "1"}).out.empty());
    CHECK(call({"cross-section", data("abstar.json"), "0"}).out == "&\n");
    CHECK(call({"enumerate", data("abstar.json"), "4"}).out ==
          "# n=0\n&\n# n=1\n# n=2\naa\n# n=3\naba\n# n=4\naaaa\nabba\n");
}

TEST_CASE("membership") {
    CHECK(call({"member", data("abstar.json"), "abba"}).out == "true\n");
    CHECK(call({"member", data("abstar.json"), "a"}).out == "false\n");
    CHECK(call({"member", data("abstar.json"), "&"}).out == "true\n");
    CHECK(call({"member", data("abstar.json"), "abc"}).code == 1);
}

TEST_CASE("density") {
    const auto two = call({"density", data("two_bs.json"), "10"});
    CHECK(two.code == 0);
    CHECK(last_line(two.out) == "10\t45");
    CHECK(two.err.empty());
    CHECK(last_line(call({"density", data("abstar.json"), "6"}).out) == "6\t5");
    CHECK(call({"density", data("abstar.json"), "30", "--matrix-power"}).out ==
          call({"density", data("abstar.json"), "30"}).out);

    const auto empty = call({"compile", "--alphabet", "ab", "!"}).out;
    const auto classified = call({"density", "-", "3", "--classify"}, empty);
    CHECK(classified.out == "0\t0\n1\t0\n2\t0\n3\t0\nclass: zero (heuristic)\n");
    CHECK(last_line(call({"density", data("abstar.json"), "64", "--classify"}).out) ==
          "class: exponential (heuristic)");
    CHECK(last_line(call({"density", data("two_bs.json"), "5", "--classify"}).out) ==
          "class: polynomial(2) (heuristic)");

    const auto nd = call({"compile", "--alphabet", "ab", "a|ab"}).out;
    const auto r = call({"density", "-", "2"}, nd);
    CHECK(r.code == 0);
    CHECK(r.err.find("nondeterministic") != std::string::npos);
    CHECK(r.out == "0\t0\n1\t1\n2\t1\n");
}

TEST_CASE("paths, grammar, recurrence") {
    CHECK(call({"paths", data("abstar.json"), "4"}).out == "2\n");
    CHECK(call({"grammar", data("abstar.json")}).out == "S -> a A2\nS -> eps\nA2 -> a S\nA2 -> b A2\n");

    const auto rec = cli::parse_json(call({"recurrence", data("abstar.json")}).out);
    CHECK(rec["semiring"] == "letters");
    CHECK(rec["functions"] == cli::Json({"f1", "f2"}));
    CHECK(rec["coefficients"].dump() == R"([["empty",["a"]],[["a"],["b"]]])");
    CHECK(rec["initial"].dump() == R"(["eps","empty"])");

    const auto dens = cli::parse_json(call({"recurrence", data("two_bs.json"), "--density"}).out);
    CHECK(dens["semiring"] == "naturals");
    CHECK(dens["coefficients"].dump() == "[[1,1,0],[0,1,1],[0,0,1]]");
    CHECK(dens["initial"].dump() == "[0,0,1]");
}

TEST_CASE("closure operations") {
    const auto starred = call({"ops", "star", data("ab_star_a.json")});
    REQUIRE(starred.code == 0);
    CHECK(call({"enumerate", "-", "4"}, starred.out).out == call({"enumerate", data("abstar.json"), "4"}).out);

    const auto u = call({"ops", "union", data("abstar.json"), data("two_bs.json")});
    REQUIRE(u.code == 0);
    CHECK(call({"cross-section", "-", "2"}, u.out).out == "aa\nbb\n");
    const auto c = call({"ops", "concat", data("two_bs.json"), data("abstar.json")});
    CHECK(call({"cross-section", "-", "3"}, c.out).out == "abb\nbab\nbba\n");
    CHECK(call({"ops", "star", data("abstar.json"), data("abstar.json")}).code == 1);
    CHECK(call({"ops", "intersect", data("abstar.json")}).code == 1);
}

TEST_CASE("determinize") {
    const auto nd = call({"compile", "--alphabet", "ab", "(a|b)*abb"}).out;
    const auto d = call({"determinize", "-"}, nd);
    REQUIRE(d.code == 0);
    const auto a = cli::automaton_from_json(cli::parse_json(d.out));
    CHECK(is_deterministic(a));
    CHECK(call({"enumerate", "-", "5"}, d.out).out == call({"enumerate", "-", "5"}, nd).out);
}

TEST_CASE("reduce") {
    const auto r = call({"reduce", data("degree4.json")});
    REQUIRE(r.code == 0);
    const auto doc = cli::parse_json(r.out);
    CHECK(doc["functions"].dump() == R"j(["f1","f2","g1(f1)","g2(f1)","g3(f1)"])j");
    CHECK(doc["initial"].dump() == "[1,7,4,5,6]");
    // f1: 1,4,5,6 then 2·f2(n); f2(n+1) = 3 f1(n) + f2(n), f2(0) = 7.
    CHECK(call({"reduce", data("degree4.json"), "--evaluate", "5"}).out ==
          "n\tf1\tf2\n0\t1\t7\n1\t4\t10\n2\t5\t22\n3\t6\t37\n4\t14\t55\n5\t20\t97\n");
    const auto bad = R"({"semiring":"naturals","functions":["f"],"equations":[{"function":"f","degree":2,"coefficients":[1],"seeds":[1]}]})";
    CHECK(call({"reduce", "-"}, bad).code == 1);
}

TEST_CASE("exit codes") {
    CHECK(call({"cross-section", "-", "1"}, "{not json").code == 2);
    CHECK(call({"cross-section", "-", "1"}, R"({"alphabet":["a"]})").code == 2);
    CHECK(call({"cross-section", "-", "1"}, R"({"alphabet":["a"],"states":["p"],"initial":"q","final":[],"transitions":[]})").code == 1);
    CHECK(call({"cross-section", "-", "1"}, R"({"alphabet":["a"],"states":["p"],"initial":"p","final":[],"transitions":[{"from":"p","to":"p","letters":["b"]}]})").code == 1);
    CHECK(call({"cross-section", "-", "1"}, R"({"alphabet":["a"],"states":["p"],"initial":"p","final":[],"transitions":[{"from":"p","to":"p","letters":["a"]},{"from":"p","to":"p","letters":["a"]}]})").code == 1);
    const auto all = call({"compile", "--alphabet", "ab", "(a|b)*"}).out;
    const auto guarded = call({"cross-section", "-", "12", "--max-words", "100"}, all);
    CHECK(guarded.code == 3);
    CHECK(guarded.err.find("resource limit") != std::string::npos);
    CHECK(call({"enumerate", "-", "12", "--max-words", "100"}, all).code == 3);
    CHECK(call({}).code == 1);
    CHECK(call({"frobnicate"}).code == 1);
    CHECK(call({"density", data("missing.json"), "3"}).code == 1);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("initial state need not be listed first") {
    const auto doc = R"({"alphabet":["a"],"states":["x","y"],"initial":"y","final":["x"],"transitions":[{"from":"y","to":"x","letters":["a"]}]})";
    CHECK(call({"cross-section", "-", "1"}, doc).out == "a\n");
    const auto a = cli::automaton_from_json(cli::parse_json(doc));
    CHECK(a.names() == std::vector<std::string>{"y", "x"});
}

TEST_CASE("property: emitted documents re-parse to the same automaton") {
    Rng rng(base_seed() + 14);
    for (int round = 0; round < 50; ++round) {
        const auto a = random_language_automaton(rng, ab(), 1, 5);
        const auto doc = cli::automaton_to_json(a);
        CHECK(cli::automaton_from_json(cli::parse_json(doc.dump())) == a);
    }
}

TEST_CASE("recurrence documents round-trip, including big naturals") {
    const RecurrenceSystem<NaturalSemiring> big(NaturalSemiring{}, Matrix<Natural>(1, 1, Natural("123456789012345678901234567890")),
                                                {Natural(2)}, {"h"});
    const auto doc = cli::recurrence_to_json(big);
    CHECK(doc["coefficients"].dump() == R"([["123456789012345678901234567890"]])");
    const auto back = std::get<RecurrenceSystem<NaturalSemiring>>(cli::recurrence_from_json(doc));
    CHECK(structurally_equal(back, big));

    const auto lang = automaton_to_recurrence(abstar().to_counting());
    const auto lback = std::get<RecurrenceSystem<LanguageSemiring>>(cli::recurrence_from_json(cli::recurrence_to_json(lang)));
    CHECK(structurally_equal(lback, lang));
}

TEST_CASE("commands are deterministic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"compile", "--alphabet", "ab", "(a|b)*a(a|b)"},
             {"enumerate", data("two_bs.json"), "6"},
             {"grammar", data("two_bs.json")},
         }) {
        CHECK(call(args).out == call(args).out);
    }
}

} // TEST_SUITE
