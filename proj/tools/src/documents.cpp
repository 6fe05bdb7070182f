#include "documents.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <set>

namespace wrec::cli {

namespace {

[[noreturn]] void shape(const std::string& message) { throw DocumentError("malformed document: " + message); }

const Json& field(const Json& doc, const char* key) {
    if (!doc.is_object()) shape("expected a JSON object");
    const auto it = doc.find(key);
    if (it == doc.end()) shape(std::string("missing key '") + key + "'");
    return *it;
}

const Json& array_field(const Json& doc, const char* key) {
    const Json& v = field(doc, key);
    if (!v.is_array()) shape(std::string("'") + key + "' must be an array");
    return v;
}

std::string string_value(const Json& v, const std::string& what) {
    if (!v.is_string()) shape(what + " must be a string");
    return v.get<std::string>();
}

std::vector<std::string> string_array(const Json& v, const std::string& what) {
    if (!v.is_array()) shape(what + " must be an array");
    std::vector<std::string> out;
    for (const auto& e : v) out.push_back(string_value(e, what + " entry"));
    return out;
}

char letter_value(const Json& v, const std::string& what) {
    const std::string s = string_value(v, what);
    if (s.size() != 1) shape(what + " must be a one-character string, got \"" + s + "\"");
    return s[0];
}

Alphabet alphabet_from(const Json& doc) {
    std::string symbols;
    for (const auto& e : array_field(doc, "alphabet")) symbols += letter_value(e, "alphabet entry");
    return Alphabet(symbols);
}

Json alphabet_to_json(const Alphabet& alphabet) {
    Json out = Json::array();
    for (char c : alphabet.symbols()) out.push_back(std::string(1, c));
    return out;
}

std::map<std::string, std::size_t> index_names(const std::vector<std::string>& names, const char* what) {
    std::map<std::string, std::size_t> out;
    std::vector<std::string> problems;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!out.emplace(names[i], i).second) problems.push_back(std::string("duplicate ") + what + " '" + names[i] + "'");
    }
    if (!problems.empty()) throw ValidationError(problems);
    return out;
}

std::size_t lookup(const std::map<std::string, std::size_t>& index, const std::string& name, const char* what) {
    const auto it = index.find(name);
    if (it == index.end()) throw ValidationError({std::string("unknown ") + what + " '" + name + "'"});
    return it->second;
}

Natural natural_value(const Json& v) {
    if (v.is_number_unsigned()) return Natural(v.get<std::uint64_t>());
    if (v.is_number_integer()) {
        if (v.get<std::int64_t>() < 0) throw ValidationError({"negative natural number " + v.dump()});
        return Natural(v.get<std::int64_t>());
    }
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
            shape("natural number string must be decimal digits, got \"" + s + "\"");
        }
        return Natural(s);
    }
    shape("expected a natural number, got " + v.dump());
}

Json natural_to_json(const Natural& n) {
    if (n <= std::numeric_limits<std::uint64_t>::max()) return Json(static_cast<std::uint64_t>(n));
    return Json(n.str());
}

WordSet word_set_value(const Alphabet& alphabet, const Json& v) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "eps") return WordSet::epsilon();
        if (s == "empty") return {};
        shape("word-set value must be \"eps\", \"empty\" or an array of words, got \"" + s + "\"");
    }
    return WordSet::from_words(alphabet, string_array(v, "word-set value"));
}

Json word_set_to_json(const WordSet& w) {
    if (w.empty()) return "empty";
    if (w.is_epsilon()) return "eps";
    Json out = Json::array();
    for (const auto& word : w) out.push_back(word);
    return out;
}

enum class SemiringKind { Naturals, Letters };

SemiringKind semiring_kind(const Json& doc) {
    const std::string s = string_value(field(doc, "semiring"), "'semiring'");
    if (s == "naturals") return SemiringKind::Naturals;
    if (s == "letters") return SemiringKind::Letters;
    shape("'semiring' must be \"naturals\" or \"letters\", got \"" + s + "\"");
}

template <class Parse>
auto value_row(const Json& v, std::size_t k, const std::string& what, Parse parse) {
    if (!v.is_array()) shape(what + " must be an array");
    if (v.size() != k) {
        throw ValidationError({what + " has " + std::to_string(v.size()) + " entries, expected " + std::to_string(k)});
    }
    std::vector<decltype(parse(v[0]))> out;
    for (const auto& e : v) out.push_back(parse(e));
    return out;
}

template <Semiring S, class Parse>
RecurrenceSystem<S> recurrence_with(S s, const Json& doc, Parse parse) {
    auto labels = string_array(field(doc, "functions"), "'functions'");
    const std::size_t k = labels.size();
    const auto index = index_names(labels, "function");
    const Json& rows = array_field(doc, "coefficients");
    if (rows.size() != k) {
        throw ValidationError({"coefficients have " + std::to_string(rows.size()) + " rows, expected " +
                               std::to_string(k)});
    }
    Matrix<value_t<S>> m(k, k, s.zero());
    for (std::size_t i = 0; i < k; ++i) {
        const auto row = value_row(rows[i], k, "coefficient row " + std::to_string(i + 1), parse);
        for (std::size_t j = 0; j < k; ++j) m(i, j) = row[j];
    }
    auto init = value_row(field(doc, "initial"), k, "'initial'", parse);
    std::size_t principal = 0;
    if (doc.contains("principal")) principal = lookup(index, string_value(doc["principal"], "'principal'"), "function");
    return RecurrenceSystem<S>(std::move(s), std::move(m), std::move(init), std::move(labels), principal);
}

template <Semiring S, class Emit>
Json recurrence_json(const RecurrenceSystem<S>& sys, Json head, Emit emit) {
    head["functions"] = sys.labels();
    Json rows = Json::array();
    for (std::size_t i = 0; i < sys.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < sys.size(); ++j) row.push_back(emit(sys.coefficient(i, j)));
        rows.push_back(std::move(row));
    }
    head["coefficients"] = std::move(rows);
    Json init = Json::array();
    for (const auto& v : sys.initial_values()) init.push_back(emit(v));
    head["initial"] = std::move(init);
    if (sys.principal() != 0) head["principal"] = sys.labels()[sys.principal()];
    return head;
}

template <Semiring S, class Parse>
HigherDegreeSystem<S> higher_degree_with(S s, const Json& doc, Parse parse) {
    HigherDegreeSystem<S> hs{std::move(s), string_array(field(doc, "functions"), "'functions'"), {}};
    const std::size_t k = hs.labels.size();
    const auto index = index_names(hs.labels, "function");
    for (const auto& e : array_field(doc, "equations")) {
        HigherDegreeEquation<S> eq;
        eq.target = lookup(index, string_value(field(e, "function"), "equation 'function'"), "function");
        const Json& d = field(e, "degree");
        if (!d.is_number_integer() || d.get<std::int64_t>() < 0) shape("equation 'degree' must be a natural number");
        eq.degree = d.get<std::size_t>();
        const std::string what = "equation for '" + hs.labels[eq.target] + "'";
        eq.coefficients = value_row(field(e, "coefficients"), k, what + " coefficients", parse);
        const Json& seeds = array_field(e, "seeds");
        for (const auto& v : seeds) eq.seeds.push_back(parse(v));
        hs.equations.push_back(std::move(eq));
    }
    return hs;
}

} // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("invalid JSON: " + std::string(e.what()), e.byte);
    }
}

LanguageAutomaton automaton_from_json(const Json& doc) {
    const Alphabet alphabet = alphabet_from(doc);
    auto names = string_array(field(doc, "states"), "'states'");
    if (names.empty()) throw ValidationError({"automaton has no states"});
    const auto index = index_names(names, "state");
    const std::size_t k = names.size();
    const std::size_t initial = lookup(index, string_value(field(doc, "initial"), "'initial'"), "state");

    // order[new] = old, with the initial state first.
    std::vector<std::size_t> order{initial};
    for (std::size_t i = 0; i < k; ++i) {
        if (i != initial) order.push_back(i);
    }
    std::vector<std::size_t> position(k);
    for (std::size_t p = 0; p < k; ++p) position[order[p]] = p;

    std::vector<bool> finals(k, false);
    for (const auto& name : string_array(field(doc, "final"), "'final'")) {
        finals[position[lookup(index, name, "state")]] = true;
    }
    Matrix<LetterSet> m(k, k, LetterSet{});
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::vector<std::string> problems;
    for (const auto& t : array_field(doc, "transitions")) {
        const std::size_t from = position[lookup(index, string_value(field(t, "from"), "transition 'from'"), "state")];
        const std::size_t to = position[lookup(index, string_value(field(t, "to"), "transition 'to'"), "state")];
        if (!seen.emplace(from, to).second) {
            problems.push_back("more than one transition record from '" + names[order[from]] + "' to '" +
                               names[order[to]] + "'");
            continue;
        }
        LetterSet letters;
        for (const auto& l : array_field(t, "letters")) {
            const char c = letter_value(l, "transition letter");
            if (!alphabet.contains(c)) {
                problems.push_back(std::string("letter '") + c + "' is not in the alphabet");
                continue;
            }
            letters.insert_rank(alphabet.rank(c));
        }
        m(from, to) = letters;
    }
    if (!problems.empty()) throw ValidationError(problems);

    std::vector<std::string> ordered;
    for (std::size_t old : order) ordered.push_back(names[old]);
    return LanguageAutomaton(alphabet, std::move(m), std::move(finals), std::move(ordered));
}

Json automaton_to_json(const LanguageAutomaton& a) {
    const auto& names = a.names();
    Json doc;
    doc["alphabet"] = alphabet_to_json(a.alphabet());
    doc["states"] = names;
    doc["initial"] = names[LanguageAutomaton::initial()];
    Json finals = Json::array();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.is_final(i)) finals.push_back(names[i]);
    }
    doc["final"] = std::move(finals);
    Json transitions = Json::array();
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            const LetterSet l = a.letters(i, j);
            if (l.empty()) continue;
            Json letters = Json::array();
            for (char c : l.letters(a.alphabet())) letters.push_back(std::string(1, c));
            transitions.push_back(Json{{"from", names[i]}, {"to", names[j]}, {"letters", std::move(letters)}});
        }
    }
    doc["transitions"] = std::move(transitions);
    return doc;
}

AnyRecurrence recurrence_from_json(const Json& doc) {
    if (semiring_kind(doc) == SemiringKind::Naturals) {
        return recurrence_with(NaturalSemiring{}, doc, natural_value);
    }
    const Alphabet alphabet = alphabet_from(doc);
    return recurrence_with(LanguageSemiring(alphabet), doc,
                           [&](const Json& v) { return word_set_value(alphabet, v); });
}

Json recurrence_to_json(const RecurrenceSystem<NaturalSemiring>& system) {
    return recurrence_json(system, Json{{"semiring", "naturals"}}, natural_to_json);
}

Json recurrence_to_json(const RecurrenceSystem<LanguageSemiring>& system) {
    Json head{{"semiring", "letters"}, {"alphabet", alphabet_to_json(system.semiring().alphabet())}};
    return recurrence_json(system, std::move(head), word_set_to_json);
}

AnyHigherDegree higher_degree_from_json(const Json& doc) {
    if (semiring_kind(doc) == SemiringKind::Naturals) {
        return higher_degree_with(NaturalSemiring{}, doc, natural_value);
    }
    const Alphabet alphabet = alphabet_from(doc);
    return higher_degree_with(LanguageSemiring(alphabet), doc,
                              [&](const Json& v) { return word_set_value(alphabet, v); });
}

} // namespace wrec::cli
