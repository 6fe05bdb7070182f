#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "wrec/errors.hpp"
#include "wrec/language.hpp"
#include "wrec/recurrence.hpp"

namespace wrec::cli {

using Json = nlohmann::ordered_json;

/// A document with the wrong shape (missing key, wrong JSON type). Reported
/// like a parse error.
class DocumentError : public Error {
public:
    using Error::Error;
};

Json parse_json(const std::string& text);

// AutomatonDocument:
//   {"alphabet": ["a","b"], "states": ["q1","q2"], "initial": "q1",
//    "final": ["q1"], "transitions": [{"from":"q1","to":"q2","letters":["a"]}]}
// The initial state is moved to the front when it is not listed first.
LanguageAutomaton automaton_from_json(const Json& doc);
Json automaton_to_json(const LanguageAutomaton& a);

// RecurrenceDocument:
//   {"semiring": "naturals" | "letters", "alphabet": [...] (letters only),
//    "functions": [...], "coefficients": k×k, "initial": k, "principal": name}
// Naturals are integers, or decimal strings once they leave 64 bits. Letter
// values are "eps", "empty" or an array of words ("" is ε).
using AnyRecurrence = std::variant<RecurrenceSystem<NaturalSemiring>, RecurrenceSystem<LanguageSemiring>>;

AnyRecurrence recurrence_from_json(const Json& doc);
Json recurrence_to_json(const RecurrenceSystem<NaturalSemiring>& system);
Json recurrence_to_json(const RecurrenceSystem<LanguageSemiring>& system);

// Higher-degree document for `reduce`:
//   {"semiring": ..., "alphabet": [...], "functions": ["f1","f2"],
//    "equations": [{"function": "f1", "degree": 4,
//                   "coefficients": [...k values...], "seeds": [...degree values...]}]}
using AnyHigherDegree = std::variant<HigherDegreeSystem<NaturalSemiring>, HigherDegreeSystem<LanguageSemiring>>;

AnyHigherDegree higher_degree_from_json(const Json& doc);

} // namespace wrec::cli
