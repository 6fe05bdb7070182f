#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "wrec/alphabet.hpp"
#include "wrec/language.hpp"

namespace wrec {

/// Regular expression syntax tree over the six regular-language formers.
class Regex {
public:
    enum class Kind { EmptySet, Epsilon, Letter, Union, Concat, Star };

    static Regex empty_set() { return Regex(Kind::EmptySet); }
    static Regex epsilon() { return Regex(Kind::Epsilon); }
    static Regex letter(char c) {
        Regex r(Kind::Letter);
        r.letter_ = c;
        return r;
    }
    static Regex alt(Regex l, Regex r) { return binary(Kind::Union, std::move(l), std::move(r)); }
    static Regex cat(Regex l, Regex r) { return binary(Kind::Concat, std::move(l), std::move(r)); }
    static Regex star(Regex child) {
        Regex r(Kind::Star);
        r.left_ = std::make_shared<const Regex>(std::move(child));
        return r;
    }

    Kind kind() const noexcept { return kind_; }
    char symbol() const noexcept { return letter_; }
    /// Operand of Star, left operand of Union/Concat.
    const Regex& left() const { return *left_; }
    const Regex& right() const { return *right_; }
    const Regex& child() const { return *left_; }

    /// Structural equality.
    bool operator==(const Regex& o) const;

private:
    explicit Regex(Kind k) : kind_(k) {}
    static Regex binary(Kind k, Regex l, Regex r) {
        Regex out(k);
        out.left_ = std::make_shared<const Regex>(std::move(l));
        out.right_ = std::make_shared<const Regex>(std::move(r));
        return out;
    }

    Kind kind_;
    char letter_ = 0;
    std::shared_ptr<const Regex> left_;
    std::shared_ptr<const Regex> right_;
};

/// Parses the surface syntax:
///   letters   single alphanumeric characters from `alphabet`
///   r|s       union (lowest precedence)
///   rs        concatenation
///   r*        star (postfix, highest precedence, repeatable)
///   (r)       grouping
///   !         the empty language
///   &         the empty word
/// Whitespace is ignored. Throws ParseError with a 1-based position.
Regex parse_regex(std::string_view text, const Alphabet& alphabet);

/// Fully parenthesized rendering that parses back to the same tree.
std::string to_string(const Regex& r);

/// Structural induction: base automata for !, & and letters, closure
/// constructions for the operators. No simplification is applied.
LanguageAutomaton compile_regex(const Regex& r, const Alphabet& alphabet);

} // namespace wrec
