#include "wrec/regex.hpp"

#include <cctype>

#include "wrec/closure.hpp"
#include "wrec/errors.hpp"

namespace wrec {

bool Regex::operator==(const Regex& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
    case Kind::EmptySet:
    case Kind::Epsilon: return true;
    case Kind::Letter: return letter_ == o.letter_;
    case Kind::Star: return *left_ == *o.left_;
    case Kind::Union:
    case Kind::Concat: return *left_ == *o.left_ && *right_ == *o.right_;
    }
    return false;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    Regex parse() {
        Regex r = parse_union();
        skip_space();
        if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return r;
    }

private:
    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_ + 1); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    int peek() {
        skip_space();
        return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_]) : -1;
    }

    static bool starts_atom(int c) { return c == '(' || c == '!' || c == '&' || (c >= 0 && std::isalnum(c)); }

    Regex parse_union() {
        Regex r = parse_concat();
        while (peek() == '|') {
            ++pos_;
            r = Regex::alt(std::move(r), parse_concat());
        }
        return r;
    }

    Regex parse_concat() {
        Regex r = parse_postfix();
        while (starts_atom(peek())) r = Regex::cat(std::move(r), parse_postfix());
        return r;
    }

    Regex parse_postfix() {
        Regex r = parse_atom();
        while (peek() == '*') {
            ++pos_;
            r = Regex::star(std::move(r));
        }
        return r;
    }

    Regex parse_atom() {
        const int c = peek();
        if (c < 0) fail("unexpected end of input");
        if (c == '(') {
            ++pos_;
            Regex inner = parse_union();
            if (peek() != ')') fail(pos_ < text_.size() ? std::string("expected ')' but found '") + text_[pos_] + "'"
                                                        : std::string("expected ')'"));
            ++pos_;
            return inner;
        }
        if (c == '!') {
            ++pos_;
            return Regex::empty_set();
        }
        if (c == '&') {
            ++pos_;
            return Regex::epsilon();
        }
        if (std::isalnum(c)) {
            if (!alphabet_.contains(static_cast<char>(c))) {
                fail(std::string("unknown letter '") + static_cast<char>(c) + "'");
            }
            ++pos_;
            return Regex::letter(static_cast<char>(c));
        }
        fail(std::string("unexpected '") + static_cast<char>(c) + "'");
    }
};

} // namespace

Regex parse_regex(std::string_view text, const Alphabet& alphabet) {
    return Parser(text, alphabet).parse();
}

std::string to_string(const Regex& r) {
    switch (r.kind()) {
    case Regex::Kind::EmptySet: return "!";
    case Regex::Kind::Epsilon: return "&";
    case Regex::Kind::Letter: return std::string(1, r.symbol());
    case Regex::Kind::Union: return "(" + to_string(r.left()) + "|" + to_string(r.right()) + ")";
    case Regex::Kind::Concat: return "(" + to_string(r.left()) + to_string(r.right()) + ")";
    case Regex::Kind::Star: return to_string(r.child()) + "*";
    }
    return {};
}

LanguageAutomaton compile_regex(const Regex& r, const Alphabet& alphabet) {
    switch (r.kind()) {
    case Regex::Kind::EmptySet: return empty_language(alphabet);
    case Regex::Kind::Epsilon: return epsilon_language(alphabet);
    case Regex::Kind::Letter: return letter_language(alphabet, r.symbol());
    case Regex::Kind::Union: return unite(compile_regex(r.left(), alphabet), compile_regex(r.right(), alphabet));
    case Regex::Kind::Concat: return concat(compile_regex(r.left(), alphabet), compile_regex(r.right(), alphabet));
    case Regex::Kind::Star: return star(compile_regex(r.child(), alphabet));
    }
    throw Error("unhandled regex node");
}

} // namespace wrec
