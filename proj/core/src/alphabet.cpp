#include "wrec/alphabet.hpp"

#include <cctype>

#include "wrec/errors.hpp"

namespace wrec {

Alphabet::Alphabet(std::string_view symbols) {
    if (symbols.size() > max_size) {
        throw AlphabetError("alphabet has " + std::to_string(symbols.size()) +
                            " symbols; at most 64 are supported");
    }
    for (char c : symbols) {
        auto u = static_cast<unsigned char>(c);
        if (!std::isalnum(u)) {
            throw AlphabetError(std::string("alphabet symbol '") + c + "' is not a letter or digit");
        }
        if (rank_[u] >= 0) {
            throw AlphabetError(std::string("alphabet symbol '") + c + "' listed twice");
        }
        rank_[u] = static_cast<signed char>(symbols_.size());
        symbols_.push_back(c);
    }
}

std::size_t Alphabet::rank(char c) const {
    auto r = rank_[static_cast<unsigned char>(c)];
    if (r < 0) {
        throw AlphabetError(std::string("symbol '") + c + "' is not in the alphabet {" + symbols_ + "}");
    }
    return static_cast<std::size_t>(r);
}

bool Alphabet::less(std::string_view a, std::string_view b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto ra = rank_[static_cast<unsigned char>(a[i])];
        auto rb = rank_[static_cast<unsigned char>(b[i])];
        if (ra != rb) return ra < rb;
    }
    return false;
}

void Alphabet::check_word(std::string_view word) const {
    for (char c : word) (void)rank(c);
}

} // namespace wrec
