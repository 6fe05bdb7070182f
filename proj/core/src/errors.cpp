#include "wrec/errors.hpp"

namespace wrec {

namespace {
std::string join_problems(const std::vector<std::string>& problems) {
    std::string out = "validation failed";
    for (std::size_t i = 0; i < problems.size(); ++i) {
        out += (i == 0 ? ": " : "; ");
        out += problems[i];
    }
    return out;
}
} // namespace

ValidationError::ValidationError(std::vector<std::string> problems)
    : Error(join_problems(problems)), problems_(std::move(problems)) {}

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error(message + " at position " + std::to_string(position)), position_(position) {}

} // namespace wrec
