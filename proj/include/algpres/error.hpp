#pragma once

#include <stdexcept>
#include <string>

namespace algpres {

/// Every failure raised by the library carries a stable machine-readable code
/// (e.g. "MixedFields", "NotAnIdeal") next to the human-readable message.
class AlgebraError : public std::runtime_error {
public:
    AlgebraError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw AlgebraError(code, message);
}

} // namespace algpres
