#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace blockent {

/// Library error with a stable machine-readable code alongside the human
/// message. Codes in use: "domain", "size", "bounds", "empty-block",
/// "insufficient-tiles", "degenerate-moments", "config", "shape", "level",
/// "format", "parse", "usage", "io", "network", "digest-mismatch",
/// "internal".
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void raise(std::string code, const std::string& message) {
    throw Error(std::move(code), message);
}

}  // namespace blockent
