#pragma once

#include <stdexcept>
#include <string>

namespace qs {

// Machine-readable failure. `code` is one of the names used in the CLI
// error payloads (NotBelow, NotSymmetrizable, ...).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace qs
