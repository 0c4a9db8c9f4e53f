#pragma once

#include <stdexcept>
#include <string>

namespace stance {

// Error categories map onto CLI exit codes: input -> 2, validation -> 3,
// anything else -> 1.
enum class ErrKind { input, validation, internal };

class Error : public std::runtime_error {
public:
    Error(ErrKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrKind kind() const { return kind_; }

private:
    ErrKind kind_;
};

[[noreturn]] inline void fail_input(const std::string& msg) {
    throw Error(ErrKind::input, msg);
}

[[noreturn]] inline void fail_validation(const std::string& msg) {
    throw Error(ErrKind::validation, msg);
}

[[noreturn]] inline void fail_internal(const std::string& msg) {
    throw Error(ErrKind::internal, msg);
}

} // namespace stance
