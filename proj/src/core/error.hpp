#pragma once

#include <stdexcept>
#include <string>

namespace psn {

// Error taxonomy shared by the C++ modules and mapped onto C API / CLI
// status codes (invalid input -> 2, runtime/stage failure -> 3).
enum class errc { invalid_argument = 2, runtime = 3, io = 4 };

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail_invalid(const std::string& msg) {
    throw error(errc::invalid_argument, msg);
}
[[noreturn]] inline void fail_runtime(const std::string& msg) {
    throw error(errc::runtime, msg);
}
[[noreturn]] inline void fail_io(const std::string& msg) {
    throw error(errc::io, msg);
}

} // namespace psn
