#pragma once

#include <stdexcept>
#include <string>

namespace weylhom {

// Raised when a documented operation precondition is violated (CLI exit 2).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when a computation exceeds a configured size bound (CLI exit 3).
struct SizeLimitError : std::length_error {
    using std::length_error::length_error;
};

// Raised when an internal invariant fails; always a bug, never user error.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

namespace detail {
[[noreturn]] inline void failCheck(const char* what, const char* expr,
                                   const char* file, int line) {
    throw InternalError(std::string(what) + " [" + expr + "] at " + file +
                        ":" + std::to_string(line));
}
}  // namespace detail

}  // namespace weylhom

// Invariant checks stay on in all build types; the exact combinatorics is
// cheap and silent corruption is far worse than a throw.
#define WH_CHECK(cond, what)                                              \
    do {                                                                  \
        if (!(cond))                                                      \
            ::weylhom::detail::failCheck(what, #cond, __FILE__, __LINE__); \
    } while (0)

#define WH_REQUIRE(cond, what)                          \
    do {                                                \
        if (!(cond)) throw ::weylhom::PreconditionError(what); \
    } while (0)
