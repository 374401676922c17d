#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pfilter {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tracing a symbol that is not part of the filter's alphabet.
struct UnknownSymbolError : Error {
    using Error::Error;
};

// The observation stream left the interaction language; the filter has no
// defined behavior past this point.
struct CrashError : Error {
    using Error::Error;
};

// committed_color() on a marker set whose color union is not a singleton.
struct AmbiguousOutputError : Error {
    using Error::Error;
};

struct EmptyInitialError : Error {
    using Error::Error;
};

struct NotDeterministicError : Error {
    using Error::Error;
};

struct NotUnaryError : Error {
    using Error::Error;
};

struct AlphabetTooSmallError : Error {
    using Error::Error;
};

// A checker was invoked outside its stated precondition.
struct PreconditionError : Error {
    using Error::Error;
};

// enumerate_language() hit its string-count cap.
struct LimitExceededError : Error {
    using Error::Error;
};

// A search ran out of node budget. proven_lower_bound is the smallest state
// count that was NOT ruled out yet: every size below it has been exhausted.
struct BudgetExhaustedError : Error {
    BudgetExhaustedError(const std::string& what, uint32_t lower_bound)
        : Error(what), proven_lower_bound(lower_bound) {}
    uint32_t proven_lower_bound;
};

}  // namespace pfilter
