#ifndef KAUG_ERRORS_HPP
#define KAUG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kaug {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Problem has no feasible augmentation (or LP infeasible).
struct InfeasibleError : Error {
    using Error::Error;
};

// Guaranteed mode requested below the supported node-count regime.
struct RegimeViolationError : Error {
    using Error::Error;
};

// The restart loop exceeded its proven budget; indicates a solver bug.
struct RestartBudgetError : Error {
    using Error::Error;
};

struct IterationLimitError : Error {
    using Error::Error;
};

// Enumeration request larger than the configured budget.
struct SizeLimitError : Error {
    using Error::Error;
};

// Oracle invoked beyond its candidate/search budget.
struct BudgetExceededError : Error {
    using Error::Error;
};

struct AdjacentTerminalsError : Error {
    using Error::Error;
};

struct NotDeficientError : Error {
    using Error::Error;
};

struct NotMeetingPointError : Error {
    using Error::Error;
};

struct BadTerminalCountError : Error {
    using Error::Error;
};

struct EmptySupportError : Error {
    using Error::Error;
};

}  // namespace kaug

#endif
