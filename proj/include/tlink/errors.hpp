#pragma once

#include <stdexcept>
#include <string>

namespace tlink {

// Base class of everything this library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad caller input: malformed files, out-of-range vertices, violated
// preconditions. Maps to exit code 2 in the CLI.
class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& what) : Error(what) {}
};

// A structural guarantee the construction is supposed to ensure failed at
// runtime. These checks are defensive; seeing one means a bug, not bad input.
class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& what) : Error(what) {}
};

// An exhaustive search ran out of its configured budget. Deliberately distinct
// from a negative answer: a search that was cut short proves nothing.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

} // namespace tlink
