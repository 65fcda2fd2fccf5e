#pragma once

#include <stdexcept>
#include <string>

namespace rgw {

// Input text rejected (bad syntax, unknown symbol, malformed file).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Operation precondition violated (wrong game family, incomplete table, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A state/step/memory budget was exhausted before the computation finished.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rgw
