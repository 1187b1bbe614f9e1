#pragma once

#include <stdexcept>
#include <string>

namespace weh {

// Caller misuse: mismatched contexts, unbound variables, bad arguments.
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// Mathematically invalid request: division by zero polynomial, degree
// mismatch in solve_linear, parameters outside a printed range.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A pipeline attempted to divide by a quantity that is not covered by its
// nonvanishing ledger, or a ledger entry failed its nonzero re-check.
struct ledger_violation : std::runtime_error {
    explicit ledger_violation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace weh
