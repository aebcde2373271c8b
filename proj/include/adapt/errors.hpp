#pragma once

#include <stdexcept>
#include <string>

namespace adapt {

// Raised when an input document (scenario, repertoire, weights, MDP dump)
// fails schema or cross-reference validation. `where` is a dotted path to
// the offending field so the CLI can print actionable diagnostics.
class LoadError : public std::runtime_error {
public:
    LoadError(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

// Illegal knowledge-base transition (e.g. completing a scan that was never
// started). These indicate a bug in the caller, not bad user input.
class ProtocolError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violation of a precondition between engine and simulator (e.g. attacking
// an interface the tester does not know about).
class ContractError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad run configuration (weight vectors not summing to 1, zero budgets, ...).
class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace adapt
