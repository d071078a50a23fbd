#ifndef PARCERT_ERRORS_HPP
#define PARCERT_ERRORS_HPP

#include <stdexcept>

namespace parcert {

// Malformed sequence/envelope/criterion parameters (bad selector, m < 2, ...).
struct InvalidSpec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Argument outside the operation's stated domain.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A comparison stayed unresolved at the maximum working precision.
// Scans never throw this; they record the index as inconclusive instead.
struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two routes that must agree (e.g. the plane-partition fills) disagreed.
// Always indicates an implementation bug, never bad input.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace parcert

#endif
