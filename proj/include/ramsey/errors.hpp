#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

/// A caller-visible precondition was violated (hypothesis bounds, degree
/// requirements, malformed inputs to an engine).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/**
 * A runtime assertion that the underlying theorems guarantee has failed.
 * Carries the claim identifier; any raise is a reportable event since it
 * would contradict a proved statement (or expose an implementation bug).
 */
struct TheoremViolation : std::runtime_error {
    TheoremViolation(std::string claim, const std::string& detail)
        : std::runtime_error("theorem violation [" + claim + "]: " + detail),
          claim_id(std::move(claim)) {}

    std::string claim_id;
};

/// The budgeted search for the one non-constructive branch ran out of steps.
struct SearchBudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ramsey
