#pragma once

#include <stdexcept>
#include <string>

namespace liejcd {

enum class ErrorCode {
    Validation,                  // parse errors, dimension mismatches, bad input documents
    NotClosed,                   // matrix span not closed under the bracket
    LinearlyDependentBasis,      // matrix basis not linearly independent
    NotInDerivedAlgebra,         // element outside [g,g], no decomposition exists
    NaturalRequiresMatrixMode,   // natural representation needs a matrix realization
    InternalInvariantViolation,  // a theorem-guaranteed step failed; signals a bug
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const { return code_; }

    // For NotClosed: the offending basis pair.
    long pair_i = -1;
    long pair_j = -1;

private:
    ErrorCode code_;
};

[[noreturn]] inline void throw_not_closed(std::size_t i, std::size_t j) {
    Error e(ErrorCode::NotClosed,
            "bracket of basis pair (" + std::to_string(i) + ", " + std::to_string(j) +
                ") leaves the span");
    e.pair_i = static_cast<long>(i);
    e.pair_j = static_cast<long>(j);
    throw e;
}

}  // namespace liejcd
