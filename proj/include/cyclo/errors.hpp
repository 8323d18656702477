#pragma once

#include <stdexcept>

namespace cyclo {

// Base type for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidModulus : Error { using Error::Error; };
struct NotInvertible : Error { using Error::Error; };
struct InvalidTriple : Error { using Error::Error; };
struct OutOfWindow : Error { using Error::Error; };
struct DegreeTooLarge : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct NonPositiveThreshold : Error { using Error::Error; };
struct RequiresPGreaterThan3 : Error { using Error::Error; };

// A relation the theory guarantees failed to hold. No input can trigger
// these; they signal an implementation bug.
struct InternalCheckFailure : Error { using Error::Error; };
struct OddN1Sum : InternalCheckFailure { using InternalCheckFailure::InternalCheckFailure; };
struct BoundViolation : InternalCheckFailure { using InternalCheckFailure::InternalCheckFailure; };

} // namespace cyclo
