#pragma once

#include <stdexcept>

namespace qe {

/// A mathematical precondition of an operation was violated.
struct DomainError : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

/// Division by zero, or an exact division with nonzero remainder.
struct DivisionError : std::domain_error {
	using std::domain_error::domain_error;
};

/// The coefficient ring lacks a capability required by the operation.
struct CapabilityError : std::logic_error {
	using std::logic_error::logic_error;
};

/// A size parameter exceeds the enumeration or truncation guards.
struct GuardError : std::length_error {
	using std::length_error::length_error;
};

} // namespace qe
