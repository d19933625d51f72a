#pragma once

#include <stdexcept>
#include <string>

namespace crew {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A caller broke a documented precondition (id mismatch, missing dual, ...).
struct ContractViolation : Error {
    explicit ContractViolation(const std::string& msg) : Error(msg) {}
};

// Structural problems in a roster (pairing covered twice, pilot missing, ...).
struct CoverageError : Error {
    explicit CoverageError(const std::string& msg) : Error(msg) {}
};

// Malformed or unreadable input files.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Instance or scenario generation asked for something impossible.
struct GenerationError : Error {
    explicit GenerationError(const std::string& msg) : Error(msg) {}
};

// Invalid solver/window/branching parameters.
struct ParameterError : Error {
    explicit ParameterError(const std::string& msg) : Error(msg) {}
};

// A freeze mask imposes something a pilot's network cannot carry.
struct FreezeConflictError : Error {
    explicit FreezeConflictError(const std::string& msg) : Error(msg) {}
};

// Instance too large for an exhaustive routine that is guarded by size.
struct SizeError : Error {
    explicit SizeError(const std::string& msg) : Error(msg) {}
};

}  // namespace crew
