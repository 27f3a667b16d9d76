#pragma once

#include <stdexcept>
#include <string>

namespace pdaflow {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Solver state became non-finite; usually means the lattice relaxation time
// is too close to 1/2 for the configured inflow speed.
struct NonFiniteField : Error {
    explicit NonFiniteField(const std::string& what) : Error(what) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct ProbeInSolid : Error {
    explicit ProbeInSolid(const std::string& what) : Error(what) {}
};

struct NoSheddingDetected : Error {
    explicit NoSheddingDetected(const std::string& what) : Error(what) {}
};

struct WindowTooLong : Error {
    explicit WindowTooLong(const std::string& what) : Error(what) {}
};

struct NonFiniteLoss : Error {
    explicit NonFiniteLoss(const std::string& what) : Error(what) {}
};

struct MissingArtifact : Error {
    explicit MissingArtifact(const std::string& what) : Error(what) {}
};

struct TooShort : Error {
    explicit TooShort(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct UnknownKey : Error {
    explicit UnknownKey(const std::string& what) : Error(what) {}
};

struct ConstraintViolation : Error {
    explicit ConstraintViolation(const std::string& what) : Error(what) {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(what) {}
};

}  // namespace pdaflow
