#pragma once

#include <stdexcept>
#include <string>

namespace wtorsor {

/// Base class for all library errors. `kind()` is the stable machine-readable
/// tag surfaced on the CLI as {"error": ..., "kind": ...}.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct InvalidInputError : Error {
    explicit InvalidInputError(const std::string& what) : Error("invalid-input", what) {}
};

/// Mixing values tied to different parent structures (element of the wrong
/// group, weight vector of the wrong length, ...).
struct StructuralError : Error {
    explicit StructuralError(const std::string& what) : Error("structural", what) {}
};

/// An enumeration bound was exceeded.
struct ResourceError : Error {
    explicit ResourceError(const std::string& what) : Error("resource", what) {}
};

struct ArithmeticError : Error {
    explicit ArithmeticError(const std::string& what) : Error("arithmetic", what) {}
};

/// Dual data that is not the transform of any rational weighting.
struct NonRationalWeightsError : Error {
    explicit NonRationalWeightsError(const std::string& what)
        : Error("non-rational-weights", what) {}
};

/// Reference weighting handed to a counting function is not reduced or its
/// transform vanishes somewhere nontrivial.
struct InvalidReferenceError : Error {
    explicit InvalidReferenceError(const std::string& what)
        : Error("invalid-reference", what) {}
};

/// A cross-check between two independent computation paths failed; indicates
/// an implementation bug, never a caller error.
struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error("internal", what) {}
};

}  // namespace wtorsor
