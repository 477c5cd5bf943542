#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace matval {

/// Base for all domain errors. `kind` is a stable machine-readable tag used
/// by the CLI when emitting JSON diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

struct CardinalityMismatch : Error {
    explicit CardinalityMismatch(const std::string& msg)
        : Error("CardinalityMismatch", msg) {}
};

struct ElementOutOfRange : Error {
    explicit ElementOutOfRange(const std::string& msg)
        : Error("ElementOutOfRange", msg) {}
};

/// Carries a witness (B1, B2, b1) for which no exchange partner exists.
struct ExchangeViolation : Error {
    ExchangeViolation(std::vector<int> b1, std::vector<int> b2, int elem,
                      const std::string& msg)
        : Error("ExchangeViolation", msg),
          basis1(std::move(b1)), basis2(std::move(b2)), element(elem) {}
    std::vector<int> basis1, basis2;
    int element;
};

struct InvalidParameters : Error {
    explicit InvalidParameters(const std::string& msg)
        : Error("InvalidParameters", msg) {}
};

struct InvalidPermutation : Error {
    explicit InvalidPermutation(const std::string& msg)
        : Error("InvalidPermutation", msg) {}
};

struct EmptyMatroid : Error {
    explicit EmptyMatroid(const std::string& msg) : Error("EmptyMatroid", msg) {}
};

struct NotABasis : Error {
    explicit NotABasis(const std::string& msg) : Error("NotABasis", msg) {}
};

struct ScaleExceeded : Error {
    explicit ScaleExceeded(const std::string& msg) : Error("ScaleExceeded", msg) {}
};

struct NonLatticeVertices : Error {
    explicit NonLatticeVertices(const std::string& msg)
        : Error("NonLatticeVertices", msg) {}
};

struct EmptyPolytope : Error {
    explicit EmptyPolytope(const std::string& msg) : Error("EmptyPolytope", msg) {}
};

struct NotValidated : Error {
    explicit NotValidated(const std::string& msg) : Error("NotValidated", msg) {}
};

struct NotComparable : Error {
    explicit NotComparable(const std::string& msg) : Error("NotComparable", msg) {}
};

struct NotALattice : Error {
    explicit NotALattice(const std::string& msg) : Error("NotALattice", msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg)
        : Error("DimensionMismatch", msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("ParseError", msg) {}
};

/// Raised when an operation that computes a value along two independent
/// routes (combinatorial vs. geometric) sees them differ; indicates a bug.
struct InternalDisagreement : Error {
    explicit InternalDisagreement(const std::string& msg)
        : Error("InternalDisagreement", msg) {}
};

}  // namespace matval
