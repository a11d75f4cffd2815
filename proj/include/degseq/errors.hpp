#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace degseq {

// Base of all library errors. `code()` is a stable machine-readable tag; the
// CLI copies it verbatim into its JSON error envelope.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Malformed or out-of-range argument values.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error("DomainError", what) {}
};

// An objective had to be convex for the requested algorithm but is not.
struct NotConvexError : Error {
    explicit NotConvexError(const std::string& what) : Error("NotConvex", what) {}
};

// More edges requested than the structure can hold (e.g. m > C(n,k) simple edges).
struct InfeasibleCountError : Error {
    explicit InfeasibleCountError(const std::string& what) : Error("InfeasibleCount", what) {}
};

// An enumeration or search would exceed its configured cap; fail fast instead
// of grinding.
struct EnumerationCapError : Error {
    explicit EnumerationCapError(const std::string& what) : Error("EnumerationCapExceeded", what) {}
};

// Matrix shapes do not line up.
struct DimensionError : Error {
    explicit DimensionError(const std::string& what) : Error("DimensionError", what) {}
};

// A sum that must split into equal triples does not divide by 3.
struct NotDivisibleError : Error {
    explicit NotDivisibleError(const std::string& what) : Error("NotDivisible", what) {}
};

} // namespace degseq
