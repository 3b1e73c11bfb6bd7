#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace consim {

// Base error carrying a stable machine-readable code alongside the message.
// Codes are part of the CLI contract (they appear in the JSON error output).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Dimension or block-layout mismatch.
struct ShapeError : Error {
    explicit ShapeError(const std::string& what) : Error("shape", what) {}
};

// Inversion of a singular matrix, or a witness that must be nonsingular is not.
struct SingularError : Error {
    explicit SingularError(const std::string& what) : Error("singular", what) {}
};

// A stated precondition between operations failed (e.g. a matrix handed to a
// witness extractor is not in the commutant it claims to belong to).
struct ContractError : Error {
    explicit ContractError(const std::string& what) : Error("contract", what) {}
};

// A user-supplied partition cannot host a requested encoding.
struct CapacityError : Error {
    explicit CapacityError(const std::string& what) : Error("capacity", what) {}
};

// Invalid domain value (bad partition, bad arrow endpoint, ...).
struct ValueError : Error {
    explicit ValueError(const std::string& what) : Error("value", what) {}
};

// Malformed input text or JSON not matching the documented schemas.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse", what) {}
};

}  // namespace consim
