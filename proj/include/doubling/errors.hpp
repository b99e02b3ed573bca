#pragma once

#include <stdexcept>
#include <string>

namespace doubling {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

struct NonTerminating : Error { using Error::Error; };
struct DenominatorPole : Error { using Error::Error; };
struct FamilyMismatch : Error { using Error::Error; };
struct DegreeOutOfRange : Error { using Error::Error; };
struct ZeroAtNu : Error { using Error::Error; };
struct SupportCollision : Error { using Error::Error; };
struct InadmissibleParams : Error { using Error::Error; };
struct NegativeProduct : Error { using Error::Error; };
struct UnsupportedPoint : Error { using Error::Error; };
struct Unsupported : Error { using Error::Error; };

struct NoConvergence : Error {
    NoConvergence(const std::string& what, std::string matrix)
        : Error(what), matrix_dump(std::move(matrix)) {}
    // Matrix Market text of the matrix that failed, for reproduction.
    std::string matrix_dump;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

}  // namespace doubling
