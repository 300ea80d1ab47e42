#pragma once

#include <stdexcept>
#include <string>

namespace eulerprod {

enum class ErrorKind {
    SyntaxError,
    ConstantTermNotOne,
    ZeroPolynomial,
    InvalidArgument,
    NonIntegerResult,
    BoundViolation,
    AmbiguousRoot,
    SearchExhausted,
    PoleAtOne,
    ConvergenceFailure,
    NotInDomain,
    NotAbsolutelyConvergent,
    PoleHit,
    TailNotControlled,
    NoEPrime,
    GenericityExhausted,
    MultipleRootDetected,
    ArgDegenerate,
    NoBranchInsideDisk,
    NewtonDiverged,
    DegenerateFaceFound,
    InfeasibleFace,
    SchemaViolation,
};

const char *kind_name(ErrorKind k);

// Input errors map to exit code 2, everything else signals a broken invariant.
bool is_input_error(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind k, const std::string &msg);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t pos, const std::string &expected);
    std::size_t position() const noexcept { return pos_; }
    const std::string &expected() const noexcept { return expected_; }

private:
    std::size_t pos_;
    std::string expected_;
};

} // namespace eulerprod
