#include <eulerprod/errors.hpp>

namespace eulerprod {

const char *kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ConstantTermNotOne: return "ConstantTermNotOne";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonIntegerResult: return "NonIntegerResult";
    case ErrorKind::BoundViolation: return "BoundViolation";
    case ErrorKind::AmbiguousRoot: return "AmbiguousRoot";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::PoleAtOne: return "PoleAtOne";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::NotInDomain: return "NotInDomain";
    case ErrorKind::NotAbsolutelyConvergent: return "NotAbsolutelyConvergent";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::TailNotControlled: return "TailNotControlled";
    case ErrorKind::NoEPrime: return "NoEPrime";
    case ErrorKind::GenericityExhausted: return "GenericityExhausted";
    case ErrorKind::MultipleRootDetected: return "MultipleRootDetected";
    case ErrorKind::ArgDegenerate: return "ArgDegenerate";
    case ErrorKind::NoBranchInsideDisk: return "NoBranchInsideDisk";
    case ErrorKind::NewtonDiverged: return "NewtonDiverged";
    case ErrorKind::DegenerateFaceFound: return "DegenerateFaceFound";
    case ErrorKind::InfeasibleFace: return "InfeasibleFace";
    case ErrorKind::SchemaViolation: return "SchemaViolation";
    }
    return "Unknown";
}

bool is_input_error(ErrorKind k)
{
    switch (k) {
    case ErrorKind::SyntaxError:
    case ErrorKind::ConstantTermNotOne:
    case ErrorKind::ZeroPolynomial:
    case ErrorKind::InvalidArgument:
    case ErrorKind::PoleAtOne:
    case ErrorKind::NotInDomain:
    case ErrorKind::NotAbsolutelyConvergent:
    case ErrorKind::PoleHit:
    case ErrorKind::TailNotControlled:
    case ErrorKind::InfeasibleFace:
    case ErrorKind::SearchExhausted:
        return true;
    default:
        return false;
    }
}

Error::Error(ErrorKind k, const std::string &msg)
    : std::runtime_error(std::string(kind_name(k)) + ": " + msg), kind_(k)
{
}

SyntaxError::SyntaxError(std::size_t pos, const std::string &expected)
    : Error(ErrorKind::SyntaxError, "at position " + std::to_string(pos) + ", expected " + expected),
      pos_(pos), expected_(expected)
{
}

} // namespace eulerprod
