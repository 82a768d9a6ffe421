// Shared scalar types and error codes.
#pragma once

#include <stdexcept>
#include <string>
#include <boost/multiprecision/cpp_int.hpp>

namespace hopfmu {

// All algebra is exact: arbitrary-precision integers and rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using VertexId = int;

enum class Err {
    DuplicateVertexInFacet,
    NonMaximalFacet,
    UnknownVertex,
    UnknownComplex,
    SimplexNotInComplex,
    TriangleNotInComplex,
    NotMaximal,
    NotOriented,
    NotACoboundary,
    NotHomologySphere,
    DegenerateTetra,
    TriangleMismatch,
    OpenChain,
    ConditionNotMet,
    PartitionInconsistent,
    TheoremViolation,
    ConstructionInvariantFailed,
    SyntaxError,
    UnmappedVertex,
    PreconditionFailed,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

} // namespace hopfmu
