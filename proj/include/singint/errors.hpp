#pragma once

#include <stdexcept>
#include <string>

namespace singint {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Root finder ran out of iterations on an ill-conditioned input.
struct NonConvergence : Error {
    using Error::Error;
};

struct ZeroPolynomial : Error {
    using Error::Error;
};

// Combinatorial enumeration guard tripped (use the greedy path instead).
struct TooLarge : Error {
    using Error::Error;
};

// An exponent pair hit one of the excluded lines nu*eps + 2 = (N-k)*delta.
struct Degenerate : Error {
    using Error::Error;
};

struct DegenerateExponents : Error {
    using Error::Error;
};

struct RootsOutsideHalfDisk : Error {
    using Error::Error;
};

struct MultipleRoots : Error {
    using Error::Error;
};

struct RangeViolation : Error {
    using Error::Error;
};

struct ScaleOrderViolation : Error {
    using Error::Error;
};

struct NormConditionViolated : Error {
    using Error::Error;
};

struct NormGateViolated : Error {
    using Error::Error;
};

struct NoStabilization : Error {
    using Error::Error;
};

struct OracleBudgetExhausted : Error {
    using Error::Error;
};

struct MixedFinitenessDisagreement : Error {
    using Error::Error;
};

struct ZeroGerm : Error {
    using Error::Error;
};

struct AllZero : Error {
    using Error::Error;
};

struct NoFiniteOrder : Error {
    using Error::Error;
};

struct RootCountMismatch : Error {
    using Error::Error;
};

struct BracketInvalid : Error {
    using Error::Error;
};

struct BaseDiverges : Error {
    using Error::Error;
};

struct CaseNotCovered : Error {
    using Error::Error;
};

}  // namespace singint
