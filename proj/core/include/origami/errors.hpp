#pragma once

#include <stdexcept>
#include <string>

namespace origami {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A supplied image array is not a bijection.
struct NotBijection : Error {
    using Error::Error;
};

// The pair (h, v) does not act transitively on the squares.
struct NotConnected : Error {
    using Error::Error;
};

// An automorphism candidate fails its defining conjugation relations.
struct RelationViolated : Error {
    using Error::Error;
};

// A collection of automorphisms is not closed under composition.
struct NotClosed : Error {
    using Error::Error;
};

// A claimed subgroup is not one.
struct NotSubgroup : Error {
    using Error::Error;
};

// A quotient was requested by a group that does not act freely on squares.
struct NotFreeOnSquares : Error {
    using Error::Error;
};

// A construction requires a point that is not 2-torsion.
struct TwoTorsionInput : Error {
    using Error::Error;
};

// Polynomial root refinement failed its residual acceptance test.
struct RootFindingDiverged : Error {
    using Error::Error;
};

// A numeric evaluation failed to meet its accuracy budget.
struct ConvergenceBudgetExceeded : Error {
    using Error::Error;
};

// The family parameter sits at a degenerate value (0 or 1).
struct DegenerateLambda : Error {
    using Error::Error;
};

// A point expected to lie on a curve does not, within tolerance.
struct OffCurve : Error {
    using Error::Error;
};

// A labeling operation was called for a point of the wrong case.
struct WrongCase : Error {
    using Error::Error;
};

// A double cover built from an edge labeling is disconnected.
struct Disconnected : Error {
    using Error::Error;
};

// The candidate scan did not isolate exactly one admissible cover.
struct UniquenessViolated : Error {
    using Error::Error;
};

// Malformed textual input.
struct ParseError : Error {
    using Error::Error;
};

} // namespace origami
