// Error types shared across the library.  Every failure mode callers are
// expected to handle gets its own type so tests and the CLI can match on it.
#pragma once

#include <stdexcept>
#include <string>

namespace knotcab {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Exact division requested but the divisor does not divide the dividend.
struct NotDivisible : Error {
    explicit NotDivisible(const std::string& msg) : Error(msg) {}
};

// Span (or degree) of the zero polynomial requested.
struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& msg) : Error(msg) {}
};

// Polynomial exponents are not congruent mod 4, so there is no q-form.
struct NotOnLattice : Error {
    explicit NotOnLattice(const std::string& msg) : Error(msg) {}
};

// Malformed input text (grammar, arity, orientation violations).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Arc labels fail the exactly-twice / contiguous-range requirement.
struct LabelError : ParseError {
    explicit LabelError(const std::string& msg) : ParseError(msg) {}
};

// Diagram describes a link with more than one component.
struct MultiComponent : Error {
    explicit MultiComponent(const std::string& msg) : Error(msg) {}
};

// Input exceeds a hard size cap for the selected engine.
struct TooLarge : Error {
    explicit TooLarge(const std::string& msg) : Error(msg) {}
};

// Frontier engine's live-state table exceeded its cap.
struct FrontierTooWide : TooLarge {
    explicit FrontierTooWide(const std::string& msg) : TooLarge(msg) {}
};

// Engine gave up against a configured time budget.
struct EngineLimit : Error {
    explicit EngineLimit(const std::string& msg) : Error(msg) {}
};

// Requested check does not apply to this input (e.g. inadequate diagram,
// torus knot in a hyperbolic-volume check).
struct Inapplicable : Error {
    explicit Inapplicable(const std::string& msg) : Error(msg) {}
};

// Census lookup failed: knot not listed or volume missing.
struct MissingVolume : Error {
    explicit MissingVolume(const std::string& msg) : Error(msg) {}
};

} // namespace knotcab
