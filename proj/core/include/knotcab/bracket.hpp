// Bracket state sums: a naive full-enumeration engine (the oracle), a
// frontier contraction engine for larger inputs, and the cabled combinations
// that produce colored Jones polynomials.
#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>

#include "knotcab/laurent.hpp"
#include "knotcab/pd.hpp"

namespace knotcab {

enum class BracketConvention { Reduced, Unreduced };

// A bracket result plus the convention it is expressed in.  Reduced means
// the unknot evaluates to 1; unreduced means the empty diagram evaluates to
// 1 and every circle contributes a factor delta = -A^2 - A^-2.
struct BracketValue {
    LaurentPoly poly;
    BracketConvention convention = BracketConvention::Unreduced;

    // Conversions are exact: unreduced = delta * reduced for any nonempty
    // diagram.  Reducing the empty diagram's bracket throws NotDivisible.
    LaurentPoly reduced() const;
    LaurentPoly unreduced() const;
};

enum class Engine { Auto, Naive, Frontier };

struct EngineOptions {
    // The naive engine refuses diagrams with more crossings than this.
    std::size_t naive_cap = 16;
    // The frontier engine throws FrontierTooWide past this many live
    // boundary pairings.
    std::size_t frontier_cap = 1'000'000;
    // Optional cooperative deadline; engines throw EngineLimit when past it.
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Full 2^c enumeration.  Exact and simple; the reference the other engine
// is checked against.  Throws TooLarge above opts.naive_cap crossings.
BracketValue bracket_naive(const PDCode& d, const EngineOptions& opts = {});

// Sweeps the crossings in a width-minimizing order, maintaining a weighted
// table of boundary-arc pairings.  Exact; handles cables far beyond the
// naive cap.  Throws FrontierTooWide / EngineLimit per the options.
BracketValue bracket_frontier(const PDCode& d, const EngineOptions& opts = {});

// Engine dispatch.  Auto runs the naive engine for small diagrams and
// cross-checks the frontier engine against it on the spot (the oracle stays
// in the loop on every small run); above the naive cap it uses the frontier
// engine alone.
BracketValue bracket(const PDCode& d, Engine engine = Engine::Auto,
                     const EngineOptions& opts = {});

// Reduced-convention bracket of the diagram.
LaurentPoly bracket_reduced(const PDCode& d, Engine engine = Engine::Auto,
                            const EngineOptions& opts = {});

// Memo for unreduced cable brackets: k -> <<cable(d, k)>>.  Caller-owned so
// several colors of the same knot can share the expensive cabling work.
using CableBracketMemo = std::map<unsigned, LaurentPoly>;

// Unreduced bracket of the Chebyshev combination S_m applied to the
// diagram: sum over k of chebyshev(m).coeffs[k] * <<cable(d, k)>>, where
// cable(d, 0) is the empty diagram.
LaurentPoly bracket_combination(const PDCode& d, unsigned m,
                                Engine engine = Engine::Auto,
                                const EngineOptions& opts = {},
                                CableBracketMemo* memo = nullptr);

class PolyCache; // cache.hpp

// Colored Jones polynomial of a knot at color n >= 1 (n = 2 is the
// classical Jones polynomial after q = A^4).
struct ColoredJones {
    std::string name;
    unsigned n = 1;
    int writhe = 0;
    LaurentPoly unnormalized; // value [n] on the unknot
    LaurentPoly normalized;   // unnormalized / [n], value 1 on the unknot
};
ColoredJones colored_jones(const PDCode& d, unsigned n,
                           Engine engine = Engine::Auto,
                           const EngineOptions& opts = {},
                           CableBracketMemo* memo = nullptr,
                           PolyCache* cache = nullptr);

} // namespace knotcab
