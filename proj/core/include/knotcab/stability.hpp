// Head/tail coefficient extraction for colored Jones values, the
// graph-statistic predictions they are verified against, stabilization
// reports, and census-based volume bound checks.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotcab/bracket.hpp"
#include "knotcab/laurent.hpp"
#include "knotcab/stategraph.hpp"

namespace knotcab {

// Volume of the regular ideal hyperbolic tetrahedron, and the slack used
// when comparing floating-point bound evaluations.
inline constexpr double kIdealTetVolume = 1.0149416;
inline constexpr double kVolumeTolerance = 1e-9;

// The three extreme coefficients at each end of a normalized colored Jones
// value, read on the q = A^4 lattice.  head[i] is the coefficient of
// q^(max-i), tail[i] of q^(min+i); missing slots read as 0.
struct HeadTail {
    unsigned n = 0;
    int q_offset = 0;
    std::int64_t q_min = 0, q_max = 0;
    std::int64_t q_span = 0;
    std::vector<Int> head;
    std::vector<Int> tail;
    bool complete = false; // q_span >= 2: three distinct slots per side
    bool disjoint = false; // q_span >= 5: head and tail windows do not meet
};
// Throws NotOnLattice when exponents are mixed mod 4 and ZeroPolynomial on
// a zero value.
HeadTail head_tail(const ColoredJones& j);

// Predicted extreme coefficients at color n from the state-graph
// statistics.  Head values come from the A side, tail values from the B
// side.  Requires both sides adequate (throws Inapplicable).  The third
// coefficient formulas additionally assume a reduced alternating diagram;
// they are reported with their sign before absolute value, since the
// formula value can be negative.
struct Prediction {
    unsigned n = 0;
    Int head_first, head_second, head_third;
    std::int64_t head_third_signed = 0;
    Int tail_first, tail_second, tail_third;
    std::int64_t tail_third_signed = 0;
    std::int64_t expected_q_span = 0; // C(n,2) * c
};
Prediction predict(const GraphStats& a, const GraphStats& b, unsigned n,
                   std::size_t crossings);

// Signed leading-coefficient law of the reduced bracket of an A-adequate
// diagram: with v, e, mu, theta, tau the A-side statistics and
// M = c + 2v - 2,
//   coeff(M)    = (-1)^(v-1)
//   coeff(M-4)  = (-1)^(v-2) * (e - v + 1)
//   coeff(M-8)  = (-1)^(v-3) * (C(v-1,2) - e(v-2) + mu + C(e,2) - theta - tau)
// Throws Inapplicable when the diagram is not A-adequate.
struct BracketEdgeCheck {
    std::int64_t top_exp = 0;
    Int got_first, got_second, got_third;
    Int want_first, want_second, want_third;
    bool pass = false;
};
BracketEdgeCheck bracket_edge_check(const PDCode& d,
                                    Engine engine = Engine::Auto,
                                    const EngineOptions& opts = {});

struct CensusEntry {
    std::string name;
    std::optional<double> volume;
    bool alternating = false, prime = false, torus = false;
};
// CSV with header "name,volume,alternating,prime,torus"; empty volume
// cells mean unknown.  Throws ParseError on malformed input.
std::vector<CensusEntry> load_census(const std::string& csv_text);
const CensusEntry* find_census(const std::vector<CensusEntry>& census,
                               const std::string& name);

// 2*v0*(max(|b|,|beta|) - 1) <= vol <= 10*v0*(|b| + |beta| - 1).
// Applies to alternating, prime, non-torus knots only: throws Inapplicable
// when the flags rule the knot out and MissingVolume when no volume is
// recorded.
struct VolumeBounds {
    double lower = 0, upper = 0, volume = 0;
    bool pass = false;
};
VolumeBounds volume_bounds(std::size_t b_abs, std::size_t beta_abs,
                           const CensusEntry& entry);

struct CheckResult {
    enum class Status { Pass, Fail, Skipped, Inapplicable };
    std::string id;
    Status status = Status::Pass;
    std::string expected;
    std::string got;
    std::string note;
};
const char* to_string(CheckResult::Status s);

struct VerificationReport {
    std::string name;
    std::size_t crossings = 0;
    bool alternating = false;
    bool reduced_alternating = false; // alternating and adequate on both sides
    GraphStats stats_a, stats_b;
    unsigned n_max = 0;
    std::vector<ColoredJones> jones; // computed colors, ascending n
    std::vector<HeadTail> heads;
    std::vector<CheckResult> checks;
    bool all_passed() const; // no Fail; Skipped/Inapplicable are not failures
};

struct VerifyOptions {
    unsigned n_max = 3;
    Engine engine = Engine::Auto;
    EngineOptions engine_opts;
    const CensusEntry* census = nullptr; // enables the volume-bounds check
    PolyCache* cache = nullptr;
};

// Computes J'(n) for n = 2..n_max and checks every applicable law: span,
// extreme coefficients and their stabilization across colors, sign
// alternation, and (with a census entry) the volume bounds.  Engine
// capacity/time failures mark the affected colors Skipped rather than
// failing the report.
VerificationReport verify_stabilization(const PDCode& d,
                                        const VerifyOptions& vo);

} // namespace knotcab
