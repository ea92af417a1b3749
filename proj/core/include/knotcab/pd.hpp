// Planar-diagram codes: parsing and validation, oriented crossing signs,
// mirroring, parallel cabling, and state splicing.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "knotcab/errors.hpp"

namespace knotcab {

// Per-crossing smoothing choice for a bracket state.
enum class Splice : std::uint8_t { A = 0, B = 1 };
using SpliceChoice = std::vector<Splice>;

// One crossing X[a,b,c,d]: arc labels listed counterclockwise starting from
// the incoming under-strand.  The under-strand runs a -> c.
struct Crossing {
    std::array<std::uint32_t, 4> slot{};
    int sign = 0; // +1 / -1 once orientation is resolved
    bool operator==(const Crossing&) const = default;
};

class PDCode {
public:
    PDCode() = default;

    // Builds a diagram from raw crossings without knot-level validation
    // (used for cables and synthetic states).  Only the arc-pairing rule is
    // enforced: every label appears exactly twice.
    static PDCode from_crossings(std::vector<Crossing> crossings,
                                 unsigned free_circles = 0,
                                 std::string name = {},
                                 unsigned components = 1);

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    const std::vector<Crossing>& crossings() const { return crossings_; }
    std::size_t crossing_count() const { return crossings_.size(); }
    // Closed unknotted circles carrying no crossings (the 0-crossing unknot
    // has one; an n-cable multiplies them by n).
    unsigned free_circles() const { return free_circles_; }
    unsigned components() const { return components_; }
    bool empty() const { return crossings_.empty() && free_circles_ == 0; }

    int writhe() const; // sum of crossing signs

    // "X[a,b,c,d] X[...] ..." with free circles appended as "O" tokens.
    // Canonical modulo nothing: emitted exactly in stored order.
    std::string canonical_text() const;

private:
    std::vector<Crossing> crossings_;
    unsigned free_circles_ = 0;
    unsigned components_ = 1;
    std::string name_;

    friend PDCode parse_pd(const std::string&);
    friend PDCode mirror(const PDCode&);
    friend PDCode cable(const PDCode&, unsigned);
};

// Parses one knot line: "[name :] X[a,b,c,d] X[...] ...".  A named line with
// an empty crossing list denotes the 0-crossing unknot.  Validates the arc
// labels (1..2c, each exactly twice), the orientation rule succ(a) = c with
// wraparound, resolves crossing signs, and rejects multi-component diagrams.
// Planarity of the code is the caller's responsibility.
PDCode parse_pd(const std::string& line);

// Parses a whole fixture file: one knot per line, '#' starts a comment,
// blank lines ignored.  Unnamed lines get the name "line<N>".
std::vector<PDCode> parse_pd_file(const std::string& text);

// Mirror image: over/under swapped at every crossing, signs negated.
PDCode mirror(const PDCode& d);

// n-strand parallel (blackboard-framed) cable.  cable(d, 1) == d; n == 0
// yields the empty diagram.  Crossing count becomes n^2 * c and every
// sub-crossing inherits its parent's sign, so writhe scales by n^2.
PDCode cable(const PDCode& d, unsigned n);

// Number of circles after smoothing every crossing per the choice
// (choice.size() must equal crossing_count()).
int splice_circles(const PDCode& d, const SpliceChoice& choice);

// True when passages alternate under/over along the strand, i.e. every arc
// label occurs once on an under slot (a or c) and once on an over slot
// (b or d).  The 0-crossing unknot counts as alternating.
bool is_alternating(const PDCode& d);

} // namespace knotcab
