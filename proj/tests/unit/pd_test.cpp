#include <doctest.h>

#include "helpers.hpp"
#include "knotcab/errors.hpp"
#include "knotcab/pd.hpp"

using namespace knotcab;

TEST_CASE("trefoil line parses with all-negative signs") {
    auto d = parse_pd("3_1 : X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
    CHECK(d.name() == "3_1");
    REQUIRE(d.crossing_count() == 3);
    CHECK(d.free_circles() == 0);
    CHECK(d.components() == 1);
    CHECK_FALSE(d.empty());
    for (const auto& x : d.crossings()) CHECK(x.sign == -1);
    CHECK(d.writhe() == -3);
    CHECK(is_alternating(d));
    CHECK(d.crossings()[0].slot == std::array<std::uint32_t, 4>{1, 4, 2, 5});
}

TEST_CASE("unknot line: a name with no crossings is one free circle") {
    auto d = parse_pd("0_1 :");
    CHECK(d.name() == "0_1");
    CHECK(d.crossing_count() == 0);
    CHECK(d.free_circles() == 1);
    CHECK_FALSE(d.empty());
    CHECK(d.writhe() == 0);
    CHECK(is_alternating(d));
}

TEST_CASE("one-crossing kinks resolve their signs from the wraparound rule") {
    auto pos = parse_pd("X[1,1,2,2]");
    REQUIRE(pos.crossing_count() == 1);
    CHECK(pos.crossings()[0].sign == +1);
    CHECK(pos.writhe() == 1);

    auto neg = parse_pd("X[1,2,2,1]");
    CHECK(neg.crossings()[0].sign == -1);
    CHECK(neg.writhe() == -1);
}

TEST_CASE("parse rejects malformed lines") {
    CHECK_THROWS_AS(parse_pd(""), ParseError);
    CHECK_THROWS_AS(parse_pd("3_1 :  junk"), ParseError);
    CHECK_THROWS_AS(parse_pd("X[1,4,2]"), ParseError);
    CHECK_THROWS_AS(parse_pd("X[1,4,2,5,9]"), ParseError);
    CHECK_THROWS_AS(parse_pd("X[a,b,c,d]"), ParseError);
    CHECK_THROWS_AS(parse_pd("Y[1,4,2,5]"), ParseError);
}

TEST_CASE("parse rejects bad arc labelings") {
    // label 7 out of range for a 3-crossing diagram
    CHECK_THROWS_AS(parse_pd("X[1,4,2,7] X[3,6,4,1] X[5,2,6,3]"), LabelError);
    // label 0 is not a valid arc
    CHECK_THROWS_AS(parse_pd("X[0,1,1,2]"), LabelError);
    // a label used three times
    CHECK_THROWS_AS(parse_pd("X[1,1,2,1]"), LabelError);
    // each label must appear exactly twice
    CHECK_THROWS_AS(parse_pd("X[1,2,3,4]"), LabelError);
}

TEST_CASE("parse rejects an under-strand that skips a label") {
    // c must be a+1 (mod 2c): here the under-strand jumps 4 -> 1
    CHECK_THROWS_AS(parse_pd("X[4,2,1,5] X[3,6,4,1] X[5,2,6,3]"), ParseError);
}

TEST_CASE("parse rejects split diagrams") {
    // two disjoint kinks wearing one label range
    CHECK_THROWS_AS(parse_pd("X[1,1,2,2] X[3,3,4,4]"), MultiComponent);
}

TEST_CASE("mirror swaps over and under") {
    auto d = parse_pd("3_1 : X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
    auto m = mirror(d);
    CHECK(m.name() == "3_1!");
    CHECK(m.writhe() == +3);
    for (const auto& x : m.crossings()) CHECK(x.sign == +1);
    CHECK(is_alternating(m));
    // involution restores the crossings and cancels the name mark
    auto mm = mirror(m);
    CHECK(mm.crossings() == d.crossings());
    CHECK(mm.name() == "3_1");
    CHECK(mm.writhe() == -3);
}

TEST_CASE("cable laws") {
    auto d = parse_pd("3_1 : X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
    CHECK(cable(d, 0).empty());
    auto c1 = cable(d, 1);
    CHECK(c1.crossings() == d.crossings());
    CHECK(c1.free_circles() == 0);
    for (unsigned n = 2; n <= 4; ++n) {
        auto cn = cable(d, n);
        CHECK(cn.crossing_count() == n * n * d.crossing_count());
        CHECK(cn.writhe() == int(n * n) * d.writhe());
        CHECK(cn.components() == n);
        CHECK(cn.free_circles() == 0);
        for (const auto& x : cn.crossings()) CHECK(x.sign == -1);
    }
    // cabling the 0-crossing unknot multiplies its free circles
    auto u3 = cable(parse_pd("0_1 :"), 3);
    CHECK(u3.crossing_count() == 0);
    CHECK(u3.free_circles() == 3);
    CHECK(u3.components() == 3);
}

TEST_CASE("splice circle counts on the trefoil") {
    auto d = parse_pd("3_1 : X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
    using enum Splice;
    CHECK(splice_circles(d, {A, A, A}) == 3);
    CHECK(splice_circles(d, {B, B, B}) == 2);
    CHECK(splice_circles(d, {B, A, A}) == 2);
    CHECK(splice_circles(d, {A, B, A}) == 2);
    CHECK(splice_circles(d, {A, A, B}) == 2);
    CHECK(splice_circles(d, {A, B, B}) == 1);
    CHECK(splice_circles(d, {B, A, B}) == 1);
    CHECK(splice_circles(d, {B, B, A}) == 1);
    CHECK_THROWS_AS(splice_circles(d, {A, A}), Error);
}

TEST_CASE("splicing a kink") {
    auto pos = parse_pd("X[1,1,2,2]");
    using enum Splice;
    CHECK(splice_circles(pos, {A}) == 2);
    CHECK(splice_circles(pos, {B}) == 1);
    // free circles ride along untouched
    auto with_free = PDCode::from_crossings(pos.crossings(), 2, "k");
    CHECK(splice_circles(with_free, {A}) == 4);
}

TEST_CASE("canonical text round-trips through the parser") {
    auto knots = testutil::load_knots();
    REQUIRE(knots.size() >= 20);
    for (const auto& d : knots) {
        if (d.crossing_count() == 0) continue;
        auto back = parse_pd(d.name() + " : " + d.canonical_text());
        CHECK(back.crossings() == d.crossings());
        CHECK(back.writhe() == d.writhe());
    }
}

TEST_CASE("fixture knots are alternating; the doctored synthetic one is not") {
    for (const auto& d : testutil::load_knots()) CHECK(is_alternating(d));
    auto synth = testutil::load_synthetic();
    CHECK(is_alternating(testutil::by_name(synth, "kink_pos")));
    CHECK(is_alternating(testutil::by_name(synth, "kink_neg")));
    CHECK_FALSE(is_alternating(testutil::by_name(synth, "inadq")));
}

TEST_CASE("whole-file parsing: comments, blanks, autonaming") {
    auto v = parse_pd_file("# header\n\n3_1 : X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\n"
                           "X[1,1,2,2]   # trailing comment\n");
    REQUIRE(v.size() == 2);
    CHECK(v[0].name() == "3_1");
    CHECK(v[1].name() == "line4");
    CHECK(v[1].crossing_count() == 1);
}

TEST_CASE("from_crossings enforces only label pairing") {
    std::vector<Crossing> xs{{{1, 2, 3, 4}, 0}};
    CHECK_THROWS_AS(PDCode::from_crossings(xs), LabelError);
    // a bracket state ignores orientation, so succ-rule violations are fine
    std::vector<Crossing> ok{{{1, 2, 1, 2}, 0}};
    auto d = PDCode::from_crossings(ok, 1, "st", 2);
    CHECK(d.crossing_count() == 1);
    CHECK(d.free_circles() == 1);
    CHECK(d.components() == 2);
}
