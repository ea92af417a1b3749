#include <doctest.h>

#include <cmath>
#include <string>

#include "helpers.hpp"
#include "knotcab/bracket.hpp"
#include "knotcab/errors.hpp"
#include "knotcab/stability.hpp"

using namespace knotcab;

namespace {

LaurentPoly make(std::initializer_list<std::pair<std::int64_t, long>> terms) {
    std::vector<LaurentPoly::Term> ts;
    for (auto& [e, c] : terms) ts.push_back({e, Int(c)});
    return LaurentPoly::from_terms(std::move(ts));
}

std::vector<Int> ints(std::initializer_list<long> v) {
    return std::vector<Int>(v.begin(), v.end());
}

const CensusEntry& fixture_census_entry(const std::string& name) {
    static const auto census =
        load_census(testutil::slurp(testutil::fixtures_dir() + "/census.csv"));
    const CensusEntry* e = find_census(census, name);
    REQUIRE(e != nullptr);
    return *e;
}

} // namespace

TEST_CASE("extreme coefficient windows of the trefoil") {
    auto tre = testutil::by_name(testutil::load_knots(), "3_1");

    auto h2 = head_tail(colored_jones(tre, 2));
    CHECK(h2.n == 2);
    CHECK(h2.q_offset == 0);
    CHECK(h2.q_min == 1);
    CHECK(h2.q_max == 4);
    CHECK(h2.q_span == 3);
    CHECK(h2.head == ints({-1, 1, 0}));
    CHECK(h2.tail == ints({1, 0, 1}));
    CHECK(h2.complete);
    CHECK_FALSE(h2.disjoint); // windows overlap at span 3

    auto h3 = head_tail(colored_jones(tre, 3));
    CHECK(h3.q_min == 2);
    CHECK(h3.q_max == 11);
    CHECK(h3.q_span == 9);
    CHECK(h3.head == ints({1, -1, -1}));
    CHECK(h3.tail == ints({1, 0, 0}));
    CHECK(h3.disjoint);
}

TEST_CASE("extreme coefficient windows of the figure-eight") {
    auto fig8 = testutil::by_name(testutil::load_knots(), "4_1");
    auto h2 = head_tail(colored_jones(fig8, 2));
    CHECK(h2.q_min == -2);
    CHECK(h2.q_max == 2);
    CHECK(h2.q_span == 4);
    CHECK(h2.head == ints({1, -1, 1}));
    CHECK(h2.tail == ints({1, -1, 1}));
    CHECK_FALSE(h2.disjoint);
    auto h3 = head_tail(colored_jones(fig8, 3));
    CHECK(h3.q_span == 12);
    CHECK(h3.head == ints({1, -1, -1}));
    CHECK(h3.tail == ints({1, -1, -1}));
    CHECK(h3.disjoint);
}

TEST_CASE("degenerate and invalid head/tail inputs") {
    auto u = head_tail(colored_jones(parse_pd("0_1 :"), 2));
    CHECK(u.q_span == 0);
    CHECK_FALSE(u.complete);
    CHECK(u.head == ints({1, 0, 0}));
    CHECK(u.tail == ints({1, 0, 0}));

    ColoredJones zero;
    zero.n = 2;
    CHECK_THROWS_AS(head_tail(zero), ZeroPolynomial);

    ColoredJones off_lattice;
    off_lattice.n = 2;
    off_lattice.normalized = make({{0, 1}, {1, 1}});
    CHECK_THROWS_AS(head_tail(off_lattice), NotOnLattice);
}

TEST_CASE("coefficient predictions from graph statistics") {
    auto knots = testutil::load_knots();
    auto tre = testutil::by_name(knots, "3_1");
    auto a = stats(tre, Splice::A);
    auto b = stats(tre, Splice::B);

    auto p2 = predict(a, b, 2, tre.crossing_count());
    CHECK(p2.head_first == 1);
    CHECK(p2.head_second == 1);
    CHECK(p2.head_third_signed == 0); // C(2,2) + mu - tau = 1 + 0 - 1
    CHECK(p2.tail_second == 0);
    CHECK(p2.tail_third_signed == 1); // C(1,2) + 1 - 0
    CHECK(p2.expected_q_span == 3);

    auto p3 = predict(a, b, 3, tre.crossing_count());
    CHECK(p3.head_third_signed == -1); // C(1,2) - tau: the raw value is negative
    CHECK(p3.head_third == 1);
    CHECK(p3.tail_third_signed == 0);
    CHECK(p3.expected_q_span == 9);

    CHECK_THROWS_AS(predict(a, b, 1, 3), Error);
    auto synth = testutil::load_synthetic();
    auto bad = testutil::by_name(synth, "inadq");
    CHECK_THROWS_AS(
        predict(stats(bad, Splice::A), stats(bad, Splice::B), 2, 3),
        Inapplicable);
    auto kink = testutil::by_name(synth, "kink_pos");
    CHECK_THROWS_AS(
        predict(stats(kink, Splice::A), stats(kink, Splice::B), 2, 1),
        Inapplicable);
}

TEST_CASE("predictions match the computed windows on the twelve-crossing pair") {
    auto knots = testutil::load_knots();
    for (const char* name : {"12a217", "12a1228"}) {
        auto d = testutil::by_name(knots, name);
        CAPTURE(name);
        auto a = stats(d, Splice::A);
        auto b = stats(d, Splice::B);

        auto p2 = predict(a, b, 2, d.crossing_count());
        CHECK(p2.head_second == 4);
        CHECK(p2.head_third_signed == 8); // C(5,2) + mu - tau, equal for both
        CHECK(p2.tail_third_signed == 9); // C(5,2) + 1 - 2 on the other side
        auto h2 = head_tail(colored_jones(d, 2));
        CHECK(h2.q_span == p2.expected_q_span);
        CHECK(h2.head == ints({-1, 4, -8}));
        CHECK(h2.tail == ints({-1, 4, -9}));
    }
    // at color 3 the third coefficients separate the pair
    auto p217 = testutil::by_name(knots, "12a217");
    auto p1228 = testutil::by_name(knots, "12a1228");
    auto pa = predict(stats(p217, Splice::A), stats(p217, Splice::B), 3,
                      p217.crossing_count());
    auto qa = predict(stats(p1228, Splice::A), stats(p1228, Splice::B), 3,
                      p1228.crossing_count());
    CHECK(pa.head_third_signed == 2); // C(4,2) - 4
    CHECK(qa.head_third_signed == 3); // C(4,2) - 3
    auto h217 = head_tail(colored_jones(p217, 3));
    auto h1228 = head_tail(colored_jones(p1228, 3));
    CHECK(h217.head == ints({1, -4, 2}));
    CHECK(h1228.head == ints({1, -4, 3}));
    CHECK(h217.tail == h1228.tail);
}

TEST_CASE("leading-coefficient law of the reduced bracket") {
    auto knots = testutil::load_knots();

    auto r3 = bracket_edge_check(testutil::by_name(knots, "3_1"));
    CHECK(r3.top_exp == 7);
    CHECK(r3.got_first == 1);
    CHECK(r3.got_second == -1);
    CHECK(r3.got_third == 0);
    CHECK(r3.pass);

    auto r4 = bracket_edge_check(testutil::by_name(knots, "4_1"));
    CHECK(r4.top_exp == 8);
    CHECK(r4.got_first == 1);
    CHECK(r4.got_second == -1);
    CHECK(r4.got_third == 1);
    CHECK(r4.pass);

    auto r12 = bracket_edge_check(testutil::by_name(knots, "12a217"));
    CHECK(r12.top_exp == 22);
    CHECK(r12.got_first == -1);
    CHECK(r12.got_second == 4);
    CHECK(r12.got_third == -8);
    CHECK(r12.pass);

    auto synth = testutil::load_synthetic();
    auto rk = bracket_edge_check(testutil::by_name(synth, "kink_pos"));
    CHECK(rk.top_exp == 3);
    CHECK(rk.got_first == -1);
    CHECK(rk.pass);
    CHECK_THROWS_AS(bracket_edge_check(testutil::by_name(synth, "kink_neg")),
                    Inapplicable);

    // the law holds on every adequate alternating fixture
    for (const auto& d : knots) {
        if (d.crossing_count() == 0 || d.crossing_count() > 10) continue;
        CAPTURE(d.name());
        CHECK(bracket_edge_check(d).pass);
    }
}

TEST_CASE("census parsing") {
    auto census = load_census("name,volume,alternating,prime,torus\n"
                              "# comment line\n"
                              "4_1,2.0298832,1,1,0\n"
                              "3_1,,true,true,true\n"
                              "weird, 1.5 ,0,1,0\n");
    REQUIRE(census.size() == 3);
    CHECK(census[0].name == "4_1");
    REQUIRE(census[0].volume.has_value());
    CHECK(*census[0].volume == doctest::Approx(2.0298832));
    CHECK(census[0].alternating);
    CHECK(census[0].prime);
    CHECK_FALSE(census[0].torus);
    CHECK_FALSE(census[1].volume.has_value());
    CHECK(census[1].torus);
    CHECK(*census[2].volume == doctest::Approx(1.5));
    CHECK_FALSE(census[2].alternating);

    CHECK(find_census(census, "4_1") == &census[0]);
    CHECK(find_census(census, "nope") == nullptr);

    CHECK_THROWS_AS(load_census("a,1.0,maybe,1,0\n"), ParseError);
    CHECK_THROWS_AS(load_census("a,abc,1,1,0\n"), ParseError);
    CHECK_THROWS_AS(load_census(",1.0,1,1,0\n"), ParseError);
}

TEST_CASE("volume bounds: evaluation, gates, and tolerance") {
    const auto& fig8 = fixture_census_entry("4_1");
    auto vb = volume_bounds(1, 1, fig8);
    CHECK(vb.lower == doctest::Approx(0.0));
    CHECK(vb.upper == doctest::Approx(10.149416));
    CHECK(vb.volume == doctest::Approx(2.02988321281931));
    CHECK(vb.pass);

    auto vb12 = volume_bounds(4, 4, fixture_census_entry("12a217"));
    CHECK(vb12.lower == doctest::Approx(6.0896496));
    CHECK(vb12.upper == doctest::Approx(71.045912));
    CHECK(vb12.pass);

    CHECK_THROWS_AS(volume_bounds(1, 1, fixture_census_entry("3_1")),
                    Inapplicable); // torus
    CHECK_THROWS_AS(volume_bounds(1, 1, fixture_census_entry("0_1")),
                    Inapplicable); // non-prime
    CHECK_THROWS_AS(volume_bounds(2, 2, fixture_census_entry("7_2")),
                    MissingVolume);
    CensusEntry nonalt{"x", 3.0, false, true, false};
    CHECK_THROWS_AS(volume_bounds(2, 2, nonalt), Inapplicable);

    // tolerance window around the upper bound
    CensusEntry near{"y", 0.0, true, true, false};
    const double upper = 10.0 * kIdealTetVolume; // b = beta = 1
    near.volume = upper + 0.5e-9;
    CHECK(volume_bounds(1, 1, near).pass);
    near.volume = upper + 2e-9;
    CHECK_FALSE(volume_bounds(1, 1, near).pass);
    // and around the lower bound
    const double lower = 2.0 * kIdealTetVolume; // max(b, beta) = 2
    near.volume = lower - 0.5e-9;
    CHECK(volume_bounds(2, 1, near).pass);
    near.volume = lower - 2e-9;
    CHECK_FALSE(volume_bounds(2, 1, near).pass);
}

TEST_CASE("status labels") {
    CHECK(std::string(to_string(CheckResult::Status::Pass)) == "PASS");
    CHECK(std::string(to_string(CheckResult::Status::Fail)) == "FAIL");
    CHECK(std::string(to_string(CheckResult::Status::Skipped)) == "SKIPPED");
    CHECK(std::string(to_string(CheckResult::Status::Inapplicable)) ==
          "INAPPLICABLE");
}

TEST_CASE("full verification of the figure-eight across four colors") {
    auto fig8 = testutil::by_name(testutil::load_knots(), "4_1");
    VerifyOptions vo;
    vo.n_max = 4;
    auto r = verify_stabilization(fig8, vo);
    CHECK(r.name == "4_1");
    CHECK(r.crossings == 4);
    CHECK(r.alternating);
    CHECK(r.reduced_alternating);
    CHECK(r.n_max == 4);
    CHECK(r.jones.size() == 3);
    CHECK(r.heads.size() == 3);
    CHECK(r.all_passed());
    CHECK(r.checks.size() == 34);
    for (const auto& c : r.checks) {
        CAPTURE(c.id);
        CHECK(c.status == CheckResult::Status::Pass);
    }

    // adding a census entry appends exactly the volume check
    vo.census = &fixture_census_entry("4_1");
    auto rc = verify_stabilization(fig8, vo);
    CHECK(rc.checks.size() == 35);
    CHECK(rc.checks.back().id == "volume-bounds");
    CHECK(rc.checks.back().status == CheckResult::Status::Pass);
    CHECK(rc.all_passed());
}

TEST_CASE("verification marks engine limits as skips, not failures") {
    auto fig8 = testutil::by_name(testutil::load_knots(), "4_1");
    VerifyOptions vo;
    vo.n_max = 3;
    vo.engine = Engine::Frontier;
    vo.engine_opts.frontier_cap = 1;
    auto r = verify_stabilization(fig8, vo);
    CHECK(r.all_passed());
    CHECK(r.jones.empty());
    int skipped = 0;
    for (const auto& c : r.checks)
        if (c.status == CheckResult::Status::Skipped) ++skipped;
    CHECK(skipped == 2); // jones(2) hit the cap; jones(3) was not attempted
    CHECK(r.checks.back().note.find("frontier") != std::string::npos);
}

TEST_CASE("verification degrades gracefully off the adequate/alternating path") {
    VerifyOptions vo;
    vo.n_max = 2;
    auto bad = testutil::by_name(testutil::load_synthetic(), "inadq");
    auto r = verify_stabilization(bad, vo);
    CHECK_FALSE(r.alternating);
    CHECK_FALSE(r.reduced_alternating);
    CHECK(r.all_passed()); // inapplicable checks are not failures
    bool saw_inapplicable = false;
    for (const auto& c : r.checks)
        saw_inapplicable |= c.status == CheckResult::Status::Inapplicable;
    CHECK(saw_inapplicable);

    auto kink = testutil::by_name(testutil::load_synthetic(), "kink_pos");
    auto rk = verify_stabilization(kink, vo);
    CHECK(rk.alternating);
    CHECK_FALSE(rk.reduced_alternating); // one side has a loop
    CHECK(rk.all_passed());

    CHECK_THROWS_AS(verify_stabilization(kink, VerifyOptions{.n_max = 1}),
                    Error);
}

TEST_CASE("verification with census entries on the pair") {
    auto d = testutil::by_name(testutil::load_knots(), "12a217");
    VerifyOptions vo;
    vo.n_max = 2;
    vo.census = &fixture_census_entry("12a217");
    auto r = verify_stabilization(d, vo);
    CHECK(r.all_passed());
    CHECK(r.checks.back().id == "volume-bounds");
    CHECK(r.checks.back().status == CheckResult::Status::Pass);

    // missing volume shows up as a skip
    auto d2 = testutil::by_name(testutil::load_knots(), "12a1228");
    vo.census = &fixture_census_entry("12a1228");
    auto r2 = verify_stabilization(d2, vo);
    CHECK(r2.all_passed());
    CHECK(r2.checks.back().id == "volume-bounds");
    CHECK(r2.checks.back().status == CheckResult::Status::Skipped);
}
