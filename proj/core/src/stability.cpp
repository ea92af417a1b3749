#include "knotcab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace knotcab {

namespace {

std::int64_t binom2(std::int64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }

int sign_pow(std::int64_t k) { return ((k % 2) + 2) % 2 == 0 ? +1 : -1; }

Int abs_int(Int v) { return v < 0 ? -v : v; }

std::string int_str(const Int& v) { return v.str(); }

} // namespace

HeadTail head_tail(const ColoredJones& j) {
    if (j.normalized.is_zero())
        throw ZeroPolynomial("head/tail of zero polynomial");
    const QForm q = to_q(j.normalized);
    HeadTail ht;
    ht.n = j.n;
    ht.q_offset = q.offset;
    ht.q_min = q.poly_q.min_exp();
    ht.q_max = q.poly_q.max_exp();
    ht.q_span = ht.q_max - ht.q_min;
    for (int i = 0; i < 3; ++i) {
        ht.head.push_back(q.poly_q.coeff(ht.q_max - i));
        ht.tail.push_back(q.poly_q.coeff(ht.q_min + i));
    }
    ht.complete = ht.q_span >= 2;
    ht.disjoint = ht.q_span >= 5;
    return ht;
}

Prediction predict(const GraphStats& a, const GraphStats& b, unsigned n,
                   std::size_t crossings) {
    if (n < 2) throw Error("predictions start at color n = 2");
    if (!a.adequate || !b.adequate)
        throw Inapplicable("extreme-coefficient predictions need an adequate "
                           "diagram on both sides");
    Prediction p;
    p.n = n;
    const auto bA = std::int64_t(a.beta1);
    const auto bB = std::int64_t(b.beta1);
    p.head_first = 1;
    p.head_second = bA;
    p.tail_first = 1;
    p.tail_second = bB;
    if (n == 2) {
        p.head_third_signed = binom2(bA + 1) + std::int64_t(a.mu) -
                              std::int64_t(a.tau);
        p.tail_third_signed = binom2(bB + 1) + std::int64_t(b.mu) -
                              std::int64_t(b.tau);
    } else {
        p.head_third_signed = binom2(bA) - std::int64_t(a.tau);
        p.tail_third_signed = binom2(bB) - std::int64_t(b.tau);
    }
    p.head_third = std::abs(p.head_third_signed);
    p.tail_third = std::abs(p.tail_third_signed);
    p.expected_q_span = binom2(n) * std::int64_t(crossings);
    return p;
}

BracketEdgeCheck bracket_edge_check(const PDCode& d, Engine engine,
                                    const EngineOptions& opts) {
    const GraphStats a = stats(d, Splice::A);
    if (!a.adequate)
        throw Inapplicable("leading-coefficient law needs an A-adequate diagram");
    const auto v = std::int64_t(a.vertices);
    const auto e = std::int64_t(a.edges);
    const LaurentPoly poly = bracket_reduced(d, engine, opts);

    BracketEdgeCheck r;
    r.top_exp = std::int64_t(d.crossing_count()) + 2 * v - 2;
    r.want_first = sign_pow(v - 1);
    r.want_second = Int(sign_pow(v - 2)) * (e - v + 1);
    r.want_third = Int(sign_pow(v - 3)) *
                   (binom2(v - 1) - e * (v - 2) + std::int64_t(a.mu) +
                    binom2(e) - std::int64_t(a.theta) - std::int64_t(a.tau));
    r.got_first = poly.coeff(r.top_exp);
    r.got_second = poly.coeff(r.top_exp - 4);
    r.got_third = poly.coeff(r.top_exp - 8);
    r.pass = poly.max_exp() == r.top_exp && r.got_first == r.want_first &&
             r.got_second == r.want_second && r.got_third == r.want_third;
    return r;
}

std::vector<CensusEntry> load_census(const std::string& csv_text) {
    std::vector<CensusEntry> out;
    std::istringstream is(csv_text);
    std::string line;
    std::size_t lineno = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string();
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };
    auto parse_bool = [&](const std::string& s, std::size_t ln) {
        if (s == "1" || s == "true") return true;
        if (s == "0" || s == "false") return false;
        throw ParseError("census line " + std::to_string(ln) +
                         ": bad flag '" + s + "'");
    };
    while (std::getline(is, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        if (trim(line).empty()) continue;
        std::vector<std::string> f;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) f.push_back(trim(cell));
        while (f.size() < 5) f.push_back("");
        if (f[0] == "name") continue; // header
        if (f.size() != 5)
            throw ParseError("census line " + std::to_string(lineno) +
                             ": want name,volume,alternating,prime,torus");
        CensusEntry e;
        e.name = f[0];
        if (e.name.empty())
            throw ParseError("census line " + std::to_string(lineno) +
                             ": empty name");
        if (!f[1].empty()) {
            try {
                std::size_t used = 0;
                e.volume = std::stod(f[1], &used);
                if (used != f[1].size()) throw std::invalid_argument(f[1]);
            } catch (const std::exception&) {
                throw ParseError("census line " + std::to_string(lineno) +
                                 ": bad volume '" + f[1] + "'");
            }
        }
        e.alternating = parse_bool(f[2], lineno);
        e.prime = parse_bool(f[3], lineno);
        e.torus = parse_bool(f[4], lineno);
        out.push_back(std::move(e));
    }
    return out;
}

const CensusEntry* find_census(const std::vector<CensusEntry>& census,
                               const std::string& name) {
    for (const auto& e : census)
        if (e.name == name) return &e;
    return nullptr;
}

VolumeBounds volume_bounds(std::size_t b_abs, std::size_t beta_abs,
                           const CensusEntry& entry) {
    std::string blockers;
    if (!entry.alternating) blockers += " non-alternating";
    if (!entry.prime) blockers += " non-prime";
    if (entry.torus) blockers += " torus";
    if (!blockers.empty())
        throw Inapplicable("volume bounds do not apply to" + blockers +
                           " knots ('" + entry.name + "')");
    if (!entry.volume)
        throw MissingVolume("no volume recorded for '" + entry.name + "'");
    VolumeBounds vb;
    vb.volume = *entry.volume;
    vb.lower = 2.0 * kIdealTetVolume *
               (double(std::max(b_abs, beta_abs)) - 1.0);
    vb.upper = 10.0 * kIdealTetVolume * (double(b_abs + beta_abs) - 1.0);
    vb.pass = vb.lower <= vb.volume + kVolumeTolerance &&
              vb.volume <= vb.upper + kVolumeTolerance;
    return vb;
}

const char* to_string(CheckResult::Status s) {
    switch (s) {
    case CheckResult::Status::Pass: return "PASS";
    case CheckResult::Status::Fail: return "FAIL";
    case CheckResult::Status::Skipped: return "SKIPPED";
    case CheckResult::Status::Inapplicable: return "INAPPLICABLE";
    }
    return "?";
}

bool VerificationReport::all_passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
        return c.status == CheckResult::Status::Fail;
    });
}

VerificationReport verify_stabilization(const PDCode& d,
                                        const VerifyOptions& vo) {
    if (vo.n_max < 2) throw Error("verification needs n_max >= 2");
    using Status = CheckResult::Status;
    VerificationReport r;
    r.name = d.name();
    r.crossings = d.crossing_count();
    r.n_max = vo.n_max;
    r.stats_a = stats(d, Splice::A);
    r.stats_b = stats(d, Splice::B);
    r.alternating = is_alternating(d);
    r.reduced_alternating =
        r.alternating && r.stats_a.adequate && r.stats_b.adequate;

    auto add = [&](std::string id, Status st, std::string expected,
                   std::string got, std::string note = {}) {
        r.checks.push_back({std::move(id), st, std::move(expected),
                            std::move(got), std::move(note)});
    };

    if (r.alternating) {
        // Checkerboard identity: circle counts of the two uniform states of
        // an alternating diagram add up to c + 2.
        const auto lhs = r.stats_a.vertices + r.stats_b.vertices;
        add("checkerboard", lhs == r.crossings + 2 ? Status::Pass : Status::Fail,
            "v_A + v_B = " + std::to_string(r.crossings + 2),
            std::to_string(lhs));
    }

    CableBracketMemo memo;
    bool gave_up = false;
    std::string gave_up_why;
    for (unsigned n = 2; n <= vo.n_max; ++n) {
        const std::string nn = "(n=" + std::to_string(n) + ")";
        if (gave_up) {
            add("jones" + nn, Status::Skipped, "computed", "not attempted",
                gave_up_why);
            continue;
        }
        ColoredJones j;
        try {
            j = colored_jones(d, n, vo.engine, vo.engine_opts, &memo,
                              vo.cache);
        } catch (const EngineLimit& e) {
            gave_up = true;
            gave_up_why = e.what();
            add("jones" + nn, Status::Skipped, "computed", "engine limit",
                gave_up_why);
            continue;
        } catch (const TooLarge& e) {
            gave_up = true;
            gave_up_why = e.what();
            add("jones" + nn, Status::Skipped, "computed", "engine limit",
                gave_up_why);
            continue;
        }
        HeadTail ht;
        try {
            ht = head_tail(j);
        } catch (const Error& e) {
            add("lattice" + nn, Status::Fail, "exponents on one mod-4 lattice",
                e.what());
            continue;
        }
        r.jones.push_back(j);
        r.heads.push_back(ht);
        add("jones" + nn, Status::Pass, "computed",
            "q-span " + std::to_string(ht.q_span));

        std::optional<Prediction> pred;
        if (r.stats_a.adequate && r.stats_b.adequate)
            pred = predict(r.stats_a, r.stats_b, n, r.crossings);

        if (r.reduced_alternating && pred) {
            add("span" + nn,
                ht.q_span == pred->expected_q_span ? Status::Pass : Status::Fail,
                std::to_string(pred->expected_q_span),
                std::to_string(ht.q_span));
        } else {
            add("span" + nn, Status::Inapplicable,
                "C(n,2)*c for reduced alternating diagrams",
                std::to_string(ht.q_span),
                "diagram is not reduced alternating");
        }

        auto side_checks = [&](const char* side, const GraphStats& s,
                               const std::vector<Int>& coeffs, const Int& want2,
                               std::int64_t want3_signed) {
            const std::string tag = std::string(side) + nn;
            if (!s.adequate) {
                add(tag + "/first", Status::Inapplicable, "needs adequacy",
                    int_str(coeffs[0]), "state graph has a loop");
                return;
            }
            add(tag + "/first",
                abs_int(coeffs[0]) == 1 ? Status::Pass : Status::Fail, "1",
                int_str(abs_int(coeffs[0])));
            add(tag + "/second",
                abs_int(coeffs[1]) == want2 ? Status::Pass : Status::Fail,
                int_str(want2), int_str(abs_int(coeffs[1])));
            if (r.reduced_alternating) {
                add(tag + "/third",
                    abs_int(coeffs[2]) == abs_int(Int(want3_signed))
                        ? Status::Pass
                        : Status::Fail,
                    "|" + std::to_string(want3_signed) + "|",
                    int_str(abs_int(coeffs[2])));
                // Signed pattern g*(1, -b, c) with g the global sign and c
                // the raw (possibly negative) third-coefficient formula.
                bool ok = true;
                const int g = coeffs[0] > 0 ? +1 : -1;
                if (coeffs[1] != 0) ok = ok && (coeffs[1] > 0 ? +1 : -1) == -g;
                if (coeffs[2] != 0 && want3_signed != 0) {
                    const int want_sign = (want3_signed > 0 ? +1 : -1) * g;
                    ok = ok && (coeffs[2] > 0 ? +1 : -1) == want_sign;
                }
                add(tag + "/signs", ok ? Status::Pass : Status::Fail,
                    "pattern (1, -b, c) up to a global sign",
                    ok ? "matched" : "sign mismatch");
            } else {
                add(tag + "/third", Status::Inapplicable,
                    "formula needs a reduced alternating diagram",
                    int_str(abs_int(coeffs[2])));
            }
        };
        if (pred) {
            side_checks("head", r.stats_a, ht.head, pred->head_second,
                        pred->head_third_signed);
            side_checks("tail", r.stats_b, ht.tail, pred->tail_second,
                        pred->tail_third_signed);
        } else {
            add("head" + nn, Status::Inapplicable,
                "extreme coefficients need adequacy on both sides", "",
                "state graph has a loop");
        }
    }

    // Stabilization across colors.
    if (r.heads.size() >= 2) {
        auto pair_str = [&](const HeadTail& h, bool head) {
            const auto& v = head ? h.head : h.tail;
            return "(" + int_str(abs_int(v[0])) + "," + int_str(abs_int(v[1])) +
                   ")";
        };
        for (const bool head : {true, false}) {
            bool ok = true;
            for (const auto& h : r.heads)
                ok = ok && pair_str(h, head) == pair_str(r.heads[0], head);
            add(head ? "head-stable" : "tail-stable",
                ok ? Status::Pass : Status::Fail,
                pair_str(r.heads[0], head) + " for all computed colors",
                ok ? "stable" : "varies");
        }
        std::vector<const HeadTail*> high;
        for (const auto& h : r.heads)
            if (h.n > 2) high.push_back(&h);
        if (high.size() >= 2 && r.reduced_alternating) {
            bool ok = true;
            for (const auto* h : high)
                ok = ok && abs_int(h->head[2]) == abs_int(high[0]->head[2]) &&
                     abs_int(h->tail[2]) == abs_int(high[0]->tail[2]);
            add("third-stable", ok ? Status::Pass : Status::Fail,
                "|third| constant for n > 2", ok ? "stable" : "varies");
        } else if (r.reduced_alternating) {
            add("third-stable", Status::Skipped,
                "|third| constant for n > 2", "needs n_max >= 4",
                "only one color above 2 was computed");
        }
    }

    if (vo.census) {
        try {
            const VolumeBounds vb = volume_bounds(r.stats_a.beta1,
                                                  r.stats_b.beta1, *vo.census);
            std::ostringstream os;
            os.precision(10);
            os << vb.lower << " <= " << vb.volume << " <= " << vb.upper;
            add("volume-bounds", vb.pass ? Status::Pass : Status::Fail,
                "within bounds", os.str());
        } catch (const Inapplicable& e) {
            add("volume-bounds", Status::Inapplicable, "within bounds", "",
                e.what());
        } catch (const MissingVolume& e) {
            add("volume-bounds", Status::Skipped, "within bounds", "",
                e.what());
        }
    }
    return r;
}

} // namespace knotcab
