#include "knotcab/pd.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_map>

#include "uf.hpp"

namespace knotcab {

namespace {

// succ(x) walks the arc labels 1..2c along the knot, wrapping at the end.
inline std::uint32_t succ(std::uint32_t x, std::uint32_t two_c) {
    return x == two_c ? 1 : x + 1;
}

// Checks the exactly-twice rule; returns max label (= 2c when valid).
std::uint32_t validate_labels(const std::vector<Crossing>& crossings) {
    std::unordered_map<std::uint32_t, int> count;
    std::uint32_t max_label = 0;
    for (const auto& x : crossings)
        for (std::uint32_t arc : x.slot) {
            if (arc == 0) throw LabelError("arc labels must be positive");
            ++count[arc];
            max_label = std::max(max_label, arc);
        }
    for (const auto& [arc, n] : count)
        if (n != 2)
            throw LabelError("arc " + std::to_string(arc) + " appears " +
                             std::to_string(n) + " times (want exactly 2)");
    return max_label;
}

// Resolves the sign of one crossing in a validated knot diagram.
int crossing_sign(const Crossing& x, std::uint32_t two_c) {
    const auto [a, b, c, d] = x.slot;
    if (two_c == 2) {
        // One-crossing kink: succ is 2-periodic, so both succ rules fire.
        // The loop arc disambiguates: if the under-in arc reappears at slot
        // b the kink is positive, if at slot d it is negative.
        if (b == a) return +1;
        if (d == a) return -1;
        throw ParseError("cannot orient one-crossing diagram");
    }
    const bool pos = succ(d, two_c) == b; // over-strand runs d -> b
    const bool neg = succ(b, two_c) == d; // over-strand runs b -> d
    if (pos == neg) throw ParseError("cannot orient crossing");
    return pos ? +1 : -1;
}

void validate_knot(std::vector<Crossing>& crossings) {
    const std::uint32_t max_label = validate_labels(crossings);
    const auto c = static_cast<std::uint32_t>(crossings.size());
    if (max_label != 2 * c)
        throw LabelError("arc labels must cover 1..2c (max label " +
                         std::to_string(max_label) + ", 2c = " +
                         std::to_string(2 * c) + ")");
    for (const auto& x : crossings)
        if (succ(x.slot[0], 2 * c) != x.slot[2])
            throw ParseError("under-strand must run a -> succ(a); got X[" +
                             std::to_string(x.slot[0]) + ",...," +
                             std::to_string(x.slot[2]) + ",...]");
    for (auto& x : crossings) x.sign = crossing_sign(x, 2 * c);

    // Arcs a,c and b,d are consecutive along a strand; one knot means one
    // component under that relation.
    detail::UnionFind uf(2 * c + 1);
    for (const auto& x : crossings) {
        uf.unite(x.slot[0], x.slot[2]);
        uf.unite(x.slot[1], x.slot[3]);
    }
    std::size_t comps = uf.component_count() - 1; // label 0 unused
    if (comps != 1)
        throw MultiComponent("diagram has " + std::to_string(comps) +
                             " components (want a knot)");
}

} // namespace

PDCode PDCode::from_crossings(std::vector<Crossing> crossings,
                              unsigned free_circles, std::string name,
                              unsigned components) {
    validate_labels(crossings);
    PDCode d;
    d.crossings_ = std::move(crossings);
    d.free_circles_ = free_circles;
    d.components_ = components;
    d.name_ = std::move(name);
    return d;
}

int PDCode::writhe() const {
    int w = 0;
    for (const auto& x : crossings_) {
        if (x.sign == 0) throw Error("writhe of unoriented diagram");
        w += x.sign;
    }
    return w;
}

std::string PDCode::canonical_text() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& x : crossings_) {
        if (!first) os << " ";
        first = false;
        os << "X[" << x.slot[0] << "," << x.slot[1] << "," << x.slot[2] << ","
           << x.slot[3] << "]";
    }
    for (unsigned i = 0; i < free_circles_; ++i) {
        if (!first) os << " ";
        first = false;
        os << "O";
    }
    return os.str();
}

PDCode parse_pd(const std::string& line) {
    std::string body = line;
    std::string name;
    if (auto colon = line.find(':'); colon != std::string::npos) {
        name = line.substr(0, colon);
        body = line.substr(colon + 1);
        // Trim the name and require it to be a single token.
        auto b = name.find_first_not_of(" \t");
        auto e = name.find_last_not_of(" \t");
        name = (b == std::string::npos) ? "" : name.substr(b, e - b + 1);
        if (name.empty()) throw ParseError("empty knot name before ':'");
        if (name.find_first_of(" \t") != std::string::npos)
            throw ParseError("knot name must be a single token: '" + name + "'");
    }

    std::vector<Crossing> crossings;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < body.size() &&
               (std::isspace(static_cast<unsigned char>(body[i])) || body[i] == ','))
            ++i;
    };
    auto read_int = [&]() -> std::uint32_t {
        skip_ws();
        std::size_t start = i;
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i])))
            ++i;
        if (i == start) throw ParseError("expected arc label at column " +
                                         std::to_string(i + 1));
        unsigned long v = 0;
        try {
            v = std::stoul(body.substr(start, i - start));
        } catch (const std::out_of_range&) {
            throw LabelError("arc label out of range");
        }
        if (v == 0 || v > 0xffffffffUL) throw LabelError("arc label out of range");
        return static_cast<std::uint32_t>(v);
    };

    skip_ws();
    while (i < body.size()) {
        if (body[i] != 'X')
            throw ParseError(std::string("expected 'X[' at column ") +
                             std::to_string(i + 1));
        ++i;
        skip_ws();
        if (i >= body.size() || body[i] != '[')
            throw ParseError("expected '[' after 'X'");
        ++i;
        Crossing x;
        for (int s = 0; s < 4; ++s) x.slot[s] = read_int();
        skip_ws();
        if (i >= body.size() || body[i] != ']')
            throw ParseError("expected ']' closing crossing");
        ++i;
        crossings.push_back(x);
        skip_ws();
    }

    if (crossings.empty()) {
        if (name.empty())
            throw ParseError("empty input (a bare unknot line still needs a name)");
        // Named line with no crossings: the 0-crossing unknot.
        PDCode d;
        d.free_circles_ = 1;
        d.name_ = std::move(name);
        return d;
    }

    validate_knot(crossings);
    PDCode d;
    d.crossings_ = std::move(crossings);
    d.name_ = std::move(name);
    return d;
}

std::vector<PDCode> parse_pd_file(const std::string& text) {
    std::vector<PDCode> knots;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        try {
            PDCode d = parse_pd(line);
            if (d.name().empty()) d.set_name("line" + std::to_string(lineno));
            knots.push_back(std::move(d));
        } catch (Error& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return knots;
}

PDCode mirror(const PDCode& d) {
    PDCode m = d;
    for (auto& x : m.crossings_) {
        if (x.sign == 0) throw Error("mirror of unoriented diagram");
        const auto [a, b, c, d_] = x.slot;
        // The new under-strand is the old over-strand; slots stay in
        // counterclockwise order, re-based at the old over-in slot.
        if (x.sign > 0)
            x.slot = {d_, a, b, c}; // over ran d -> b
        else
            x.slot = {b, c, d_, a}; // over ran b -> d
        x.sign = -x.sign;
    }
    if (!m.name_.empty()) {
        if (m.name_.back() == '!')
            m.name_.pop_back();
        else
            m.name_ += "!";
    }
    return m;
}

PDCode cable(const PDCode& d, unsigned n) {
    if (n == 0) {
        PDCode e;
        e.components_ = 0;
        e.name_ = d.name_;
        return e;
    }
    if (n == 1) return d;

    const auto c = static_cast<std::uint32_t>(d.crossing_count());
    // Parent arc x, strand copy i (1-based, leftmost first along the strand
    // direction) becomes boundary arc (x-1)*n + i.  Interior arcs of each
    // cabled crossing take labels above 2*c*n in a fixed scan order.
    const std::uint32_t base = 2 * c * n;
    auto ext = [&](std::uint32_t x, unsigned i) { return (x - 1) * n + i; };
    const std::uint32_t per_square = 2 * n * (n - 1);
    // Vertical interior arc in column i between heights h and h+1.
    auto vert = [&](std::uint32_t k, unsigned i, unsigned h) {
        return base + k * per_square + (i - 1) * (n - 1) + (h - 1) + 1;
    };
    // Horizontal interior arc at height h between columns i and i+1.
    auto horiz = [&](std::uint32_t k, unsigned i, unsigned h) {
        return base + k * per_square + n * (n - 1) + (i - 1) * n + (h - 1) + 1;
    };

    std::vector<Crossing> out;
    out.reserve(std::size_t(n) * n * c);
    for (std::uint32_t k = 0; k < c; ++k) {
        const auto& x = d.crossings_[k];
        if (x.sign == 0) throw Error("cable of unoriented diagram");
        const auto [a, b, cc, dd] = x.slot;
        // The cabled crossing is an n-by-n grid in a square: the under
        // ribbon runs south -> north in columns (west to east = copy 1..n),
        // the over ribbon runs west -> east for positive crossings (copy 1
        // at the north edge) and east -> west for negative ones (copy 1 at
        // the south edge).  Each grid crossing reads [south, east, north,
        // west] and inherits the parent sign.
        for (unsigned i = 1; i <= n; ++i) {
            for (unsigned h = 1; h <= n; ++h) {
                Crossing g;
                g.sign = x.sign;
                g.slot[0] = (h == 1) ? ext(a, i) : vert(k, i, h - 1);
                g.slot[2] = (h == n) ? ext(cc, i) : vert(k, i, h);
                const unsigned over_copy = (x.sign > 0) ? (n + 1 - h) : h;
                g.slot[3] = (i == 1) ? ext(dd, over_copy) : horiz(k, i - 1, h);
                g.slot[1] = (i == n) ? ext(b, over_copy) : horiz(k, i, h);
                out.push_back(g);
            }
        }
    }

    PDCode e;
    e.crossings_ = std::move(out);
    e.free_circles_ = d.free_circles_ * n;
    e.components_ = d.components_ * n;
    e.name_ = d.name_;
    return e;
}

bool is_alternating(const PDCode& d) {
    // under[arc] counts occurrences on slots a/c; over[arc] on slots b/d.
    std::unordered_map<std::uint32_t, std::pair<int, int>> uses;
    for (const auto& x : d.crossings()) {
        ++uses[x.slot[0]].first;
        ++uses[x.slot[2]].first;
        ++uses[x.slot[1]].second;
        ++uses[x.slot[3]].second;
    }
    for (const auto& [arc, uo] : uses)
        if (uo.first != 1 || uo.second != 1) return false;
    return true;
}

int splice_circles(const PDCode& d, const SpliceChoice& choice) {
    if (choice.size() != d.crossing_count())
        throw Error("splice choice length mismatch");
    const auto c = static_cast<std::uint32_t>(d.crossing_count());
    if (c == 0) return int(d.free_circles());

    // Endpoint (k, s) gets index 4k + s; arcs glue their two endpoints,
    // splices glue endpoint pairs around each crossing.
    detail::UnionFind uf(4 * c);
    std::unordered_map<std::uint32_t, std::uint32_t> first_seen;
    first_seen.reserve(2 * c);
    for (std::uint32_t k = 0; k < c; ++k)
        for (std::uint32_t s = 0; s < 4; ++s) {
            const std::uint32_t arc = d.crossings()[k].slot[s];
            auto [it, fresh] = first_seen.try_emplace(arc, 4 * k + s);
            if (!fresh) uf.unite(it->second, 4 * k + s);
        }
    for (std::uint32_t k = 0; k < c; ++k) {
        if (choice[k] == Splice::A) {
            uf.unite(4 * k + 0, 4 * k + 1);
            uf.unite(4 * k + 2, 4 * k + 3);
        } else {
            uf.unite(4 * k + 1, 4 * k + 2);
            uf.unite(4 * k + 3, 4 * k + 0);
        }
    }
    return int(uf.component_count() + d.free_circles());
}

} // namespace knotcab
