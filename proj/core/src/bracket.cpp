#include "knotcab/bracket.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <unordered_map>

#include "knotcab/cache.hpp"
#include "uf.hpp"

namespace knotcab {

namespace {

void check_deadline(const EngineOptions& opts, const char* engine) {
    if (opts.deadline && std::chrono::steady_clock::now() > *opts.deadline)
        throw EngineLimit(std::string(engine) + " engine exceeded its time budget");
}

std::vector<LaurentPoly> delta_powers(std::size_t upto) {
    std::vector<LaurentPoly> p;
    p.reserve(upto + 1);
    p.push_back(LaurentPoly::one());
    const LaurentPoly delta = bracket_delta();
    for (std::size_t i = 1; i <= upto; ++i) p.push_back(p.back() * delta);
    return p;
}

} // namespace

LaurentPoly BracketValue::reduced() const {
    if (convention == BracketConvention::Reduced) return poly;
    return poly.div_exact(bracket_delta());
}

LaurentPoly BracketValue::unreduced() const {
    if (convention == BracketConvention::Unreduced) return poly;
    return poly * bracket_delta();
}

BracketValue bracket_naive(const PDCode& d, const EngineOptions& opts) {
    const std::size_t c = d.crossing_count();
    if (c > opts.naive_cap)
        throw TooLarge("naive engine refuses " + std::to_string(c) +
                       " crossings (cap " + std::to_string(opts.naive_cap) +
                       "); raise --naive-cap or use the frontier engine");

    const auto deltas = delta_powers(c + 1 + d.free_circles());
    if (c == 0) return {deltas[d.free_circles()], BracketConvention::Unreduced};

    const auto C = static_cast<std::uint32_t>(c);
    // Arc gluings are state-independent; collect them once.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> arc_links;
    arc_links.reserve(2 * c);
    {
        std::unordered_map<std::uint32_t, std::uint32_t> first_seen;
        first_seen.reserve(2 * c);
        for (std::uint32_t k = 0; k < C; ++k)
            for (std::uint32_t s = 0; s < 4; ++s) {
                const std::uint32_t arc = d.crossings()[k].slot[s];
                auto [it, fresh] = first_seen.try_emplace(arc, 4 * k + s);
                if (!fresh) arc_links.emplace_back(it->second, 4 * k + s);
            }
    }

    // counts[b][r]: states with b B-splices and r circles.  The polynomial
    // is assembled once at the end: sum counts * A^(c-2b) * delta^r.
    std::vector<std::vector<Int>> counts(c + 1, std::vector<Int>(c + 2, 0));
    detail::UnionFind uf(4 * C);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << C); ++mask) {
        if ((mask & 0xfffu) == 0) check_deadline(opts, "naive");
        uf.parent.assign(4 * C, 0);
        std::iota(uf.parent.begin(), uf.parent.end(), 0u);
        for (const auto& [x, y] : arc_links) uf.unite(x, y);
        for (std::uint32_t k = 0; k < C; ++k) {
            if (mask >> k & 1) {
                uf.unite(4 * k + 1, 4 * k + 2);
                uf.unite(4 * k + 3, 4 * k + 0);
            } else {
                uf.unite(4 * k + 0, 4 * k + 1);
                uf.unite(4 * k + 2, 4 * k + 3);
            }
        }
        counts[std::size_t(std::popcount(mask))][uf.component_count()] += 1;
    }

    LaurentPoly total;
    for (std::size_t b = 0; b <= c; ++b)
        for (std::size_t r = 1; r <= c + 1; ++r) {
            if (counts[b][r] == 0) continue;
            LaurentPoly term = deltas[r];
            term.mul_monomial(counts[b][r],
                              std::int64_t(c) - 2 * std::int64_t(b));
            total += term;
        }
    total *= deltas[d.free_circles()];
    return {total, BracketConvention::Unreduced};
}

namespace {

// --- frontier engine -------------------------------------------------------

// A live state is a perfect matching on the currently open boundary arcs,
// flattened as (x1,y1,x2,y2,...) with x_i < y_i and x ascending.
using Key = std::vector<std::uint32_t>;

struct KeyHash {
    std::size_t operator()(const Key& k) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint32_t v : k)
            for (int i = 0; i < 4; ++i) {
                h ^= (v >> (8 * i)) & 0xffu;
                h *= 1099511628211ull;
            }
        return std::size_t(h);
    }
};

// Picks a crossing order greedily minimizing the number of open arcs, with
// ties broken by smallest incident arc label, then by index.
std::vector<std::uint32_t> choose_order(const PDCode& d) {
    const auto c = static_cast<std::uint32_t>(d.crossing_count());
    std::uint32_t max_label = 0;
    for (const auto& x : d.crossings())
        for (auto arc : x.slot) max_label = std::max(max_label, arc);

    std::vector<int> seen(max_label + 1, 0);
    std::vector<bool> done(c, false);
    std::vector<std::uint32_t> order;
    order.reserve(c);
    int active = 0;
    for (std::uint32_t step = 0; step < c; ++step) {
        int best_width = INT32_MAX;
        std::uint32_t best_arc = UINT32_MAX, best_k = 0;
        for (std::uint32_t k = 0; k < c; ++k) {
            if (done[k]) continue;
            const auto& slot = d.crossings()[k].slot;
            int width = active;
            std::uint32_t arc_min = UINT32_MAX;
            for (int s = 0; s < 4; ++s) {
                const std::uint32_t a = slot[s];
                arc_min = std::min(arc_min, a);
                bool loop = false; // same arc twice within this crossing
                for (int t = 0; t < 4; ++t)
                    if (t != s && slot[t] == a) loop = true;
                if (loop) continue; // opens and closes internally
                width += (seen[a] == 1) ? -1 : +1;
            }
            if (std::tuple(width, arc_min, k) <
                std::tuple(best_width, best_arc, best_k)) {
                best_width = width;
                best_arc = arc_min;
                best_k = k;
            }
        }
        done[best_k] = true;
        order.push_back(best_k);
        active = best_width;
        for (auto a : d.crossings()[best_k].slot) ++seen[a];
    }
    return order;
}

} // namespace

BracketValue bracket_frontier(const PDCode& d, const EngineOptions& opts) {
    const std::size_t c = d.crossing_count();
    const auto deltas = delta_powers(4 + d.free_circles());
    if (c == 0) return {deltas[d.free_circles()], BracketConvention::Unreduced};

    const auto order = choose_order(d);
    std::uint32_t max_label = 0;
    for (const auto& x : d.crossings())
        for (auto arc : x.slot) max_label = std::max(max_label, arc);
    std::vector<int> seen(max_label + 1, 0);

    std::unordered_map<Key, LaurentPoly, KeyHash> states;
    states.emplace(Key{}, LaurentPoly::one());

    enum Cls : std::uint8_t { New, Active, Loop };
    for (const std::uint32_t k : order) {
        check_deadline(opts, "frontier");
        const auto& slot = d.crossings()[k].slot;

        std::array<Cls, 4> cls{};
        std::array<int, 4> loop_partner{-1, -1, -1, -1};
        for (int s = 0; s < 4; ++s) {
            for (int t = 0; t < 4; ++t)
                if (t != s && slot[t] == slot[s]) loop_partner[s] = t;
            cls[s] = loop_partner[s] >= 0 ? Loop
                     : (seen[slot[s]] == 1 ? Active : New);
        }

        std::unordered_map<Key, LaurentPoly, KeyHash> next;
        next.reserve(states.size() * 2);
        for (const auto& [key, weight] : states) {
            // Matching as partner lookup over this state's open arcs.
            // Strands touched by this crossing get glued; the rest carry over.
            for (int choice = 0; choice < 2; ++choice) {
                // Local nodes: 0..3 crossing stubs, then two ends per
                // touched strand.  Each node has at most two incident links;
                // links carry ids so parallel edges walk correctly.
                std::array<std::int8_t, 12> adj_n{};
                std::array<std::array<std::pair<int, int>, 2>, 12> adj{};
                std::array<std::uint32_t, 12> label{};
                std::array<bool, 12> is_free{};
                int n_nodes = 4;
                int edge_count = 0;

                auto add_edge = [&](int u, int v) {
                    adj[u][adj_n[u]++] = {v, edge_count};
                    adj[v][adj_n[v]++] = {u, edge_count};
                    ++edge_count;
                };

                // Strand-end nodes for the touched matching pairs.
                std::array<std::uint32_t, 4> touched_x{}, touched_y{};
                int n_touched = 0;
                std::array<int, 4> end_node{-1, -1, -1, -1}; // per slot
                auto find_pair = [&](std::uint32_t arc, std::uint32_t& px,
                                     std::uint32_t& py) {
                    for (std::size_t i = 0; i < key.size(); i += 2)
                        if (key[i] == arc || key[i + 1] == arc) {
                            px = key[i];
                            py = key[i + 1];
                            return;
                        }
                    throw Error("frontier invariant: open arc not in state");
                };
                for (int s = 0; s < 4; ++s) {
                    if (cls[s] != Active) continue;
                    // Already materialized (same strand touched twice)?
                    bool found = false;
                    for (int t = 0; t < n_touched && !found; ++t)
                        if (touched_x[t] == slot[s] || touched_y[t] == slot[s]) {
                            end_node[s] = 4 + 2 * t +
                                          (touched_y[t] == slot[s] ? 1 : 0);
                            found = true;
                        }
                    if (found) continue;
                    std::uint32_t px, py;
                    find_pair(slot[s], px, py);
                    touched_x[n_touched] = px;
                    touched_y[n_touched] = py;
                    const int nx = 4 + 2 * n_touched;
                    label[nx] = px;
                    label[nx + 1] = py;
                    add_edge(nx, nx + 1);
                    end_node[s] = (py == slot[s]) ? nx + 1 : nx;
                    ++n_touched;
                }
                n_nodes = 4 + 2 * n_touched;

                // Splice links between stubs.
                if (choice == 0) { // A: (a,b), (c,d)
                    add_edge(0, 1);
                    add_edge(2, 3);
                } else { // B: (b,c), (d,a)
                    add_edge(1, 2);
                    add_edge(3, 0);
                }
                // Closure links from stubs to strands / loop partners.
                for (int s = 0; s < 4; ++s) {
                    switch (cls[s]) {
                    case Loop:
                        if (s < loop_partner[s]) add_edge(s, loop_partner[s]);
                        break;
                    case Active:
                        add_edge(s, end_node[s]);
                        break;
                    case New:
                        label[s] = slot[s];
                        is_free[s] = true;
                        break;
                    }
                }
                // Ends of touched strands whose far arc is not consumed here
                // stay open: they are the free path endpoints.
                for (int t = 0; t < n_touched; ++t)
                    for (int e = 0; e < 2; ++e) {
                        const int node = 4 + 2 * t + e;
                        if (adj_n[node] == 1) is_free[node] = true;
                    }

                // Walk paths between free ends (each has exactly one link),
                // then count the remaining closed cycles.
                std::array<bool, 12> visited{};
                std::vector<std::pair<std::uint32_t, std::uint32_t>> new_pairs;
                for (int u = 0; u < n_nodes; ++u) {
                    if (!is_free[u] || visited[u]) continue;
                    visited[u] = true;
                    int cur = u, in_edge = -1;
                    while (true) {
                        int nxt = -1, via = -1;
                        for (int e = 0; e < adj_n[cur]; ++e)
                            if (adj[cur][e].second != in_edge) {
                                nxt = adj[cur][e].first;
                                via = adj[cur][e].second;
                                break;
                            }
                        if (nxt == -1) break; // cur is the far free end
                        cur = nxt;
                        in_edge = via;
                        visited[cur] = true;
                    }
                    new_pairs.emplace_back(std::min(label[u], label[cur]),
                                           std::max(label[u], label[cur]));
                }
                int cycles = 0;
                for (int u = 0; u < n_nodes; ++u) {
                    if (visited[u] || adj_n[u] == 0) continue;
                    ++cycles;
                    int cur = u, in_edge = -1;
                    do {
                        visited[cur] = true;
                        for (int e = 0; e < adj_n[cur]; ++e)
                            if (adj[cur][e].second != in_edge) {
                                in_edge = adj[cur][e].second;
                                cur = adj[cur][e].first;
                                break;
                            }
                    } while (cur != u);
                }

                // Assemble the successor key: untouched pairs + new pairs.
                Key nk;
                nk.reserve(key.size() + 8);
                for (std::size_t i = 0; i < key.size(); i += 2) {
                    bool touched = false;
                    for (int t = 0; t < n_touched; ++t)
                        if (touched_x[t] == key[i]) touched = true;
                    if (!touched) {
                        nk.push_back(key[i]);
                        nk.push_back(key[i + 1]);
                    }
                }
                for (auto& [x, y] : new_pairs) {
                    nk.push_back(x);
                    nk.push_back(y);
                }
                // Canonical order: pairs sorted by first element.
                {
                    std::vector<std::pair<std::uint32_t, std::uint32_t>> ps;
                    for (std::size_t i = 0; i < nk.size(); i += 2)
                        ps.emplace_back(nk[i], nk[i + 1]);
                    std::sort(ps.begin(), ps.end());
                    nk.clear();
                    for (auto& [x, y] : ps) {
                        nk.push_back(x);
                        nk.push_back(y);
                    }
                }

                LaurentPoly contrib = weight;
                contrib.mul_monomial(1, choice == 0 ? +1 : -1);
                if (cycles) contrib *= deltas[std::size_t(cycles)];
                auto [it, fresh] = next.try_emplace(std::move(nk));
                if (fresh)
                    it->second = std::move(contrib);
                else
                    it->second += contrib;
                if (next.size() > opts.frontier_cap)
                    throw FrontierTooWide(
                        "frontier engine exceeded " +
                        std::to_string(opts.frontier_cap) +
                        " live pairings; raise --frontier-cap");
            }
        }
        states = std::move(next);
        for (auto a : slot) ++seen[a];
    }

    auto it = states.find(Key{});
    LaurentPoly total = (it == states.end()) ? LaurentPoly{} : it->second;
    total *= deltas[d.free_circles()];
    return {total, BracketConvention::Unreduced};
}

BracketValue bracket(const PDCode& d, Engine engine, const EngineOptions& opts) {
    switch (engine) {
    case Engine::Naive:
        return bracket_naive(d, opts);
    case Engine::Frontier:
        return bracket_frontier(d, opts);
    case Engine::Auto:
    default:
        if (d.crossing_count() <= opts.naive_cap) {
            BracketValue nv = bracket_naive(d, opts);
            BracketValue fr = bracket_frontier(d, opts);
            if (nv.poly != fr.poly)
                throw Error("engine disagreement on '" + d.name() +
                            "': naive and frontier brackets differ");
            return nv;
        }
        return bracket_frontier(d, opts);
    }
}

LaurentPoly bracket_reduced(const PDCode& d, Engine engine,
                            const EngineOptions& opts) {
    return bracket(d, engine, opts).reduced();
}

LaurentPoly bracket_combination(const PDCode& d, unsigned m, Engine engine,
                                const EngineOptions& opts,
                                CableBracketMemo* memo) {
    const ChebyshevExpansion e = chebyshev(m);
    CableBracketMemo local;
    CableBracketMemo& mm = memo ? *memo : local;
    LaurentPoly total;
    for (const auto& [k, coef] : e.coeffs) {
        auto it = mm.find(k);
        if (it == mm.end()) {
            const PDCode ck = cable(d, k);
            it = mm.emplace(k, bracket(ck, engine, opts).unreduced()).first;
        }
        LaurentPoly term = it->second;
        term.mul_monomial(coef, 0);
        total += term;
    }
    return total;
}

ColoredJones colored_jones(const PDCode& d, unsigned n, Engine engine,
                           const EngineOptions& opts, CableBracketMemo* memo,
                           PolyCache* cache) {
    if (n == 0) throw Error("colored Jones needs color n >= 1");
    if (d.components() != 1)
        throw MultiComponent("colored Jones is defined for knots (got " +
                             std::to_string(d.components()) + " components)");

    const char* engine_name = engine == Engine::Naive      ? "naive"
                              : engine == Engine::Frontier ? "frontier"
                                                           : "auto";
    ColoredJones result;
    result.name = d.name();
    result.n = n;
    result.writhe = d.writhe();

    if (cache) {
        if (auto hit = cache->load(d, n, engine_name)) {
            result.unnormalized = std::move(*hit);
            result.normalized = result.unnormalized.div_exact(quantum_integer(n));
            return result;
        }
    }

    const unsigned m = n - 1;
    const int w = result.writhe;
    LaurentPoly s = bracket_combination(d, m, engine, opts, memo);
    // J(n) = (-1)^(m*w) * A^(-(m^2+2m)*w) * (-1)^m * <<S_m(D)>>
    const std::int64_t shift =
        -(std::int64_t(m) * m + 2 * std::int64_t(m)) * w;
    const bool negate = ((std::int64_t(m) * w + m) % 2 + 2) % 2 == 1;
    s.mul_monomial(negate ? -1 : 1, shift);
    result.unnormalized = std::move(s);
    result.normalized = result.unnormalized.div_exact(quantum_integer(n));

    if (cache) cache->store(d, n, engine_name, result.unnormalized);
    return result;
}

} // namespace knotcab
