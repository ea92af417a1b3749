#include "knotcab/stategraph.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "uf.hpp"

namespace knotcab {

StateGraph build_state_graph(const PDCode& d, Splice polarity) {
    const auto c = static_cast<std::uint32_t>(d.crossing_count());
    StateGraph g;
    g.polarity = polarity;
    g.edge.assign(c, {0, 0});

    std::vector<std::uint32_t> arc_partner(4 * c, UINT32_MAX);
    {
        std::unordered_map<std::uint32_t, std::uint32_t> first_seen;
        first_seen.reserve(2 * c);
        for (std::uint32_t k = 0; k < c; ++k)
            for (std::uint32_t s = 0; s < 4; ++s) {
                const std::uint32_t arc = d.crossings()[k].slot[s];
                auto [it, fresh] = first_seen.try_emplace(arc, 4 * k + s);
                if (!fresh) {
                    arc_partner[it->second] = 4 * k + s;
                    arc_partner[4 * k + s] = it->second;
                }
            }
    }
    // Lobe pairs per splice: A joins (a,b) and (c,d); B joins (b,c) and (d,a).
    auto splice_partner = [&](std::uint32_t e) {
        const std::uint32_t s = e % 4;
        static constexpr std::uint32_t pa[4] = {1, 0, 3, 2};
        static constexpr std::uint32_t pb[4] = {3, 2, 1, 0};
        return e - s + (polarity == Splice::A ? pa[s] : pb[s]);
    };
    auto side_of = [&](std::uint32_t s) {
        return polarity == Splice::A ? (s <= 1 ? 0 : 1)
                                     : ((s == 1 || s == 2) ? 0 : 1);
    };

    // Walk circles: alternate splice links (traversing one lobe) and arc
    // links.  Attachments come out in the circle's cyclic order.
    std::vector<std::array<std::uint32_t, 2>> lobe_circle(
        c, {UINT32_MAX, UINT32_MAX});
    std::vector<bool> visited(4 * c, false);
    for (std::uint32_t e0 = 0; e0 < 4 * c; ++e0) {
        if (visited[e0]) continue;
        std::vector<Attachment> att;
        std::uint32_t e = e0;
        do {
            visited[e] = true;
            const std::uint32_t sp = splice_partner(e);
            visited[sp] = true;
            const int side = side_of(e % 4);
            att.push_back({e / 4, side});
            lobe_circle[e / 4][side] =
                static_cast<std::uint32_t>(g.circles.size());
            e = arc_partner[sp];
        } while (e != e0);
        g.circles.push_back(std::move(att));
    }
    for (std::uint32_t k = 0; k < c; ++k)
        g.edge[k] = {lobe_circle[k][0], lobe_circle[k][1]};

    for (unsigned i = 0; i < d.free_circles(); ++i) g.circles.emplace_back();
    return g;
}

ReducedGraph reduce(const StateGraph& g) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>
        bundles;
    for (std::uint32_t k = 0; k < g.edge.size(); ++k) {
        auto [u, v] = g.edge[k];
        if (u > v) std::swap(u, v);
        bundles[{u, v}].push_back(k);
    }
    ReducedGraph r;
    r.vertex_count = g.vertex_count();
    for (auto& [uv, ks] : bundles)
        r.edges.push_back({uv.first, uv.second, std::move(ks)});
    return r;
}

std::size_t mixed_pair_count(const StateGraph& g, const ReducedGraph& r) {
    std::vector<int> edge_of(g.edge.size(), -1);
    for (std::size_t i = 0; i < r.edges.size(); ++i)
        if (!r.edges[i].loop())
            for (auto k : r.edges[i].crossings) edge_of[k] = int(i);

    std::size_t theta = 0;
    for (const auto& circle : g.circles) {
        // Non-loop reduced edges touching this circle.
        std::vector<int> incident;
        for (const auto& a : circle) {
            const int e = edge_of[a.crossing];
            if (e >= 0 &&
                std::find(incident.begin(), incident.end(), e) == incident.end())
                incident.push_back(e);
        }
        for (std::size_t i = 0; i < incident.size(); ++i)
            for (std::size_t j = i + 1; j < incident.size(); ++j) {
                // Restrict the cyclic attachment word to the two bundles
                // and count label changes; 2 means separated, 4+ interleaved.
                std::vector<int> word;
                for (const auto& a : circle) {
                    const int e = edge_of[a.crossing];
                    if (e == incident[i] || e == incident[j]) word.push_back(e);
                }
                int transitions = 0;
                for (std::size_t t = 0; t < word.size(); ++t)
                    if (word[t] != word[(t + 1) % word.size()]) ++transitions;
                if (transitions >= 4) ++theta;
            }
    }
    return theta;
}

GraphStats stats(const StateGraph& g) {
    const ReducedGraph r = reduce(g);
    GraphStats s;
    s.polarity = g.polarity;
    s.vertices = g.vertex_count();
    s.edges = r.edges.size();
    for (const auto& e : r.edges) {
        if (e.loop()) ++s.loop_edges;
        s.crossings += e.multiplicity();
        if (e.loop()) continue; // loops stay out of the bundle profile
        s.multiplicities.push_back(e.multiplicity());
        if (e.multiplicity() >= 2) ++s.mu;
    }
    std::sort(s.multiplicities.rbegin(), s.multiplicities.rend());
    s.adequate = s.loop_edges == 0;

    detail::UnionFind uf(std::max<std::size_t>(s.vertices, 1));
    for (const auto& e : r.edges)
        if (!e.loop()) uf.unite(e.u, e.v);
    s.components = s.vertices == 0 ? 0 : uf.component_count();
    s.beta1 = s.edges - s.vertices + s.components;

    // Triangles in the underlying simple graph.
    std::vector<std::vector<bool>> adj(s.vertices,
                                       std::vector<bool>(s.vertices, false));
    for (const auto& e : r.edges)
        if (!e.loop()) adj[e.u][e.v] = adj[e.v][e.u] = true;
    for (std::size_t i = 0; i < s.vertices; ++i)
        for (std::size_t j = i + 1; j < s.vertices; ++j)
            if (adj[i][j])
                for (std::size_t k = j + 1; k < s.vertices; ++k)
                    if (adj[j][k] && adj[i][k]) ++s.tau;

    s.theta = mixed_pair_count(g, r);
    return s;
}

GraphStats stats(const PDCode& d, Splice polarity) {
    return stats(build_state_graph(d, polarity));
}

CablePrediction predict_cable_stats(const GraphStats& base, unsigned n,
                                    bool reduced_alternating) {
    if (n == 0) throw Error("cable prediction needs n >= 1");
    CablePrediction p;
    p.n = n;
    if (n == 1) {
        p.vertices = base.vertices;
        p.edges = base.edges;
        p.mu = base.mu;
        p.tau = base.tau;
        p.theta = base.theta;
        p.theta_valid = true;
        p.beta1 = base.beta1;
        return p;
    }
    p.vertices = n * base.vertices;
    p.edges = base.edges + (n - 1) * base.vertices;
    p.mu = p.edges; // every cabled bundle has multiplicity >= 2
    p.tau = base.tau;
    p.theta = (n - 2) * base.vertices + 2 * base.edges;
    p.theta_valid = reduced_alternating;
    p.beta1 = base.beta1;
    return p;
}

} // namespace knotcab
