// Graphs of all-A / all-B bracket states: circles become vertices, each
// crossing an edge between the circles its two lobes land on.  Includes the
// reduced (bundled) multigraph, its statistics, and the closed-form
// statistics predicted for parallel cables.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "knotcab/pd.hpp"

namespace knotcab {

// One lobe of a smoothed crossing sitting on a circle.
struct Attachment {
    std::uint32_t crossing = 0;
    int side = 0; // 0/1: which of the crossing's two lobes
    bool operator==(const Attachment&) const = default;
};

struct StateGraph {
    Splice polarity = Splice::A;
    // circles[v]: attachments in cyclic order around circle v.  Circles with
    // no attachments (free circles) sit at the end with empty lists.
    std::vector<std::vector<Attachment>> circles;
    // edge[k] = (circle of lobe 0, circle of lobe 1) for crossing k.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edge;

    std::size_t vertex_count() const { return circles.size(); }
};

// Builds the state graph of the uniform all-A or all-B smoothing.
StateGraph build_state_graph(const PDCode& d, Splice polarity);

// Parallel crossings bundled into one edge with a multiplicity.
struct ReducedEdge {
    std::uint32_t u = 0, v = 0; // circle ids, u <= v; u == v marks a loop
    std::vector<std::uint32_t> crossings;
    unsigned multiplicity() const { return unsigned(crossings.size()); }
    bool loop() const { return u == v; }
};

struct ReducedGraph {
    std::size_t vertex_count = 0;
    std::vector<ReducedEdge> edges; // sorted by (u, v)
};

ReducedGraph reduce(const StateGraph& g);

struct GraphStats {
    Splice polarity = Splice::A;
    std::size_t vertices = 0;   // state circles (free circles included)
    std::size_t edges = 0;      // reduced edges, loops included
    std::size_t loop_edges = 0; // reduced edges with both ends on one circle
    bool adequate = false;      // no loop edges
    std::size_t components = 1;
    std::size_t beta1 = 0; // edges - vertices + components
    std::size_t mu = 0;    // non-loop reduced edges with multiplicity >= 2
    std::size_t tau = 0;   // triangles in the underlying simple graph
    std::size_t theta = 0; // interleaved pairs of reduced edges (see below)
    std::size_t crossings = 0;            // sum of multiplicities
    std::vector<unsigned> multiplicities; // non-loop bundles, descending
};

// theta counts unordered pairs of distinct non-loop reduced edges that are
// interleaved: both touch a common circle and their attachment slots
// alternate around it (their restriction to the circle has four or more
// maximal blocks).  Distinct reduced edges share at most one circle, so
// counting pairs and counting incidences agree.
std::size_t mixed_pair_count(const StateGraph& g, const ReducedGraph& r);

GraphStats stats(const StateGraph& g);

// Convenience: stats of the uniform smoothing of the given polarity.
GraphStats stats(const PDCode& d, Splice polarity);

// Closed-form statistics of the n-cable's uniform state graph, computed
// from the base diagram's statistics alone:
//   v_n = n*v,  e_n = e + (n-1)*v,  tau_n = tau,  mu_n = e_n (n >= 2),
//   theta_n = (n-2)*v + 2*e (valid when the base diagram is reduced
//   alternating), and beta1 is preserved.
struct CablePrediction {
    unsigned n = 1;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t mu = 0;
    std::size_t tau = 0;
    std::size_t theta = 0;
    bool theta_valid = false;
    std::size_t beta1 = 0;
};
CablePrediction predict_cable_stats(const GraphStats& base, unsigned n,
                                    bool reduced_alternating);

} // namespace knotcab
