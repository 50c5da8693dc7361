#pragma once

#include <vector>

namespace mrf {

// Directed arc with residual bookkeeping. reverse is the index of the paired
// arc; forward/reverse arcs always come in adjacent pairs (index ^ 1).
struct FlowArc {
    int from = 0;
    int to = 0;
    double capacity = 0.0;
    int reverse = 0;
};

// Sparse s-t network. The source and sink are implicit: source_cap[p] is the
// capacity of the arc source->p, sink_cap[p] of p->sink.
struct FlowNetwork {
    int node_count = 0;
    std::vector<FlowArc> arcs;
    std::vector<double> source_cap;
    std::vector<double> sink_cap;

    explicit FlowNetwork(int nodes = 0)
        : node_count(nodes), source_cap(nodes, 0.0), sink_cap(nodes, 0.0) {}

    // Adds the arc pair (from->to, to->from); returns the forward arc index.
    int add_arc(int from, int to, double cap, double rev_cap = 0.0);
    void add_terminal(int node, double src, double snk);
    void validate() const;
};

struct MaxFlowResult {
    double flow = 0.0;
    // source_side[p] is true iff p is reachable from the source in the final
    // residual graph (the canonical minimum cut).
    std::vector<bool> source_side;
    // Residual capacities on termination, aligned with FlowNetwork::arcs and
    // the terminal capacity arrays.
    std::vector<double> arc_residual;
    std::vector<double> source_residual;
    std::vector<double> sink_residual;
};

// Exact min-cut / max-flow (Dinic). Deterministic for a fixed input order:
// level BFS and augmentation both follow arc insertion order.
MaxFlowResult max_flow(const FlowNetwork& net);

}  // namespace mrf
