#include "mrf/maxflow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mrf {

int FlowNetwork::add_arc(int from, int to, double cap, double rev_cap) {
    const int idx = static_cast<int>(arcs.size());
    arcs.push_back({from, to, cap, idx + 1});
    arcs.push_back({to, from, rev_cap, idx});
    return idx;
}

void FlowNetwork::add_terminal(int node, double src, double snk) {
    source_cap[node] += src;
    sink_cap[node] += snk;
}

void FlowNetwork::validate() const {
    if (node_count < 0) throw std::invalid_argument("flow network: negative node count");
    if (static_cast<int>(source_cap.size()) != node_count ||
        static_cast<int>(sink_cap.size()) != node_count)
        throw std::invalid_argument("flow network: terminal capacity arrays mismatch node count");
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const FlowArc& a = arcs[i];
        if (a.from < 0 || a.from >= node_count || a.to < 0 || a.to >= node_count)
            throw std::invalid_argument("flow network: arc endpoint out of range");
        if (!(a.capacity >= 0.0) || !std::isfinite(a.capacity))
            throw std::invalid_argument("flow network: arc capacity must be finite and nonnegative");
        if (a.reverse < 0 || a.reverse >= static_cast<int>(arcs.size()) ||
            arcs[a.reverse].reverse != static_cast<int>(i))
            throw std::invalid_argument("flow network: inconsistent reverse arc index");
    }
    for (double c : source_cap)
        if (!(c >= 0.0) || !std::isfinite(c))
            throw std::invalid_argument("flow network: bad source capacity");
    for (double c : sink_cap)
        if (!(c >= 0.0) || !std::isfinite(c))
            throw std::invalid_argument("flow network: bad sink capacity");
}

namespace {

// Dinic over an explicit residual graph; source is node n, sink node n+1.
struct Dinic {
    struct Arc {
        int to;
        double cap;
    };

    int n_total;
    int source, sink;
    std::vector<Arc> arcs;              // paired, reverse = index ^ 1
    std::vector<std::vector<int>> adj;  // arc indices per node, insertion order
    std::vector<int> level;
    std::vector<std::size_t> next_arc;
    std::vector<int> path;  // arc indices of the current partial path

    explicit Dinic(int nodes) : n_total(nodes + 2), source(nodes), sink(nodes + 1), adj(n_total) {}

    int add(int u, int v, double cap, double rev_cap) {
        const int idx = static_cast<int>(arcs.size());
        arcs.push_back({v, cap});
        arcs.push_back({u, rev_cap});
        adj[u].push_back(idx);
        adj[v].push_back(idx + 1);
        return idx;
    }

    bool build_levels() {
        level.assign(n_total, -1);
        level[source] = 0;
        std::vector<int> queue{source};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            for (int ai : adj[u]) {
                const Arc& a = arcs[ai];
                if (a.cap > 0.0 && level[a.to] < 0) {
                    level[a.to] = level[u] + 1;
                    queue.push_back(a.to);
                }
            }
        }
        return level[sink] >= 0;
    }

    // One augmenting path in the level graph, explicit stack (graphs can be
    // hundreds of thousands of nodes deep in principle).
    double augment() {
        path.clear();
        int u = source;
        while (true) {
            if (u == sink) {
                double bottleneck = std::numeric_limits<double>::infinity();
                for (int ai : path) bottleneck = std::min(bottleneck, arcs[ai].cap);
                for (int ai : path) {
                    arcs[ai].cap -= bottleneck;
                    arcs[ai ^ 1].cap += bottleneck;
                }
                return bottleneck;
            }
            bool advanced = false;
            for (std::size_t& i = next_arc[u]; i < adj[u].size(); ++i) {
                const int ai = adj[u][i];
                if (arcs[ai].cap > 0.0 && level[arcs[ai].to] == level[u] + 1) {
                    path.push_back(ai);
                    u = arcs[ai].to;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                if (u == source) return 0.0;
                level[u] = -1;  // dead end for this phase
                u = arcs[path.back() ^ 1].to;
                path.pop_back();
            }
        }
    }

    double run() {
        double total = 0.0;
        while (build_levels()) {
            next_arc.assign(n_total, 0);
            while (true) {
                const double pushed = augment();
                if (pushed <= 0.0) break;
                total += pushed;
            }
        }
        return total;
    }
};

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& net) {
    net.validate();
    Dinic dinic(net.node_count);

    // Terminal arcs first (node order), then the pairwise arcs in input order.
    std::vector<int> source_arc(net.node_count, -1), sink_arc(net.node_count, -1);
    for (int p = 0; p < net.node_count; ++p) {
        if (net.source_cap[p] > 0.0) source_arc[p] = dinic.add(dinic.source, p, net.source_cap[p], 0.0);
        if (net.sink_cap[p] > 0.0) sink_arc[p] = dinic.add(p, dinic.sink, net.sink_cap[p], 0.0);
    }
    std::vector<int> arc_map(net.arcs.size(), -1);
    for (std::size_t i = 0; i < net.arcs.size(); ++i) {
        if (arc_map[i] >= 0) continue;
        const FlowArc& fwd = net.arcs[i];
        const int rev = fwd.reverse;
        const int idx = dinic.add(fwd.from, fwd.to, fwd.capacity, net.arcs[rev].capacity);
        arc_map[i] = idx;
        arc_map[rev] = idx ^ 1;
    }

    MaxFlowResult result;
    result.flow = dinic.run();

    // Source-reachable set in the residual graph, arc order fixed.
    std::vector<bool> reach(dinic.n_total, false);
    reach[dinic.source] = true;
    std::vector<int> queue{dinic.source};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (int ai : dinic.adj[u]) {
            const Dinic::Arc& a = dinic.arcs[ai];
            if (a.cap > 0.0 && !reach[a.to]) {
                reach[a.to] = true;
                queue.push_back(a.to);
            }
        }
    }
    result.source_side.assign(net.node_count, false);
    for (int p = 0; p < net.node_count; ++p) result.source_side[p] = reach[p];

    result.arc_residual.resize(net.arcs.size());
    for (std::size_t i = 0; i < net.arcs.size(); ++i)
        result.arc_residual[i] = dinic.arcs[arc_map[i]].cap;
    result.source_residual.assign(net.node_count, 0.0);
    result.sink_residual.assign(net.node_count, 0.0);
    for (int p = 0; p < net.node_count; ++p) {
        result.source_residual[p] = source_arc[p] >= 0 ? dinic.arcs[source_arc[p]].cap : 0.0;
        result.sink_residual[p] = sink_arc[p] >= 0 ? dinic.arcs[sink_arc[p]].cap : 0.0;
    }
    return result;
}

}  // namespace mrf
