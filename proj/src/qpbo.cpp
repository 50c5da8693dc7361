#include "mrf/qpbo.hpp"

#include <algorithm>
#include <stdexcept>

#include "mrf/maxflow.hpp"

namespace mrf {

namespace {

// Builds the doubled flow graph. Terminal costs are accumulated signed and
// rebased at the end so the network only carries nonnegative capacities.
struct DoubledGraph {
    int n;
    FlowNetwork net;
    std::vector<double> cost_if_sink;    // incurred when the node is on the sink side
    std::vector<double> cost_if_source;  // incurred when the node is on the source side
    double constant = 0.0;

    explicit DoubledGraph(int nodes)
        : n(nodes), net(2 * nodes), cost_if_sink(2 * nodes, 0.0), cost_if_source(2 * nodes, 0.0) {}

    int primal(int p) const { return p; }
    int mirror(int p) const { return n + p; }

    // Cut cost A,B,C,D over ([u in sink], [v in sink]); requires A+D <= B+C.
    //   E(u,v) = A + (C-A)[u] + (D-C)[v] + (B+C-A-D)[u in source][v in sink]
    void add_submodular_table(int u, int v, double A, double B, double C, double D) {
        constant += A;
        cost_if_sink[u] += C - A;
        cost_if_sink[v] += D - C;
        const double m = B + C - A - D;
        if (m > 0.0) net.add_arc(u, v, m);
    }

    void finalize() {
        for (int i = 0; i < 2 * n; ++i) {
            const double shift = std::min(cost_if_sink[i], cost_if_source[i]);
            constant += shift;
            net.add_terminal(i, cost_if_sink[i] - shift, cost_if_source[i] - shift);
        }
    }
};

}  // namespace

QpboResult qpbo_solve(const DiscreteEnergy& binary) {
    binary.validate();
    if (binary.label_count != 2) throw std::invalid_argument("qpbo_solve: label_count must be 2");
    const int n = binary.node_count();

    DoubledGraph g(n);

    // Each term contributes half its weight to each copy. The mirror copy is
    // read with inverted polarity (label = 1 iff the node sits on the source
    // side), which flips table arguments and keeps every added table
    // submodular as a cut function.
    for (int p = 0; p < n; ++p) {
        const double e0 = 0.5 * binary.unary[p][0];
        const double e1 = 0.5 * binary.unary[p][1];
        g.cost_if_sink[g.primal(p)] += e1;
        g.cost_if_source[g.primal(p)] += e0;
        g.cost_if_sink[g.mirror(p)] += e0;
        g.cost_if_source[g.mirror(p)] += e1;
    }
    for (int e = 0; e < binary.edge_count(); ++e) {
        const auto& [p, q] = binary.topology.edges[e];
        const double s = 0.5 * binary.lambda;
        const double A = s * binary.pairwise[e][0];  // theta(0,0)
        const double B = s * binary.pairwise[e][1];  // theta(0,1)
        const double C = s * binary.pairwise[e][2];  // theta(1,0)
        const double D = s * binary.pairwise[e][3];  // theta(1,1)
        if (A + D <= B + C) {
            g.add_submodular_table(g.primal(p), g.primal(q), A, B, C, D);
            // both arguments flipped on the mirror copy
            g.add_submodular_table(g.mirror(p), g.mirror(q), D, C, B, A);
        } else {
            // second argument flipped: theta(y_p, 1 - y'_q)
            g.add_submodular_table(g.primal(p), g.mirror(q), B, A, D, C);
            // first argument flipped: theta(1 - y'_p, y_q)
            g.add_submodular_table(g.mirror(p), g.primal(q), C, D, A, B);
        }
    }
    g.finalize();

    const MaxFlowResult cut = max_flow(g.net);

    QpboResult result;
    result.lower_bound = cut.flow + g.constant + binary.constant;
    result.partial.assign(n, kUnlabeled);
    for (int p = 0; p < n; ++p) {
        const int ya = cut.source_side[g.primal(p)] ? 0 : 1;
        const int yb = cut.source_side[g.mirror(p)] ? 1 : 0;
        if (ya == yb) result.partial[p] = ya;
    }
    return result;
}

QpboResult qpbo_solve(const BinaryEnergy& binary) {
    binary.validate();
    return qpbo_solve(binary.energy);
}

double labeling_rate(const PartialLabeling& partial) {
    if (partial.empty()) return 0.0;
    std::size_t labeled = 0;
    for (int v : partial)
        if (v != kUnlabeled) ++labeled;
    return static_cast<double>(labeled) / static_cast<double>(partial.size());
}

}  // namespace mrf
