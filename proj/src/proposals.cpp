#include "mrf/proposals.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mrf/moves.hpp"
#include "mrf/qpbo.hpp"

namespace mrf {

EdgeSubset approximate_edges(int edge_count, double rho, Rng& rng) {
    if (rho < 0.0 || rho > 1.0) throw std::invalid_argument("approximate_edges: rho outside [0,1]");
    const int keep = static_cast<int>(std::llround(rho * edge_count));
    std::vector<int> perm(edge_count);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i < keep; ++i) {
        const int j = i + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(edge_count - i)));
        std::swap(perm[i], perm[j]);
    }
    EdgeSubset subset;
    subset.indices.assign(perm.begin(), perm.begin() + keep);
    std::sort(subset.indices.begin(), subset.indices.end());
    return subset;
}

DiscreteEnergy restrict_energy(const DiscreteEnergy& energy, const EdgeSubset& subset) {
    DiscreteEnergy out = energy;
    out.topology.edges.clear();
    out.pairwise.clear();
    out.topology.edges.reserve(subset.indices.size());
    out.pairwise.reserve(subset.indices.size());
    for (int idx : subset.indices) {
        if (idx < 0 || idx >= energy.edge_count())
            throw std::invalid_argument("restrict_energy: edge index out of range");
        out.topology.edges.push_back(energy.topology.edges[idx]);
        out.pairwise.push_back(energy.pairwise[idx]);
    }
    return out;
}

BinaryEnergy restrict_energy(const BinaryEnergy& binary, const EdgeSubset& subset) {
    BinaryEnergy out;
    out.energy = restrict_energy(binary.energy, subset);
    out.candidates = binary.candidates;
    return out;
}

Labeling optimize_ga(const DiscreteEnergy& energy, const Labeling& x, int proposal_sweeps,
                     Rng& rng, GaDraws* draws) {
    if (proposal_sweeps < 1) throw std::invalid_argument("optimize_ga: sweep count must be >= 1");
    Labeling current = x;
    for (int step = 0; step < proposal_sweeps; ++step) {
        const Label alpha = rng.uniform_int(0, energy.label_count - 1);
        const BinaryEnergy expansion = build_expansion(energy, current, alpha);
        const double rho = rng.uniform01();
        const EdgeSubset subset = approximate_edges(expansion.energy.edge_count(), rho, rng);
        const BinaryEnergy approx = restrict_energy(expansion, subset);
        const QpboResult solved = qpbo_solve(approx);
        for (int p = 0; p < energy.node_count(); ++p)
            if (solved.partial[p] == 1) current[p] = alpha;
        if (draws) {
            draws->rhos.push_back(rho);
            draws->alphas.push_back(alpha);
        }
    }
    return current;
}

Labeling tree_optimize(const DiscreteEnergy& forest_energy) {
    forest_energy.validate();
    const int n = forest_energy.node_count();
    const int L = forest_energy.label_count;
    const double lambda = forest_energy.lambda;

    struct Half {
        int neighbor;
        int edge;
        bool node_is_p;  // whether this endpoint is the p side of the stored (p, q)
    };
    std::vector<std::vector<Half>> adjacency(n);
    for (int e = 0; e < forest_energy.edge_count(); ++e) {
        const auto& [p, q] = forest_energy.topology.edges[e];
        adjacency[p].push_back({q, e, true});
        adjacency[q].push_back({p, e, false});
    }

    std::vector<int> parent(n, -1), parent_edge(n, -1), order;
    std::vector<bool> parent_is_p(n, false), visited(n, false);
    order.reserve(n);
    for (int root = 0; root < n; ++root) {
        if (visited[root]) continue;
        visited[root] = true;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            order.push_back(u);
            for (const Half& h : adjacency[u]) {
                if (h.edge == parent_edge[u]) continue;
                if (visited[h.neighbor])
                    throw std::invalid_argument("tree_optimize: topology contains a cycle");
                visited[h.neighbor] = true;
                parent[h.neighbor] = u;
                parent_edge[h.neighbor] = h.edge;
                parent_is_p[h.neighbor] = !h.node_is_p;  // parent's side of the stored pair
                stack.push_back(h.neighbor);
            }
        }
    }

    // Upward pass: fold each node's min-marginals into its parent.
    std::vector<std::vector<double>> cost(n);
    for (int p = 0; p < n; ++p) cost[p] = forest_energy.unary[p];
    std::vector<Label> pick(static_cast<std::size_t>(n) * L, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int c = *it;
        if (parent[c] < 0) continue;
        const auto& table = forest_energy.pairwise[parent_edge[c]];
        auto pair_cost = [&](Label parent_label, Label child_label) {
            return parent_is_p[c] ? table[parent_label * L + child_label]
                                  : table[child_label * L + parent_label];
        };
        for (Label i = 0; i < L; ++i) {
            double best = cost[c][0] + lambda * pair_cost(i, 0);
            Label best_j = 0;
            for (Label j = 1; j < L; ++j) {
                const double v = cost[c][j] + lambda * pair_cost(i, j);
                if (v < best) {
                    best = v;
                    best_j = j;
                }
            }
            cost[parent[c]][i] += best;
            pick[static_cast<std::size_t>(c) * L + i] = best_j;
        }
    }

    // Downward pass: argmin at each root, then follow the recorded choices.
    Labeling labels(n, 0);
    for (int u : order) {
        if (parent[u] < 0) {
            Label best = 0;
            for (Label i = 1; i < L; ++i)
                if (cost[u][i] < cost[u][best]) best = i;
            labels[u] = best;
        } else {
            labels[u] = pick[static_cast<std::size_t>(u) * L + labels[parent[u]]];
        }
    }
    return labels;
}

Labeling st_proposal(const DiscreteEnergy& energy, Rng& rng) {
    const int m = energy.edge_count();
    std::vector<std::pair<double, int>> weighted(m);
    for (int e = 0; e < m; ++e) weighted[e] = {rng.uniform01(), e};
    std::sort(weighted.begin(), weighted.end());

    std::vector<int> find(energy.node_count());
    std::iota(find.begin(), find.end(), 0);
    auto root_of = [&](int v) {
        while (find[v] != v) {
            find[v] = find[find[v]];
            v = find[v];
        }
        return v;
    };

    EdgeSubset forest;
    for (const auto& [w, e] : weighted) {
        const auto& [p, q] = energy.topology.edges[e];
        const int rp = root_of(p), rq = root_of(q);
        if (rp != rq) {
            find[rp] = rq;
            forest.indices.push_back(e);
        }
    }
    std::sort(forest.indices.begin(), forest.indices.end());
    return tree_optimize(restrict_energy(energy, forest));
}

Labeling random_proposal(int node_count, int label_count, Rng& rng) {
    Labeling x(node_count);
    for (int p = 0; p < node_count; ++p) x[p] = rng.uniform_int(0, label_count - 1);
    return x;
}

}  // namespace mrf
