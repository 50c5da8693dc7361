#pragma once

#include "mrf/energy.hpp"
#include "mrf/rng.hpp"

namespace mrf {

// Indices into a parent topology's edge list; unique, kept in ascending order.
struct EdgeSubset {
    std::vector<int> indices;
};

// Uniformly random subset of round(rho * edge_count) edges, drawn without
// replacement via a seeded partial shuffle.
EdgeSubset approximate_edges(int edge_count, double rho, Rng& rng);

// Same energy with the pairwise terms outside the subset dropped.
DiscreteEnergy restrict_energy(const DiscreteEnergy& energy, const EdgeSubset& subset);
BinaryEnergy restrict_energy(const BinaryEnergy& binary, const EdgeSubset& subset);

struct GaDraws {
    std::vector<double> rhos;
    std::vector<Label> alphas;
};

// K rounds of expansion on randomly edge-approximated subproblems: pick a
// random alpha, drop a rho ~ U(0,1) fraction of the reduced problem's edges,
// QPBO the rest with unlabeled forced to keep the current label. The
// intermediate labelings may increase the original energy; the result is a
// proposal, not a descent step.
Labeling optimize_ga(const DiscreteEnergy& energy, const Labeling& x, int proposal_sweeps,
                     Rng& rng, GaDraws* draws = nullptr);

// Exact minimizer of an acyclic energy by min-sum dynamic programming;
// upward min-marginal pass, downward argmin backtracking, ties toward the
// smaller label index. Throws on cyclic input.
Labeling tree_optimize(const DiscreteEnergy& forest_energy);

// Random spanning forest (uniform edge weights + minimum spanning forest),
// solved exactly on the kept edges.
Labeling st_proposal(const DiscreteEnergy& energy, Rng& rng);

// i.i.d. uniform labels.
Labeling random_proposal(int node_count, int label_count, Rng& rng);

}  // namespace mrf
