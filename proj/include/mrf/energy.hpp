#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace mrf {

using Label = int;
using NodeId = int;
using Labeling = std::vector<Label>;

// Undirected graph over nodes 0..node_count-1. Edges are stored as (p, q)
// with p < q, no duplicates, no self-loops.
struct GraphTopology {
    int node_count = 0;
    std::vector<std::pair<NodeId, NodeId>> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
    void validate() const;  // throws std::invalid_argument on violation
};

// Multi-label pairwise energy
//
//   E(x) = sum_p unary[p][x_p] + lambda * sum_{(p,q) in E} pairwise[e][x_p*L + x_q] + constant
//
// with a uniform label count L per node. The coupling weight lambda is kept
// explicit; to_normal_form() folds it into the pairwise tables.
struct DiscreteEnergy {
    GraphTopology topology;
    int label_count = 0;
    std::vector<std::vector<double>> unary;     // [node][label]
    std::vector<std::vector<double>> pairwise;  // [edge][i*L+j], i = label of p, j = label of q
    double lambda = 1.0;
    double constant = 0.0;

    int node_count() const { return topology.node_count; }
    int edge_count() const { return topology.edge_count(); }
    double pair_entry(int edge, Label i, Label j) const { return pairwise[edge][i * label_count + j]; }
    double& pair_entry(int edge, Label i, Label j) { return pairwise[edge][i * label_count + j]; }

    void validate() const;
};

// Two-label energy produced by an expansion/fusion reduction. candidates[p]
// records which multi-label value each binary choice maps back to:
// candidates[p][0] is the current label, candidates[p][1] the proposal.
struct BinaryEnergy {
    DiscreteEnergy energy;  // label_count == 2
    std::vector<std::array<Label, 2>> candidates;

    void validate() const;
};

double evaluate(const DiscreteEnergy& energy, const Labeling& x);
double evaluate(const BinaryEnergy& binary, const Labeling& y);

// Reparameterizes so that every unary table and every pairwise row/column has
// minimum zero, folding lambda into the pairwise tables (output lambda == 1)
// and absorbing shifts into the constant. evaluate() is preserved on every
// labeling.
DiscreteEnergy to_normal_form(const DiscreteEnergy& energy);

// mean unary entry / mean pairwise entry, both taken after conversion to
// normal form. Throws if the pairwise mean is zero.
double unary_strength(const DiscreteEnergy& energy);

// theta(0,0) + theta(1,1) <= theta(0,1) + theta(1,0), exact comparison.
// Lambda does not change the outcome (it is nonnegative).
bool edge_is_submodular(const BinaryEnergy& binary, int edge);
bool binary_table_is_submodular(const std::vector<double>& table);

// Eq-style metric test over all label triples (a, b, c):
// theta(a,a) + theta(b,c) <= theta(a,c) + theta(b,a).
bool term_is_metric(const std::vector<double>& table, int label_count);

enum class RelativeEnergyKind { Affine, Ratio };

// Affine: 100 * (value - best) / (zero_ref - best), so best -> 0 and the
// zero-labeling reference -> 100. Ratio: value / zero_ref.
double relative_energy(double value, double best, double zero_ref, RelativeEnergyKind kind);

}  // namespace mrf
