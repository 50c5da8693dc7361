#pragma once

#include "mrf/energy.hpp"

namespace mrf {

// Per-node value in {0, 1, kUnlabeled}.
inline constexpr int kUnlabeled = -1;
using PartialLabeling = std::vector<int>;

struct QpboResult {
    PartialLabeling partial;
    double lower_bound = 0.0;
};

// Roof-duality partial optimization of an arbitrary binary pairwise energy
// via the doubled-graph construction. Guarantees:
//  - weak persistency (autarky): overwriting any labeling with the labeled
//    entries never increases the energy;
//  - on fully submodular inputs every node is labeled and the labeling is a
//    global minimum;
//  - lower_bound <= min over all labelings.
// A node is unlabeled when its two graph copies land on the same side of the
// minimum cut. Deterministic: the reachability scan follows arc input order.
QpboResult qpbo_solve(const DiscreteEnergy& binary);
QpboResult qpbo_solve(const BinaryEnergy& binary);

// Fraction of nodes carrying a label.
double labeling_rate(const PartialLabeling& partial);

}  // namespace mrf
