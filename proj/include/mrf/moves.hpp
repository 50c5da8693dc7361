#pragma once

#include "mrf/energy.hpp"
#include "mrf/qpbo.hpp"

namespace mrf {

// Binary reduction where y_p = 0 keeps current[p] and y_p = 1 switches to the
// proposal (a constant alpha for expansion). evaluate(result, y) equals the
// original energy at the decoded labeling for every y.
BinaryEnergy build_fusion(const DiscreteEnergy& energy, const Labeling& current,
                          const Labeling& proposal);
BinaryEnergy build_expansion(const DiscreteEnergy& energy, const Labeling& current, Label alpha);

// Decodes the candidate pair recorded in a BinaryEnergy at a binary choice.
Labeling decode_binary(const BinaryEnergy& binary, const Labeling& y);

// partial = 1 -> proposal label, partial = 0 or unlabeled -> current label.
Labeling apply_partial(const Labeling& current, const Labeling& proposal,
                       const PartialLabeling& partial);

struct FuseDiagnostics {
    double proposal_energy = 0.0;
    double labeling_rate = 0.0;
};

// One fusion move: reduce, run QPBO, keep current where unlabeled. Never
// increases the energy (QPBO autarky with the all-zero reference).
Labeling fuse(const DiscreteEnergy& energy, const Labeling& current, const Labeling& proposal,
              FuseDiagnostics* diagnostics = nullptr);

// Raises theta01/theta10 of each violating edge by half the violation, making
// every pairwise term submodular. Values are only ever raised, and only at
// the mixed assignments, so the minimum of the truncated energy still bounds
// the original move from above.
BinaryEnergy truncate_to_submodular(const BinaryEnergy& binary);

}  // namespace mrf
