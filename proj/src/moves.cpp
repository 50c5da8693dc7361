#include "mrf/moves.hpp"

#include <stdexcept>

namespace mrf {

BinaryEnergy build_fusion(const DiscreteEnergy& energy, const Labeling& current,
                          const Labeling& proposal) {
    const int n = energy.node_count();
    const int L = energy.label_count;
    if (static_cast<int>(current.size()) != n || static_cast<int>(proposal.size()) != n)
        throw std::invalid_argument("build_fusion: labeling length mismatch");

    BinaryEnergy binary;
    binary.energy.topology = energy.topology;
    binary.energy.label_count = 2;
    binary.energy.lambda = energy.lambda;
    binary.energy.constant = energy.constant;
    binary.energy.unary.resize(n);
    binary.candidates.resize(n);
    for (int p = 0; p < n; ++p) {
        const Label cur = current[p];
        const Label pro = proposal[p];
        if (cur < 0 || cur >= L || pro < 0 || pro >= L)
            throw std::invalid_argument("build_fusion: label out of range");
        binary.candidates[p] = {cur, pro};
        binary.energy.unary[p] = {energy.unary[p][cur], energy.unary[p][pro]};
    }
    binary.energy.pairwise.resize(energy.edge_count());
    for (int e = 0; e < energy.edge_count(); ++e) {
        const auto& [p, q] = energy.topology.edges[e];
        const auto& [cp, ap] = binary.candidates[p];
        const auto& [cq, aq] = binary.candidates[q];
        binary.energy.pairwise[e] = {
            energy.pair_entry(e, cp, cq), energy.pair_entry(e, cp, aq),
            energy.pair_entry(e, ap, cq), energy.pair_entry(e, ap, aq)};
    }
    return binary;
}

BinaryEnergy build_expansion(const DiscreteEnergy& energy, const Labeling& current, Label alpha) {
    if (alpha < 0 || alpha >= energy.label_count)
        throw std::invalid_argument("build_expansion: alpha out of range");
    return build_fusion(energy, current, Labeling(energy.node_count(), alpha));
}

Labeling decode_binary(const BinaryEnergy& binary, const Labeling& y) {
    const int n = binary.energy.node_count();
    if (static_cast<int>(y.size()) != n)
        throw std::invalid_argument("decode_binary: length mismatch");
    Labeling x(n);
    for (int p = 0; p < n; ++p) x[p] = binary.candidates[p][y[p]];
    return x;
}

Labeling apply_partial(const Labeling& current, const Labeling& proposal,
                       const PartialLabeling& partial) {
    if (current.size() != proposal.size() || current.size() != partial.size())
        throw std::invalid_argument("apply_partial: length mismatch");
    Labeling out(current.size());
    for (std::size_t p = 0; p < current.size(); ++p)
        out[p] = partial[p] == 1 ? proposal[p] : current[p];
    return out;
}

Labeling fuse(const DiscreteEnergy& energy, const Labeling& current, const Labeling& proposal,
              FuseDiagnostics* diagnostics) {
    const BinaryEnergy binary = build_fusion(energy, current, proposal);
    const QpboResult solved = qpbo_solve(binary);
    if (diagnostics) {
        diagnostics->proposal_energy = evaluate(energy, proposal);
        diagnostics->labeling_rate = labeling_rate(solved.partial);
    }
    return apply_partial(current, proposal, solved.partial);
}

BinaryEnergy truncate_to_submodular(const BinaryEnergy& binary) {
    binary.validate();
    BinaryEnergy out = binary;
    for (auto& t : out.energy.pairwise) {
        const double violation = (t[0] + t[3]) - (t[1] + t[2]);
        if (violation > 0.0) {
            t[1] += 0.5 * violation;
            t[2] += 0.5 * violation;
        }
    }
    return out;
}

}  // namespace mrf
