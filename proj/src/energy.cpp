#include "mrf/energy.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace mrf {

void GraphTopology::validate() const {
    if (node_count <= 0) throw std::invalid_argument("topology: node_count must be positive");
    std::set<std::pair<int, int>> seen;
    for (const auto& [p, q] : edges) {
        if (p < 0 || q < 0 || p >= node_count || q >= node_count)
            throw std::invalid_argument("topology: edge endpoint out of range");
        if (p >= q) throw std::invalid_argument("topology: edges must satisfy p < q");
        if (!seen.insert({p, q}).second) throw std::invalid_argument("topology: duplicate edge");
    }
}

void DiscreteEnergy::validate() const {
    topology.validate();
    if (label_count <= 0) throw std::invalid_argument("energy: label_count must be positive");
    if (static_cast<int>(unary.size()) != topology.node_count)
        throw std::invalid_argument("energy: unary table count != node_count");
    for (const auto& u : unary) {
        if (static_cast<int>(u.size()) != label_count)
            throw std::invalid_argument("energy: unary table has wrong label count");
        for (double v : u)
            if (!std::isfinite(v)) throw std::invalid_argument("energy: non-finite unary entry");
    }
    if (static_cast<int>(pairwise.size()) != topology.edge_count())
        throw std::invalid_argument("energy: pairwise table count != edge_count");
    for (const auto& t : pairwise) {
        if (static_cast<int>(t.size()) != label_count * label_count)
            throw std::invalid_argument("energy: pairwise table has wrong size");
        for (double v : t)
            if (!std::isfinite(v)) throw std::invalid_argument("energy: non-finite pairwise entry");
    }
    if (!std::isfinite(lambda) || lambda < 0.0)
        throw std::invalid_argument("energy: lambda must be finite and nonnegative");
    if (!std::isfinite(constant)) throw std::invalid_argument("energy: non-finite constant");
}

void BinaryEnergy::validate() const {
    energy.validate();
    if (energy.label_count != 2) throw std::invalid_argument("binary energy: label_count must be 2");
    if (static_cast<int>(candidates.size()) != energy.node_count())
        throw std::invalid_argument("binary energy: candidate map must cover every node");
}

double evaluate(const DiscreteEnergy& energy, const Labeling& x) {
    const int n = energy.node_count();
    const int L = energy.label_count;
    if (static_cast<int>(x.size()) != n) throw std::invalid_argument("evaluate: labeling length mismatch");
    double unary_sum = 0.0;
    for (int p = 0; p < n; ++p) {
        const Label xp = x[p];
        if (xp < 0 || xp >= L) throw std::invalid_argument("evaluate: label out of range");
        unary_sum += energy.unary[p][xp];
    }
    double pair_sum = 0.0;
    for (int e = 0; e < energy.edge_count(); ++e) {
        const auto& [p, q] = energy.topology.edges[e];
        pair_sum += energy.pairwise[e][x[p] * L + x[q]];
    }
    return unary_sum + energy.lambda * pair_sum + energy.constant;
}

double evaluate(const BinaryEnergy& binary, const Labeling& y) { return evaluate(binary.energy, y); }

DiscreteEnergy to_normal_form(const DiscreteEnergy& energy) {
    DiscreteEnergy out = energy;
    const int L = out.label_count;

    // Fold lambda into the pairwise tables.
    for (auto& t : out.pairwise)
        for (double& v : t) v *= out.lambda;
    out.lambda = 1.0;

    // Push row/column minima into the unaries, then unary minima into the
    // constant, until nothing moves. A full pass leaves zeros in every
    // pairwise row and column, so this settles in very few rounds.
    for (int round = 0; round < 16; ++round) {
        double moved = 0.0;
        for (int e = 0; e < out.edge_count(); ++e) {
            const auto& [p, q] = out.topology.edges[e];
            auto& t = out.pairwise[e];
            for (int i = 0; i < L; ++i) {
                double m = t[i * L];
                for (int j = 1; j < L; ++j) m = std::min(m, t[i * L + j]);
                if (m != 0.0) {
                    for (int j = 0; j < L; ++j) t[i * L + j] -= m;
                    out.unary[p][i] += m;
                    moved += std::abs(m);
                }
            }
            for (int j = 0; j < L; ++j) {
                double m = t[j];
                for (int i = 1; i < L; ++i) m = std::min(m, t[i * L + j]);
                if (m != 0.0) {
                    for (int i = 0; i < L; ++i) t[i * L + j] -= m;
                    out.unary[q][j] += m;
                    moved += std::abs(m);
                }
            }
        }
        for (int p = 0; p < out.node_count(); ++p) {
            double m = out.unary[p][0];
            for (int i = 1; i < L; ++i) m = std::min(m, out.unary[p][i]);
            if (m != 0.0) {
                for (int i = 0; i < L; ++i) out.unary[p][i] -= m;
                out.constant += m;
                moved += std::abs(m);
            }
        }
        if (moved == 0.0) break;
    }
    return out;
}

double unary_strength(const DiscreteEnergy& energy) {
    if (energy.edge_count() == 0) throw std::invalid_argument("unary_strength: energy has no edges");
    const DiscreteEnergy nf = to_normal_form(energy);
    double unary_sum = 0.0;
    std::size_t unary_n = 0;
    for (const auto& u : nf.unary) {
        for (double v : u) unary_sum += v;
        unary_n += u.size();
    }
    double pair_sum = 0.0;
    std::size_t pair_n = 0;
    for (const auto& t : nf.pairwise) {
        for (double v : t) pair_sum += v;
        pair_n += t.size();
    }
    const double pair_mean = pair_sum / static_cast<double>(pair_n);
    if (pair_mean == 0.0) throw std::domain_error("unary_strength: zero pairwise mean");
    return (unary_sum / static_cast<double>(unary_n)) / pair_mean;
}

bool binary_table_is_submodular(const std::vector<double>& table) {
    return table[0] + table[3] <= table[1] + table[2];
}

bool edge_is_submodular(const BinaryEnergy& binary, int edge) {
    return binary_table_is_submodular(binary.energy.pairwise[edge]);
}

bool term_is_metric(const std::vector<double>& table, int label_count) {
    const int L = label_count;
    for (int a = 0; a < L; ++a)
        for (int b = 0; b < L; ++b)
            for (int c = 0; c < L; ++c)
                if (table[a * L + a] + table[b * L + c] > table[a * L + c] + table[b * L + a])
                    return false;
    return true;
}

double relative_energy(double value, double best, double zero_ref, RelativeEnergyKind kind) {
    if (kind == RelativeEnergyKind::Affine) {
        const double denom = zero_ref - best;
        if (denom == 0.0) throw std::domain_error("relative_energy: zero_ref == best");
        return 100.0 * (value - best) / denom;
    }
    if (zero_ref == 0.0) throw std::domain_error("relative_energy: zero_ref is zero");
    return value / zero_ref;
}

}  // namespace mrf
