#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "mrf/energy.hpp"

namespace mrf {

enum class Algorithm { GaFusion, StFusion, RandomFusion, Expansion, ExpansionTruncate };

const char* algorithm_name(Algorithm algo);
std::optional<Algorithm> algorithm_from_name(const std::string& name);

struct SolverConfig {
    Algorithm algorithm = Algorithm::GaFusion;
    double time_budget_s = 0.0;   // 0 = unbounded
    long max_iterations = 0;      // 0 = unbounded; at least one bound must be set
    int convergence_window = 20;  // consecutive non-improving fusions before stopping
    std::uint64_t seed = 0;
    int proposal_sweeps = 0;  // K override for GA proposals; 0 = min(5, L)
    std::optional<Labeling> initial;  // defaults to the all-zero labeling

    void validate() const;
};

struct TraceRecord {
    long iteration = 0;
    double wall_ms = 0.0;
    double energy = 0.0;           // current energy after this iteration
    double proposal_energy = 0.0;  // NaN where inapplicable
    double labeling_rate = 0.0;    // NaN where inapplicable
    std::vector<double> rhos;      // GA approximation draws, empty otherwise
    std::vector<Label> alphas;     // expansion labels used, empty otherwise
};

struct SolverTrace {
    std::vector<TraceRecord> records;
    Labeling final_labeling;
    double final_energy = 0.0;
    long iterations = 0;
};

// Alg.-1-style loop: generate a proposal, fuse, repeat until the energy stops
// improving for convergence_window fusions or a bound is hit. The recorded
// current-energy column is non-increasing.
SolverTrace ga_fusion(const DiscreteEnergy& energy, const SolverConfig& config);
SolverTrace st_fusion(const DiscreteEnergy& energy, const SolverConfig& config);
SolverTrace random_fusion(const DiscreteEnergy& energy, const SolverConfig& config);

enum class ExpansionMode { Qpbo, Truncate };

// Repeated sweeps over alpha = 0..L-1; stops after a full sweep without an
// energy decrease. Truncate mode makes each subproblem submodular first, so
// every node is labeled; Qpbo mode keeps the current label where QPBO leaves
// a node unlabeled.
SolverTrace alpha_expansion(const DiscreteEnergy& energy, const SolverConfig& config,
                            ExpansionMode mode);

// Dispatch on config.algorithm.
SolverTrace solve(const DiscreteEnergy& energy, const SolverConfig& config);

struct BruteForceResult {
    Labeling labeling;
    double energy = 0.0;
};

// Exact global minimum by enumeration (lexicographically smallest argmin).
// Guarded to label_count^node_count <= 10^7.
BruteForceResult brute_force_min(const DiscreteEnergy& energy);

// CSV: iter,wall_ms,energy,proposal_energy,labeling_rate,rho,alpha with empty
// fields where inapplicable; multiple rho/alpha draws are joined with ';'.
void write_trace_csv(std::ostream& out, const SolverTrace& trace);

}  // namespace mrf
