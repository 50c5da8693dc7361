#include "mrf/solvers.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "mrf/moves.hpp"
#include "mrf/proposals.hpp"
#include "mrf/qpbo.hpp"
#include "mrf/rng.hpp"

namespace mrf {

namespace {

constexpr double kImproveTol = 1e-9;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Labeling initial_labeling(const DiscreteEnergy& energy, const SolverConfig& config) {
    if (config.initial) {
        const Labeling& given = *config.initial;
        if (static_cast<int>(given.size()) != energy.node_count())
            throw std::invalid_argument("solver: initial labeling length mismatch");
        for (Label l : given)
            if (l < 0 || l >= energy.label_count)
                throw std::invalid_argument("solver: initial label out of range");
        return given;
    }
    return Labeling(energy.node_count(), 0);
}

struct RunLimits {
    Clock::time_point start;
    double budget_s;
    long max_iterations;

    bool exhausted(long iteration) const {
        if (max_iterations > 0 && iteration >= max_iterations) return true;
        if (budget_s > 0.0 && elapsed_ms(start) >= budget_s * 1000.0) return true;
        return false;
    }
};

// Shared Alg.-1 loop; the proposal callback returns the proposal labeling and
// may fill the per-iteration draw columns.
template <typename ProposalFn>
SolverTrace fusion_loop(const DiscreteEnergy& energy, const SolverConfig& config,
                        ProposalFn make_proposal) {
    energy.validate();
    config.validate();

    SolverTrace trace;
    Labeling current = initial_labeling(energy, config);
    double current_energy = evaluate(energy, current);
    const RunLimits limits{Clock::now(), config.time_budget_s, config.max_iterations};

    const double nan = std::numeric_limits<double>::quiet_NaN();
    trace.records.push_back({0, elapsed_ms(limits.start), current_energy, nan, nan, {}, {}});

    int stale = 0;
    long iteration = 0;
    while (!limits.exhausted(iteration) && stale < config.convergence_window) {
        TraceRecord record;
        const Labeling proposal = make_proposal(current, record);

        FuseDiagnostics diag;
        Labeling fused = fuse(energy, current, proposal, &diag);
        double fused_energy = evaluate(energy, fused);
        if (fused_energy > current_energy) {  // float guard; keeps the column non-increasing
            fused = current;
            fused_energy = current_energy;
        }

        if (fused_energy < current_energy - kImproveTol)
            stale = 0;
        else
            ++stale;
        current = std::move(fused);
        current_energy = fused_energy;
        ++iteration;

        record.iteration = iteration;
        record.wall_ms = elapsed_ms(limits.start);
        record.energy = current_energy;
        record.proposal_energy = diag.proposal_energy;
        record.labeling_rate = diag.labeling_rate;
        trace.records.push_back(std::move(record));
    }

    trace.final_labeling = std::move(current);
    trace.final_energy = current_energy;
    trace.iterations = iteration;
    return trace;
}

}  // namespace

void SolverConfig::validate() const {
    if (time_budget_s <= 0.0 && max_iterations <= 0)
        throw std::invalid_argument("solver config: need a positive time budget or iteration cap");
    if (time_budget_s < 0.0 || !std::isfinite(time_budget_s))
        throw std::invalid_argument("solver config: bad time budget");
    if (convergence_window <= 0)
        throw std::invalid_argument("solver config: convergence window must be positive");
    if (proposal_sweeps < 0) throw std::invalid_argument("solver config: negative proposal sweeps");
}

const char* algorithm_name(Algorithm algo) {
    switch (algo) {
        case Algorithm::GaFusion: return "ga";
        case Algorithm::StFusion: return "st";
        case Algorithm::RandomFusion: return "random";
        case Algorithm::Expansion: return "expansion";
        case Algorithm::ExpansionTruncate: return "expansion-trunc";
    }
    return "?";
}

std::optional<Algorithm> algorithm_from_name(const std::string& name) {
    if (name == "ga") return Algorithm::GaFusion;
    if (name == "st") return Algorithm::StFusion;
    if (name == "random") return Algorithm::RandomFusion;
    if (name == "expansion") return Algorithm::Expansion;
    if (name == "expansion-trunc") return Algorithm::ExpansionTruncate;
    return std::nullopt;
}

SolverTrace ga_fusion(const DiscreteEnergy& energy, const SolverConfig& config) {
    const int sweeps =
        config.proposal_sweeps > 0 ? config.proposal_sweeps : std::min(5, energy.label_count);
    Rng proposal_rng = Rng(config.seed).split(1);
    return fusion_loop(energy, config, [&](const Labeling& current, TraceRecord& record) {
        GaDraws draws;
        Labeling proposal = optimize_ga(energy, current, sweeps, proposal_rng, &draws);
        record.rhos = std::move(draws.rhos);
        record.alphas = std::move(draws.alphas);
        return proposal;
    });
}

SolverTrace st_fusion(const DiscreteEnergy& energy, const SolverConfig& config) {
    Rng proposal_rng = Rng(config.seed).split(1);
    return fusion_loop(energy, config, [&](const Labeling&, TraceRecord&) {
        return st_proposal(energy, proposal_rng);
    });
}

SolverTrace random_fusion(const DiscreteEnergy& energy, const SolverConfig& config) {
    Rng proposal_rng = Rng(config.seed).split(1);
    return fusion_loop(energy, config, [&](const Labeling&, TraceRecord&) {
        return random_proposal(energy.node_count(), energy.label_count, proposal_rng);
    });
}

SolverTrace alpha_expansion(const DiscreteEnergy& energy, const SolverConfig& config,
                            ExpansionMode mode) {
    energy.validate();
    config.validate();

    SolverTrace trace;
    Labeling current = initial_labeling(energy, config);
    double current_energy = evaluate(energy, current);
    const RunLimits limits{Clock::now(), config.time_budget_s, config.max_iterations};

    const double nan = std::numeric_limits<double>::quiet_NaN();
    trace.records.push_back({0, elapsed_ms(limits.start), current_energy, nan, nan, {}, {}});

    long iteration = 0;
    bool done = false;
    while (!done) {
        bool sweep_improved = false;
        for (Label alpha = 0; alpha < energy.label_count; ++alpha) {
            if (limits.exhausted(iteration)) {
                done = true;
                break;
            }
            BinaryEnergy binary = build_expansion(energy, current, alpha);
            if (mode == ExpansionMode::Truncate) binary = truncate_to_submodular(binary);
            const QpboResult solved = qpbo_solve(binary);

            const Labeling proposal(energy.node_count(), alpha);
            Labeling moved = apply_partial(current, proposal, solved.partial);
            double moved_energy = evaluate(energy, moved);
            if (moved_energy > current_energy) {
                moved = current;
                moved_energy = current_energy;
            }
            if (moved_energy < current_energy - kImproveTol) sweep_improved = true;
            current = std::move(moved);
            current_energy = moved_energy;
            ++iteration;

            TraceRecord record;
            record.iteration = iteration;
            record.wall_ms = elapsed_ms(limits.start);
            record.energy = current_energy;
            record.proposal_energy = evaluate(energy, proposal);
            record.labeling_rate = labeling_rate(solved.partial);
            record.alphas = {alpha};
            trace.records.push_back(std::move(record));
        }
        if (!sweep_improved) done = true;
    }

    trace.final_labeling = std::move(current);
    trace.final_energy = current_energy;
    trace.iterations = iteration;
    return trace;
}

SolverTrace solve(const DiscreteEnergy& energy, const SolverConfig& config) {
    switch (config.algorithm) {
        case Algorithm::GaFusion: return ga_fusion(energy, config);
        case Algorithm::StFusion: return st_fusion(energy, config);
        case Algorithm::RandomFusion: return random_fusion(energy, config);
        case Algorithm::Expansion: return alpha_expansion(energy, config, ExpansionMode::Qpbo);
        case Algorithm::ExpansionTruncate:
            return alpha_expansion(energy, config, ExpansionMode::Truncate);
    }
    throw std::invalid_argument("solve: unknown algorithm");
}

BruteForceResult brute_force_min(const DiscreteEnergy& energy) {
    energy.validate();
    const int n = energy.node_count();
    const int L = energy.label_count;
    double states = 1.0;
    for (int p = 0; p < n; ++p) {
        states *= L;
        if (states > 1e7) throw std::invalid_argument("brute_force_min: state space exceeds 10^7");
    }

    Labeling x(n, 0);
    BruteForceResult best{x, evaluate(energy, x)};
    while (true) {
        // next labeling in lexicographic order, last node fastest
        int pos = n - 1;
        while (pos >= 0 && x[pos] == L - 1) {
            x[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++x[pos];
        const double value = evaluate(energy, x);
        if (value < best.energy) {
            best.energy = value;
            best.labeling = x;
        }
    }
    return best;
}

namespace {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void write_trace_csv(std::ostream& out, const SolverTrace& trace) {
    out << "iter,wall_ms,energy,proposal_energy,labeling_rate,rho,alpha\n";
    char ms[32];
    for (const TraceRecord& r : trace.records) {
        std::snprintf(ms, sizeof(ms), "%.3f", r.wall_ms);
        out << r.iteration << ',' << ms << ',' << format_g17(r.energy) << ',';
        if (!std::isnan(r.proposal_energy)) out << format_g17(r.proposal_energy);
        out << ',';
        if (!std::isnan(r.labeling_rate)) out << format_g17(r.labeling_rate);
        out << ',';
        for (std::size_t i = 0; i < r.rhos.size(); ++i) {
            if (i) out << ';';
            out << format_g17(r.rhos[i]);
        }
        out << ',';
        for (std::size_t i = 0; i < r.alphas.size(); ++i) {
            if (i) out << ';';
            out << r.alphas[i];
        }
        out << '\n';
    }
}

}  // namespace mrf
