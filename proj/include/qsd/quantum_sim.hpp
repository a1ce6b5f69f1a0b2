#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "qsd/common.hpp"
#include "qsd/decoder_model.hpp"

namespace qsd {

/// Statevector over hypothesis indices. The ancilla registers of the advice
/// state are classically correlated with the index, so the simulation lives
/// in dimension |Omega| rather than the circuit Hilbert space; query counts
/// and measurement statistics are unchanged.
struct AdviceState {
    std::vector<std::complex<double>> amps;  // current amplitudes
    std::vector<std::complex<double>> prep;  // reflection axis |mu>
    std::vector<double> probs;               // p_q at preparation
    std::vector<double> scores;              // F(q)
    std::uint64_t oracle_queries = 0;

    std::size_t size() const { return amps.size(); }
    void reset() { amps = prep; }
    /// Rebase the reflection axis to the current amplitudes (used after the
    /// beam pre-amplification: later searches reflect about the amplified
    /// state).
    void rebase() { prep = amps; }
};

AdviceState prepare_advice(const PathDistribution& dist,
                           const std::function<double(std::size_t, const PathEntry&)>& scorer);
AdviceState prepare_advice(const PathDistribution& dist, std::vector<double> scores);

/// (reflect about |mu|) o (phase-flip marked), `iterations` times.
/// Adds `iterations` to the oracle query counter.
void grover_iterate(AdviceState& state, const std::vector<char>& marked, int iterations);

/// Measurement: sample an index from |amps|^2.
std::size_t measure(const AdviceState& state, std::mt19937_64& rng);

struct ExponentialSearchResult {
    std::optional<std::size_t> found;  // nullopt: cutoff exhausted
    std::uint64_t queries;
};

/// Boyer-Brassard-Hoyer-Tapp schedule over the advice state: bound m grows
/// by 6/5, iteration count j uniform in [0, m), cutoff ceil(3 sqrt(N)).
ExponentialSearchResult exponential_search(AdviceState& state, const std::vector<char>& marked,
                                           std::mt19937_64& rng);

struct SearchOutcome {
    std::size_t best_index = 0;
    double best_score = 0.0;
    std::uint64_t oracle_queries = 0;   // all Grover iterations + pre-amplification
    std::uint64_t queries_to_best = 0;  // queries spent until the final best was measured
    int rounds = 0;
    bool success = false;  // best_score equals the global max over scores
};

int default_rounds(std::size_t n_hypotheses);  // ceil(log2 N) + 3

/// Maximum finding over the advice state (QuantumSearchDecode): m rounds of
/// exponential search against the marked set {F > bestScore}.
SearchOutcome quantum_search_decode(const AdviceState& prepared, int rounds,
                                    std::uint64_t seed);

/// Beam variant: pre-amplify the subspace {p_q >= p0}, rebase, then run the
/// search loop with the marking restricted to the retained subspace.
/// `success` means: found the top-scored element among retained hypotheses.
SearchOutcome quantum_beam_decode(const AdviceState& prepared, double p0, int rounds,
                                  std::uint64_t seed);

/// Pre-amplification round count ceil((pi/4)/asin(sqrt(W))).
int beam_amplification_rounds(double retained_mass);

}  // namespace qsd
