#include "qsd/quantum_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qsd/parallel.hpp"

namespace qsd {

AdviceState prepare_advice(const PathDistribution& dist,
                           const std::function<double(std::size_t, const PathEntry&)>& scorer) {
    if (dist.entries.empty()) throw empty_language_error("prepare_advice: empty distribution");
    AdviceState st;
    const std::size_t n = dist.entries.size();
    st.amps.resize(n);
    st.probs.resize(n);
    st.scores.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double p = std::exp(dist.entries[i].log_prob);
        st.probs[i] = p;
        st.amps[i] = std::sqrt(p);
        st.scores[i] = scorer(i, dist.entries[i]);
    }
    st.prep = st.amps;
    return st;
}

AdviceState prepare_advice(const PathDistribution& dist, std::vector<double> scores) {
    if (scores.size() != dist.entries.size())
        throw std::domain_error("prepare_advice: score vector length mismatch");
    return prepare_advice(dist, [&scores](std::size_t i, const PathEntry&) { return scores[i]; });
}

void grover_iterate(AdviceState& state, const std::vector<char>& marked, int iterations) {
    if (iterations < 0) throw std::domain_error("grover_iterate: iterations must be >= 0");
    const std::size_t n = state.size();
    for (int it = 0; it < iterations; ++it) {
        for (std::size_t i = 0; i < n; ++i)
            if (marked[i]) state.amps[i] = -state.amps[i];
        const par::cplx overlap = par::dot(state.prep, state.amps);
        par::reflect(state.prep, overlap, state.amps);
    }
    state.oracle_queries += static_cast<std::uint64_t>(iterations);
}

std::size_t measure(const AdviceState& state, std::mt19937_64& rng) {
    const double total = par::norm2(state.amps);
    double u = next_canonical(rng) * total;
    const std::size_t n = state.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double w = std::norm(state.amps[i]);
        if (u < w) return i;
        u -= w;
    }
    return n - 1;
}

ExponentialSearchResult exponential_search(AdviceState& state, const std::vector<char>& marked,
                                           std::mt19937_64& rng) {
    const std::size_t n = state.size();
    const std::uint64_t cutoff =
        static_cast<std::uint64_t>(std::ceil(3.0 * std::sqrt(static_cast<double>(n))));
    const double lambda = 6.0 / 5.0;

    double bound = 1.0;
    std::uint64_t used = 0;
    while (true) {
        const int m = static_cast<int>(bound);
        const int j = static_cast<int>(next_canonical(rng) * m);
        state.reset();
        const std::uint64_t before = state.oracle_queries;
        grover_iterate(state, marked, j);
        used += state.oracle_queries - before;
        const std::size_t idx = measure(state, rng);
        if (marked[idx]) return {idx, used};
        if (used > cutoff) return {std::nullopt, used};
        bound = std::ceil(lambda * bound);
    }
}

int default_rounds(std::size_t n_hypotheses) {
    int bits = 0;
    while ((std::size_t{1} << bits) < n_hypotheses) ++bits;
    return bits + 3;
}

namespace {

SearchOutcome decode_loop(AdviceState state, int rounds, std::uint64_t seed,
                          const std::vector<char>& eligible, double global_best) {
    if (rounds < 1) throw std::domain_error("decode: rounds must be >= 1");
    const std::size_t n = state.size();
    std::vector<char> marked(n, 0);

    SearchOutcome out;
    out.rounds = rounds;
    double best = -std::numeric_limits<double>::infinity();
    bool have_best = false;

    for (int r = 0; r < rounds; ++r) {
        for (std::size_t i = 0; i < n; ++i)
            marked[i] = eligible[i] && state.scores[i] > best;
        std::mt19937_64 rng(split_seed(seed, static_cast<std::uint64_t>(r)));
        auto res = exponential_search(state, marked, rng);
        if (res.found) {
            const std::size_t idx = *res.found;
            if (eligible[idx] && (!have_best || state.scores[idx] > best)) {
                best = state.scores[idx];
                out.best_index = idx;
                have_best = true;
                out.queries_to_best = state.oracle_queries;
            }
        }
    }
    out.best_score = best;
    out.oracle_queries = state.oracle_queries;
    out.success = have_best && best >= global_best;
    return out;
}

}  // namespace

SearchOutcome quantum_search_decode(const AdviceState& prepared, int rounds, std::uint64_t seed) {
    AdviceState state = prepared;
    state.oracle_queries = 0;
    const std::size_t n = state.size();
    std::vector<char> eligible(n, 1);
    const double global_best = *std::max_element(state.scores.begin(), state.scores.end());
    return decode_loop(std::move(state), rounds, seed, eligible, global_best);
}

int beam_amplification_rounds(double retained_mass) {
    if (!(retained_mass > 0) || retained_mass > 1)
        throw std::domain_error("beam_amplification_rounds: mass must be in (0,1]");
    const double theta = std::asin(std::sqrt(retained_mass));
    return static_cast<int>(std::ceil(std::numbers::pi / 4.0 / theta));
}

SearchOutcome quantum_beam_decode(const AdviceState& prepared, double p0, int rounds,
                                  std::uint64_t seed) {
    AdviceState state = prepared;
    state.oracle_queries = 0;
    const std::size_t n = state.size();

    std::vector<char> retained(n, 0);
    double mass = 0.0;
    std::size_t retained_count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (state.probs[i] >= p0) {
            retained[i] = 1;
            mass += state.probs[i];
            ++retained_count;
        }
    }
    if (retained_count == 0 || mass <= 0.0)
        throw infeasible_error("quantum_beam_decode: beam retains nothing (W = 0)");

    // Retaining everything makes the subspace reflection a global phase; the
    // pre-amplification is skipped so p0 = 0 reproduces plain search decode.
    if (retained_count < n) {
        grover_iterate(state, retained, beam_amplification_rounds(std::min(mass, 1.0)));
        state.rebase();
    }

    double global_best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
        if (retained[i]) global_best = std::max(global_best, state.scores[i]);

    return decode_loop(std::move(state), rounds, seed, retained, global_best);
}

}  // namespace qsd
