#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qsd/common.hpp"

namespace qsd {

/// Deterministic finite acceptor over a token alphabet. Undefined
/// transitions reject (the implicit sink). States and tokens are dense
/// indices; names are kept for I/O.
class Acceptor {
  public:
    Acceptor(std::vector<std::string> alphabet, std::vector<std::string> states,
             int start, std::vector<int> accepting,
             const std::vector<std::array<int, 3>>& transitions);

    static Acceptor from_json_file(const std::string& path);
    static Acceptor from_json_text(const std::string& text);

    /// Full R-ary tree: single state, all tokens loop back, accepting.
    static Acceptor full_tree(int R);

    int num_states() const { return static_cast<int>(accepting_.size()); }
    int num_tokens() const { return static_cast<int>(alphabet_.size()); }
    int start() const { return start_; }
    bool accepting(int state) const { return accepting_[state] != 0; }
    /// Successor state, or -1 for reject.
    int step(int state, int token) const { return next_[state][token]; }

    const std::vector<std::string>& alphabet() const { return alphabet_; }
    const std::vector<std::string>& state_names() const { return state_names_; }

  private:
    Acceptor() = default;
    std::vector<std::string> alphabet_;
    std::vector<std::string> state_names_;
    int start_ = 0;
    std::vector<char> accepting_;
    std::vector<std::vector<int>> next_;
};

/// Per-position token probabilities p_{i,j}; rows sum to 1.
class TokenTable {
  public:
    TokenTable(int n, std::vector<std::vector<double>> probs);

    static TokenTable from_csv_file(const std::string& path);
    static TokenTable from_csv_text(const std::string& text);
    /// Every row the same power law over token indices (rank = index + 1).
    static TokenTable power_law_rows(int n, int num_tokens, double k);

    int length() const { return n_; }
    int num_tokens() const { return static_cast<int>(probs_[0].size()); }
    double prob(int position, int token) const { return probs_[position][token]; }
    const std::vector<std::string>& header() const { return header_; }
    void set_header(std::vector<std::string> h) { header_ = std::move(h); }

  private:
    int n_;
    std::vector<std::vector<double>> probs_;
    std::vector<std::string> header_;
};

struct PathEntry {
    std::vector<int> tokens;
    double log_prob;  // normalized: log(prod p / N)
};

/// Exact distribution over accepted length-n strings, lexicographic order.
struct PathDistribution {
    std::vector<PathEntry> entries;
    double log_normalizer;  // log N = log sum of raw path masses

    std::size_t top_index() const;  // argmax prob, lexicographic tie-break
};

PathDistribution enumerate_paths(const Acceptor& acceptor, const TokenTable& table,
                                 std::size_t budget = 1'000'000);

/// Uniform sampling over accepted length-n strings via backward path
/// counting; O(n * |Sigma|) per draw after O(n * |states| * |Sigma|) setup.
class UniformSampler {
  public:
    UniformSampler(const Acceptor& acceptor, int n);

    double total_count() const { return count_[0][acceptor_->start()]; }
    std::vector<int> sample(std::mt19937_64& rng) const;
    /// Completion of a prefix ending in `state` at `position`, uniform over
    /// accepted continuations; appends to `out`.
    void sample_completion(int state, int position, std::mt19937_64& rng,
                           std::vector<int>& out) const;
    double count_from(int state, int position) const { return count_[position][state]; }

  private:
    const Acceptor* acceptor_;
    int n_;
    std::vector<std::vector<double>> count_;  // [position][state]
};

/// Exact next-token conditional Pr(a | prefix) by weighted backward DP over
/// suffix masses. Ground truth for the sampling estimator below.
std::vector<double> biased_conditional_exact(const Acceptor& acceptor, const TokenTable& table,
                                             std::span<const int> prefix);

/// Monte-Carlo estimator d_a: S uniform completions, binned by next token,
/// each weighted by its full path mass.
std::vector<double> biased_conditional_estimate(const Acceptor& acceptor, const TokenTable& table,
                                                std::span<const int> prefix, std::uint64_t samples,
                                                std::uint64_t seed);

/// Chebyshev sample bound ceil(kappa * n^2 / eps^2).
std::uint64_t sample_size_bound(double relative_variance_kappa, int n, double epsilon);

/// Pilot estimate of kappa: worst per-token relative variance of the path
/// weights over a pilot run of uniform completions.
double estimate_kappa(const Acceptor& acceptor, const TokenTable& table,
                      std::span<const int> prefix, int pilot_draws, std::uint64_t seed);

struct MlpBaselineResult {
    std::size_t argmax_index;
    std::uint64_t draws;
};

/// Samples from the distribution until the known top element appears.
MlpBaselineResult classical_mlp_baseline(const PathDistribution& dist, std::uint64_t seed);

}  // namespace qsd
