#include "qsd/decoder_model.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "qsd/powerlaw.hpp"

namespace qsd {

using nlohmann::json;

Acceptor::Acceptor(std::vector<std::string> alphabet, std::vector<std::string> states,
                   int start, std::vector<int> accepting,
                   const std::vector<std::array<int, 3>>& transitions)
    : alphabet_(std::move(alphabet)), state_names_(std::move(states)), start_(start) {
    const int ns = static_cast<int>(state_names_.size());
    const int nt = static_cast<int>(alphabet_.size());
    if (ns == 0 || nt == 0) throw input_error("Acceptor: empty states or alphabet");
    if (start_ < 0 || start_ >= ns) throw input_error("Acceptor: start state out of range");
    accepting_.assign(ns, 0);
    for (int s : accepting) {
        if (s < 0 || s >= ns) throw input_error("Acceptor: accepting state out of range");
        accepting_[s] = 1;
    }
    next_.assign(ns, std::vector<int>(nt, -1));
    for (const auto& t : transitions) {
        auto [from, tok, to] = t;
        if (from < 0 || from >= ns || to < 0 || to >= ns || tok < 0 || tok >= nt)
            throw input_error("Acceptor: transition index out of range");
        if (next_[from][tok] != -1 && next_[from][tok] != to)
            throw input_error("Acceptor: nondeterministic transition on (" +
                              state_names_[from] + ", " + alphabet_[tok] + ")");
        next_[from][tok] = to;
    }
}

Acceptor Acceptor::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("Acceptor: JSON parse failure: ") + e.what());
    }
    try {
        std::vector<std::string> alphabet = j.at("alphabet").get<std::vector<std::string>>();
        std::vector<std::string> states = j.at("states").get<std::vector<std::string>>();
        std::map<std::string, int> sid, tid;
        for (std::size_t i = 0; i < states.size(); ++i) sid[states[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < alphabet.size(); ++i) tid[alphabet[i]] = static_cast<int>(i);
        auto state_id = [&](const std::string& s) {
            auto it = sid.find(s);
            if (it == sid.end()) throw input_error("Acceptor: unknown state '" + s + "'");
            return it->second;
        };
        auto token_id = [&](const std::string& s) {
            auto it = tid.find(s);
            if (it == tid.end()) throw input_error("Acceptor: unknown token '" + s + "'");
            return it->second;
        };
        int start = state_id(j.at("start").get<std::string>());
        std::vector<int> accepting;
        for (const auto& s : j.at("accepting")) accepting.push_back(state_id(s.get<std::string>()));
        std::vector<std::array<int, 3>> transitions;
        for (const auto& t : j.at("transitions")) {
            if (!t.is_array() || t.size() != 3)
                throw input_error("Acceptor: transition must be [state, token, state]");
            transitions.push_back({state_id(t[0].get<std::string>()),
                                   token_id(t[1].get<std::string>()),
                                   state_id(t[2].get<std::string>())});
        }
        return Acceptor(std::move(alphabet), std::move(states), start, std::move(accepting),
                        transitions);
    } catch (const json::exception& e) {
        throw input_error(std::string("Acceptor: bad JSON structure: ") + e.what());
    }
}

Acceptor Acceptor::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("Acceptor: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

Acceptor Acceptor::full_tree(int R) {
    if (R < 1) throw input_error("full_tree: R must be >= 1");
    std::vector<std::string> alphabet(R);
    for (int i = 0; i < R; ++i) alphabet[i] = "t" + std::to_string(i);
    std::vector<std::array<int, 3>> transitions;
    for (int i = 0; i < R; ++i) transitions.push_back({0, i, 0});
    return Acceptor(std::move(alphabet), {"q0"}, 0, {0}, transitions);
}

TokenTable::TokenTable(int n, std::vector<std::vector<double>> probs)
    : n_(n), probs_(std::move(probs)) {
    if (n_ < 1 || probs_.size() != static_cast<std::size_t>(n_))
        throw input_error("TokenTable: row count != n");
    const std::size_t width = probs_[0].size();
    if (width == 0) throw input_error("TokenTable: empty rows");
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        if (probs_[i].size() != width) throw input_error("TokenTable: ragged rows");
        KahanSum sum;
        for (double p : probs_[i]) {
            if (p < 0) throw input_error("TokenTable: negative probability");
            sum.add(p);
        }
        if (std::abs(sum.value() - 1.0) > 1e-12)
            throw input_error("TokenTable: row " + std::to_string(i) + " sums to " +
                              std::to_string(sum.value()) + ", not 1");
    }
    header_.resize(width);
    for (std::size_t t = 0; t < width; ++t) header_[t] = "t" + std::to_string(t);
}

TokenTable TokenTable::from_csv_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw input_error("TokenTable: empty file");
    std::vector<std::string> header;
    {
        std::istringstream hs(line);
        std::string cell;
        while (std::getline(hs, cell, ',')) header.push_back(cell);
    }
    std::vector<std::vector<double>> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ls, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw input_error("TokenTable: line " + std::to_string(lineno) +
                                  ": bad number '" + cell + "'");
            }
        }
        if (row.size() != header.size())
            throw input_error("TokenTable: line " + std::to_string(lineno) +
                              ": expected " + std::to_string(header.size()) + " columns");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw input_error("TokenTable: no data rows");
    TokenTable t(static_cast<int>(rows.size()), std::move(rows));
    t.set_header(std::move(header));
    return t;
}

TokenTable TokenTable::from_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("TokenTable: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_csv_text(ss.str());
}

TokenTable TokenTable::power_law_rows(int n, int num_tokens, double k) {
    PowerLawSpec spec(num_tokens, k);
    const double H = harmonic_number(num_tokens, k);
    std::vector<double> row(num_tokens);
    for (int t = 0; t < num_tokens; ++t)
        row[t] = std::pow(static_cast<double>(t + 1), -k) / H;
    return TokenTable(n, std::vector<std::vector<double>>(n, row));
}

std::size_t PathDistribution::top_index() const {
    if (entries.empty()) throw empty_language_error("PathDistribution: empty");
    std::size_t best = 0;
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i].log_prob > entries[best].log_prob) best = i;
    // entries are lexicographic, so the first maximal one wins ties
    return best;
}

PathDistribution enumerate_paths(const Acceptor& acceptor, const TokenTable& table,
                                 std::size_t budget) {
    if (acceptor.num_tokens() != table.num_tokens())
        throw input_error("enumerate_paths: alphabet size mismatch");
    const int n = table.length();
    const int nt = acceptor.num_tokens();

    PathDistribution dist;
    std::vector<int> tokens(n);

    // depth-first in token order -> lexicographic output
    auto rec = [&](auto&& self, int state, int pos, double logp) -> void {
        if (pos == n) {
            if (acceptor.accepting(state)) {
                if (dist.entries.size() >= budget)
                    throw enumeration_overflow("enumerate_paths: more than " +
                                               std::to_string(budget) + " accepted paths");
                dist.entries.push_back({tokens, logp});
            }
            return;
        }
        for (int t = 0; t < nt; ++t) {
            const int nxt = acceptor.step(state, t);
            if (nxt < 0) continue;
            tokens[pos] = t;
            self(self, nxt, pos + 1, logp + std::log(table.prob(pos, t)));
        }
    };
    rec(rec, acceptor.start(), 0, 0.0);

    if (dist.entries.empty())
        throw empty_language_error("enumerate_paths: no accepted string of this length");

    double max_log = -std::numeric_limits<double>::infinity();
    for (const auto& e : dist.entries) max_log = std::max(max_log, e.log_prob);
    KahanSum acc;
    for (const auto& e : dist.entries) acc.add(std::exp(e.log_prob - max_log));
    dist.log_normalizer = max_log + std::log(acc.value());
    for (auto& e : dist.entries) e.log_prob -= dist.log_normalizer;
    return dist;
}

UniformSampler::UniformSampler(const Acceptor& acceptor, int n)
    : acceptor_(&acceptor), n_(n) {
    if (n < 1) throw input_error("UniformSampler: n must be >= 1");
    const int ns = acceptor.num_states();
    const int nt = acceptor.num_tokens();
    count_.assign(n + 1, std::vector<double>(ns, 0.0));
    for (int s = 0; s < ns; ++s) count_[n][s] = acceptor.accepting(s) ? 1.0 : 0.0;
    for (int pos = n - 1; pos >= 0; --pos)
        for (int s = 0; s < ns; ++s) {
            double acc = 0.0;
            for (int t = 0; t < nt; ++t) {
                const int nxt = acceptor.step(s, t);
                if (nxt >= 0) acc += count_[pos + 1][nxt];
            }
            count_[pos][s] = acc;
        }
    if (count_[0][acceptor.start()] <= 0.0)
        throw empty_language_error("UniformSampler: language empty at this length");
}

void UniformSampler::sample_completion(int state, int position, std::mt19937_64& rng,
                                       std::vector<int>& out) const {
    const int nt = acceptor_->num_tokens();
    int s = state;
    for (int pos = position; pos < n_; ++pos) {
        const double total = count_[pos][s];
        double u = next_canonical(rng) * total;
        int chosen = -1;
        for (int t = 0; t < nt; ++t) {
            const int nxt = acceptor_->step(s, t);
            if (nxt < 0) continue;
            const double w = count_[pos + 1][nxt];
            if (u < w) {
                chosen = t;
                s = nxt;
                break;
            }
            u -= w;
        }
        if (chosen < 0) {
            // numeric slack: fall back to the last viable token
            for (int t = nt - 1; t >= 0; --t)
                if (acceptor_->step(s, t) >= 0 && count_[pos + 1][acceptor_->step(s, t)] > 0) {
                    chosen = t;
                    s = acceptor_->step(s, t);
                    break;
                }
        }
        out.push_back(chosen);
    }
}

std::vector<int> UniformSampler::sample(std::mt19937_64& rng) const {
    std::vector<int> out;
    out.reserve(n_);
    sample_completion(acceptor_->start(), 0, rng, out);
    return out;
}

namespace {

// Walks the prefix; throws on a dead prefix. Returns (state, suffix-mass DP).
// mass[pos][state] = sum over accepted completions of prod p_{i,token}.
struct SuffixMass {
    int prefix_state;
    std::vector<std::vector<double>> mass;
};

SuffixMass suffix_mass(const Acceptor& acceptor, const TokenTable& table,
                       std::span<const int> prefix) {
    const int n = table.length();
    const int ns = acceptor.num_states();
    const int nt = acceptor.num_tokens();
    if (static_cast<int>(prefix.size()) >= n)
        throw input_error("conditional: prefix must be shorter than n");

    int state = acceptor.start();
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        state = acceptor.step(state, prefix[i]);
        if (state < 0) throw input_error("conditional: prefix rejected by acceptor");
    }

    std::vector<std::vector<double>> mass(n + 1, std::vector<double>(ns, 0.0));
    for (int s = 0; s < ns; ++s) mass[n][s] = acceptor.accepting(s) ? 1.0 : 0.0;
    for (int pos = n - 1; pos >= 0; --pos)
        for (int s = 0; s < ns; ++s) {
            double acc = 0.0;
            for (int t = 0; t < nt; ++t) {
                const int nxt = acceptor.step(s, t);
                if (nxt >= 0) acc += table.prob(pos, t) * mass[pos + 1][nxt];
            }
            mass[pos][s] = acc;
        }
    return {state, std::move(mass)};
}

}  // namespace

std::vector<double> biased_conditional_exact(const Acceptor& acceptor, const TokenTable& table,
                                             std::span<const int> prefix) {
    auto sm = suffix_mass(acceptor, table, prefix);
    const int pos = static_cast<int>(prefix.size());
    const int nt = acceptor.num_tokens();
    std::vector<double> cond(nt, 0.0);
    double total = 0.0;
    for (int t = 0; t < nt; ++t) {
        const int nxt = acceptor.step(sm.prefix_state, t);
        if (nxt < 0) continue;
        cond[t] = table.prob(pos, t) * sm.mass[pos + 1][nxt];
        total += cond[t];
    }
    if (total <= 0.0) throw input_error("biased_conditional_exact: dead prefix");
    for (double& v : cond) v /= total;
    return cond;
}

std::vector<double> biased_conditional_estimate(const Acceptor& acceptor, const TokenTable& table,
                                                std::span<const int> prefix, std::uint64_t samples,
                                                std::uint64_t seed) {
    if (samples < 1) throw input_error("biased_conditional_estimate: need samples >= 1");
    const int n = table.length();
    const int nt = acceptor.num_tokens();
    const int pos = static_cast<int>(prefix.size());

    UniformSampler sampler(acceptor, n);
    int state = acceptor.start();
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        state = acceptor.step(state, prefix[i]);
        if (state < 0) throw input_error("biased_conditional_estimate: prefix rejected");
    }
    if (sampler.count_from(state, pos) <= 0.0)
        throw input_error("biased_conditional_estimate: dead prefix");

    std::mt19937_64 rng(seed);
    std::vector<int> completion;
    std::vector<double> logw(samples);
    std::vector<int> first_token(samples);

    double max_logw = -std::numeric_limits<double>::infinity();
    for (std::uint64_t s = 0; s < samples; ++s) {
        completion.clear();
        sampler.sample_completion(state, pos, rng, completion);
        double lw = 0.0;
        for (int i = 0; i < pos; ++i) lw += std::log(table.prob(i, prefix[i]));
        for (std::size_t i = 0; i < completion.size(); ++i)
            lw += std::log(table.prob(pos + static_cast<int>(i), completion[i]));
        logw[s] = lw;
        first_token[s] = completion.front();
        max_logw = std::max(max_logw, lw);
    }

    std::vector<double> num(nt, 0.0);
    double den = 0.0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        const double w = std::exp(logw[s] - max_logw);
        num[first_token[s]] += w;
        den += w;
    }
    std::vector<double> d(nt, 0.0);
    for (int t = 0; t < nt; ++t) d[t] = num[t] / den;
    return d;
}

std::uint64_t sample_size_bound(double relative_variance_kappa, int n, double epsilon) {
    if (!(relative_variance_kappa > 0)) throw std::domain_error("sample_size_bound: kappa > 0");
    if (!(epsilon > 0) || epsilon >= 1) throw std::domain_error("sample_size_bound: eps in (0,1)");
    if (n < 1) throw std::domain_error("sample_size_bound: n >= 1");
    return static_cast<std::uint64_t>(
        std::ceil(relative_variance_kappa * static_cast<double>(n) * n / (epsilon * epsilon)));
}

double estimate_kappa(const Acceptor& acceptor, const TokenTable& table,
                      std::span<const int> prefix, int pilot_draws, std::uint64_t seed) {
    const int n = table.length();
    const int nt = acceptor.num_tokens();
    const int pos = static_cast<int>(prefix.size());
    UniformSampler sampler(acceptor, n);
    int state = acceptor.start();
    for (std::size_t i = 0; i < prefix.size(); ++i) state = acceptor.step(state, prefix[i]);

    std::mt19937_64 rng(seed);
    std::vector<int> completion;
    std::vector<double> w(pilot_draws);
    std::vector<int> tok(pilot_draws);
    double max_lw = -std::numeric_limits<double>::infinity();
    std::vector<double> lws(pilot_draws);
    for (int s = 0; s < pilot_draws; ++s) {
        completion.clear();
        sampler.sample_completion(state, pos, rng, completion);
        double lw = 0.0;
        for (std::size_t i = 0; i < completion.size(); ++i)
            lw += std::log(table.prob(pos + static_cast<int>(i), completion[i]));
        lws[s] = lw;
        tok[s] = completion.front();
        max_lw = std::max(max_lw, lw);
    }
    for (int s = 0; s < pilot_draws; ++s) w[s] = std::exp(lws[s] - max_lw);

    // relative variance of Y_a = chi[first token = a] * weight, worst case
    // over tokens seen at least twice; the plain weight variance is a floor
    double kappa = 0.0;
    {
        double m1 = 0.0, m2 = 0.0;
        for (double v : w) {
            m1 += v;
            m2 += v * v;
        }
        m1 /= pilot_draws;
        m2 /= pilot_draws;
        const double var = std::max(0.0, m2 - m1 * m1);
        kappa = var / (m1 * m1);
    }
    for (int a = 0; a < nt; ++a) {
        double m1 = 0.0, m2 = 0.0;
        int hits = 0;
        for (int s = 0; s < pilot_draws; ++s) {
            const double v = (tok[s] == a) ? w[s] : 0.0;
            m1 += v;
            m2 += v * v;
            hits += (tok[s] == a);
        }
        if (hits < 2) continue;
        m1 /= pilot_draws;
        m2 /= pilot_draws;
        const double var = std::max(0.0, m2 - m1 * m1);
        kappa = std::max(kappa, var / (m1 * m1));
    }
    return std::max(kappa, 1e-6);
}

MlpBaselineResult classical_mlp_baseline(const PathDistribution& dist, std::uint64_t seed) {
    const std::size_t top = dist.top_index();
    std::vector<double> cdf(dist.entries.size());
    KahanSum acc;
    for (std::size_t i = 0; i < dist.entries.size(); ++i) {
        acc.add(std::exp(dist.entries[i].log_prob));
        cdf[i] = acc.value();
    }
    cdf.back() = std::max(cdf.back(), 1.0);

    std::mt19937_64 rng(seed);
    std::uint64_t draws = 0;
    while (true) {
        ++draws;
        const double u = next_canonical(rng);
        const std::size_t i = static_cast<std::size_t>(
            std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        if (i == top) return {top, draws};
    }
}

}  // namespace qsd
