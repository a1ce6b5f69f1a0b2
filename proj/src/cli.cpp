#include "qsd/cli.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qsd/beam_analysis.hpp"
#include "qsd/closed_form.hpp"
#include "qsd/decoder_model.hpp"
#include "qsd/powerlaw.hpp"
#include "qsd/quantum_sim.hpp"
#include "qsd/rankfreq.hpp"
#include "qsd/runtime_formulas.hpp"

namespace qsd::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitBudget = 4;
constexpr int kExitParse = 5;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Output is staged in memory and written in one shot, so a failing command
// never leaves a partial file behind.
void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw input_error("cannot open output file " + path);
    out << content;
    if (!out) throw input_error("failed writing " + path);
}

struct Common {
    std::string out;
    std::string config;
    std::uint64_t seed = 0;
    int threads = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--out", out, "output path ('-' or empty: stdout)");
        cmd->add_option("--seed", seed, "root RNG seed");
        cmd->add_option("--threads", threads, "worker threads (0: hardware default)");
    }
    void apply() const {
        if (threads > 0) omp_set_num_threads(threads);
    }
};

std::string meta_line(const std::string& command, const std::vector<std::pair<std::string, std::string>>& kv) {
    std::string line = "# qsd " + std::string(kVersion) + " " + command;
    for (const auto& [k, v] : kv) line += " " + k + "=" + v;
    line += "\n";
    return line;
}

// ---- curves ---------------------------------------------------------------

struct CurvesArgs {
    std::vector<int> R_list;
    double k_min = 0.0, k_max = 10.0, k_step = 0.05;
};

int cmd_curves(const CurvesArgs& a, const Common& common) {
    if (a.R_list.empty()) throw CLI::ValidationError("--R", "need at least one R");
    for (int R : a.R_list)
        if (R < 2) throw CLI::ValidationError("--R", "R must be >= 2");
    if (!(a.k_step > 0) || a.k_max < a.k_min)
        throw CLI::ValidationError("--k-step", "k grid must ascend");

    std::vector<double> ks;
    for (double k = a.k_min; k <= a.k_max + 1e-12; k += a.k_step) ks.push_back(k);

    std::vector<std::vector<double>> f(a.R_list.size(), std::vector<double>(ks.size()));
#pragma omp parallel for collapse(2) schedule(static)
    for (std::size_t i = 0; i < a.R_list.size(); ++i)
        for (std::size_t j = 0; j < ks.size(); ++j)
            f[i][j] = speedup_exponent(a.R_list[i], ks[j]);

    std::string csv = meta_line("curves", {{"k_min", fmt(a.k_min)},
                                           {"k_max", fmt(a.k_max)},
                                           {"k_step", fmt(a.k_step)}});
    csv += "R,k,f\n";
    for (std::size_t i = 0; i < a.R_list.size(); ++i)
        for (std::size_t j = 0; j < ks.size(); ++j)
            csv += std::to_string(a.R_list[i]) + "," + fmt(ks[j]) + "," + fmt(f[i][j]) + "\n";
    write_output(common.out, csv);
    return kExitOk;
}

// ---- runtime ----------------------------------------------------------------

struct RuntimeArgs {
    int R = 10;
    double k = 2.0;
    int n_min = 1, n_max = 50, n_step = 1;
};

int cmd_runtime(const RuntimeArgs& a, const Common& common) {
    if (a.R < 2) throw CLI::ValidationError("--R", "R must be >= 2");
    if (!(a.k > 0)) throw CLI::ValidationError("--k", "k must be > 0");
    if (a.n_min < 1 || a.n_max < a.n_min || a.n_step < 1)
        throw CLI::ValidationError("--n-min", "bad n range");

    std::vector<int> ns;
    for (int n = a.n_min; n <= a.n_max; n += a.n_step) ns.push_back(n);

    struct Row {
        int n;
        double rt1, rt1c, rt2, rt_term, rt_prime, ratio;
    };
    std::vector<Row> rows(ns.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const int n = ns[i];
        RuntimeQuery q(a.R, a.k, n);
        const auto r2 = rt2_full(a.R, a.k, n);
        const auto r1c = rt1_continuous(q);
        rows[i] = {n,
                   rt1(q).log10(),
                   r1c.log10(),
                   r2.total.log10(),
                   r2.rt_term.log10(),
                   r2.rt_prime,
                   std::exp(r2.total.ln - r1c.ln)};
    }

    std::string csv = meta_line("runtime", {{"R", std::to_string(a.R)}, {"k", fmt(a.k)}});
    csv += "n,log10_rt1,log10_rt1_continuous,log10_rt2,log10_rt_term,rt_prime,ratio_rt2_rt1c\n";
    for (const auto& r : rows)
        csv += std::to_string(r.n) + "," + fmt(r.rt1) + "," + fmt(r.rt1c) + "," + fmt(r.rt2) +
               "," + fmt(r.rt_term) + "," + fmt(r.rt_prime) + "," + fmt(r.ratio) + "\n";
    write_output(common.out, csv);
    return kExitOk;
}

// ---- beam -------------------------------------------------------------------

struct BeamArgs {
    int R = 3;
    double k = 2.91;
    std::string mode;  // capped | fsplit | fraction
    std::string nmax = "";
    double fsplit = 0.0, fsplit_exp = -1.0;
    double g = 0.0, g_exp = -1.0;
    double c0 = 0.0, c0_exp = -1.0;
    int n_min = 10, n_max = 500, n_step = 10;
};

int cmd_beam(const BeamArgs& a, const Common& common) {
    if (a.R < 2) throw CLI::ValidationError("--R", "R must be >= 2");
    if (!(a.k > 0)) throw CLI::ValidationError("--k", "k must be > 0");
    if (a.n_min < 1 || a.n_max < a.n_min || a.n_step < 1)
        throw CLI::ValidationError("--n-min", "bad n range");

    std::vector<int> ns;
    for (int n = a.n_min; n <= a.n_max; n += a.n_step) ns.push_back(n);

    std::string csv;
    const std::string header = "R,k,n,mode,parameter,log10_N_hyp,log10_runtime,f_split\n";

    if (a.mode == "capped") {
        double log10_nmax = std::numeric_limits<double>::infinity();
        if (a.nmax.empty()) throw CLI::ValidationError("--nmax", "capped mode needs --nmax");
        if (a.nmax != "inf") {
            const double v = std::stod(a.nmax);
            if (!(v >= 1)) throw CLI::ValidationError("--nmax", "N_max must be >= 1 or 'inf'");
            log10_nmax = std::log10(v);
        }
        auto pts = capped_width_sweep(a.R, a.k, std::isinf(log10_nmax) ? 1e18 : log10_nmax, ns);
        csv = meta_line("beam", {{"R", std::to_string(a.R)},
                                 {"k", fmt(a.k)},
                                 {"mode", "capped"},
                                 {"nmax", a.nmax}});
        csv += header;
        for (const auto& p : pts)
            csv += std::to_string(a.R) + "," + fmt(a.k) + "," + std::to_string(p.n) + ",capped," +
                   a.nmax + "," + fmt(p.log10_n_hyp) + "," + fmt(p.log10_runtime) + "," +
                   fmt(p.f_split) + "\n";
    } else if (a.mode == "fsplit") {
        if (a.fsplit <= 0 && a.fsplit_exp < 0)
            throw CLI::ValidationError("--fsplit", "fsplit mode needs --fsplit or --fsplit-exp");
        struct Row {
            int n;
            double f, nh, rt;
        };
        std::vector<Row> rows(ns.size());
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < ns.size(); ++i) {
            const int n = ns[i];
            const double f = (a.fsplit_exp >= 0) ? std::pow(n, -a.fsplit_exp) : a.fsplit;
            double g = retained_mass(a.R, a.k, n, f);
            if (a.g_exp >= 0) g = std::pow(n, -a.g_exp);
            if (a.g > 0) g = a.g;
            g = std::clamp(g, 1e-300, 1.0);
            rows[i] = {n, f, retained_hypotheses(a.R, a.k, n, f).log10(),
                       beam_runtime_bound(a.R, a.k, n, f, g).log10()};
        }
        const std::string param =
            (a.fsplit_exp >= 0) ? "n^-" + fmt(a.fsplit_exp) : fmt(a.fsplit);
        csv = meta_line("beam", {{"R", std::to_string(a.R)},
                                 {"k", fmt(a.k)},
                                 {"mode", "fsplit"},
                                 {"fsplit", param}});
        csv += header;
        for (const auto& r : rows)
            csv += std::to_string(a.R) + "," + fmt(a.k) + "," + std::to_string(r.n) + ",fsplit," +
                   param + "," + fmt(r.nh) + "," + fmt(r.rt) + "," + fmt(r.f) + "\n";
    } else if (a.mode == "fraction") {
        if (a.c0 <= 0 && a.c0_exp < 0)
            throw CLI::ValidationError("--c0", "fraction mode needs --c0 or --c0-exp");
        struct Row {
            int n;
            double f, nh, rt;
        };
        std::vector<Row> rows(ns.size());
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < ns.size(); ++i) {
            const int n = ns[i];
            const double c0 = (a.c0_exp >= 0) ? std::pow(n, -a.c0_exp) : a.c0;
            if (!(c0 > 0) || c0 > 1) throw infeasible_error("beam: retained fraction outside (0,1]");
            const double f = optimize_fsplit(a.R, a.k, n, c0);
            rows[i] = {n, f, retained_hypotheses(a.R, a.k, n, f).log10(),
                       beam_runtime_bound(a.R, a.k, n, f, c0).log10()};
        }
        const std::string param = (a.c0_exp >= 0) ? "n^-" + fmt(a.c0_exp) : fmt(a.c0);
        csv = meta_line("beam", {{"R", std::to_string(a.R)},
                                 {"k", fmt(a.k)},
                                 {"mode", "fraction"},
                                 {"c0", param}});
        csv += header;
        for (const auto& r : rows)
            csv += std::to_string(a.R) + "," + fmt(a.k) + "," + std::to_string(r.n) +
                   ",fraction," + param + "," + fmt(r.nh) + "," + fmt(r.rt) + "," + fmt(r.f) + "\n";
    } else {
        throw CLI::ValidationError("--mode", "mode must be capped, fsplit or fraction");
    }
    write_output(common.out, csv);
    return kExitOk;
}

// ---- simulate ----------------------------------------------------------------

struct SimulateArgs {
    std::string acceptor_path;
    std::string table_path;
    std::string algo = "search";  // search | beam
    std::string score = "prob";   // prob | random
    std::uint64_t score_seed = 1;
    double p0 = 0.0;
    int trials = 100;
    int rounds = 0;  // 0: default ceil(log2 N) + 3
    std::size_t budget = 1'000'000;
};

int cmd_simulate(const SimulateArgs& a, const Common& common) {
    if (a.trials < 1) throw CLI::ValidationError("--trials", "need >= 1 trial");
    if (a.algo != "search" && a.algo != "beam")
        throw CLI::ValidationError("--algo", "algo must be search or beam");
    if (a.score != "prob" && a.score != "random")
        throw CLI::ValidationError("--score", "score must be prob or random");

    Acceptor acceptor = Acceptor::from_json_file(a.acceptor_path);
    TokenTable table = TokenTable::from_csv_file(a.table_path);
    PathDistribution dist = enumerate_paths(acceptor, table, a.budget);

    std::vector<double> scores(dist.entries.size());
    if (a.score == "prob") {
        for (std::size_t i = 0; i < dist.entries.size(); ++i)
            scores[i] = dist.entries[i].log_prob;
    } else {
        std::mt19937_64 rng(a.score_seed);
        for (double& s : scores) s = next_canonical(rng);
    }
    AdviceState advice = prepare_advice(dist, scores);

    const std::size_t N = advice.size();
    std::size_t top_scored = 0;
    for (std::size_t i = 1; i < N; ++i)
        if (advice.scores[i] > advice.scores[top_scored]) top_scored = i;
    const double overlap = std::sqrt(advice.probs[top_scored]);

    int rounds = a.rounds;
    if (rounds <= 0) {
        std::size_t n_eff = N;
        if (a.algo == "beam") {
            n_eff = 0;
            for (std::size_t i = 0; i < N; ++i)
                if (advice.probs[i] >= a.p0) ++n_eff;
            if (n_eff == 0) throw infeasible_error("simulate: beam retains nothing");
        }
        rounds = default_rounds(n_eff);
    }

    std::vector<SearchOutcome> outcomes(a.trials);
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < a.trials; ++t) {
        const std::uint64_t trial_seed = split_seed(common.seed, static_cast<std::uint64_t>(t));
        outcomes[t] = (a.algo == "search")
                          ? quantum_search_decode(advice, rounds, trial_seed)
                          : quantum_beam_decode(advice, a.p0, rounds, trial_seed);
    }

    std::string csv = meta_line("simulate", {{"acceptor", a.acceptor_path},
                                             {"table", a.table_path},
                                             {"algo", a.algo},
                                             {"score", a.score},
                                             {"p0", fmt(a.p0)},
                                             {"trials", std::to_string(a.trials)},
                                             {"seed", std::to_string(common.seed)}});
    csv += "trial,N,overlap,queries,success,rounds\n";
    double mean_q = 0.0, succ = 0.0;
    for (int t = 0; t < a.trials; ++t) {
        const auto& o = outcomes[t];
        csv += std::to_string(t) + "," + std::to_string(N) + "," + fmt(overlap) + "," +
               std::to_string(o.oracle_queries) + "," + (o.success ? "1" : "0") + "," +
               std::to_string(o.rounds) + "\n";
        mean_q += static_cast<double>(o.oracle_queries);
        succ += o.success ? 1.0 : 0.0;
    }
    mean_q /= a.trials;
    succ /= a.trials;
    csv += "summary," + std::to_string(N) + "," + fmt(overlap) + "," + fmt(mean_q) + "," +
           fmt(succ) + "," + std::to_string(rounds) + "\n";
    write_output(common.out, csv);
    return kExitOk;
}

// ---- fit ---------------------------------------------------------------------

struct FitArgs {
    std::string input;
    int rank_min = 1;
    int rank_max = 0;  // 0: full width
};

int cmd_fit(const FitArgs& a, const Common& common) {
    FrameDump dump = ingest_frames(a.input);
    std::vector<double> profile = rank_frequency(dump);
    int hi = a.rank_max > 0 ? a.rank_max : static_cast<int>(profile.size());
    // drop the numerically meaningless tail
    while (hi > a.rank_min &&
           profile[hi - 1] < 10.0 * std::numeric_limits<double>::epsilon())
        --hi;
    FitResult fit = fit_powerlaw(profile, a.rank_min, hi);
    write_output(common.out, fit.to_json() + "\n");
    return kExitOk;
}

// ---- sample ------------------------------------------------------------------

struct SampleArgs {
    int R = 0;
    double k = 0.0;
    std::uint64_t count = 0;
    std::uint64_t frames = 0;
    std::uint64_t draws = 0;  // 0: exact pmf frames
    std::string acceptor_path;
    int n = 0;
};

int cmd_sample(const SampleArgs& a, const Common& common) {
    if (!a.acceptor_path.empty()) {
        // uniform accepted strings
        if (a.n < 1 || a.count < 1)
            throw CLI::ValidationError("--n", "acceptor sampling needs --n and --count");
        Acceptor acceptor = Acceptor::from_json_file(a.acceptor_path);
        UniformSampler sampler(acceptor, a.n);
        std::mt19937_64 rng(common.seed);
        std::string csv = meta_line("sample", {{"acceptor", a.acceptor_path},
                                               {"n", std::to_string(a.n)},
                                               {"seed", std::to_string(common.seed)}});
        csv += "string\n";
        for (std::uint64_t i = 0; i < a.count; ++i) {
            auto tokens = sampler.sample(rng);
            std::string s;
            for (std::size_t j = 0; j < tokens.size(); ++j) {
                if (j) s += " ";
                s += acceptor.alphabet()[tokens[j]];
            }
            csv += s + "\n";
        }
        write_output(common.out, csv);
        return kExitOk;
    }

    if (a.R < 1 || !(a.k >= 0)) throw CLI::ValidationError("--R", "need --R and --k");
    PowerLawSpec spec(a.R, a.k);

    if (a.frames > 0) {
        // synthetic softmax dump: per frame the exact pmf under a random
        // symbol permutation, or an empirical histogram of --draws draws
        const double H = harmonic_number(a.R, a.k);
        std::vector<double> pmf_row(a.R);
        for (int r = 1; r <= a.R; ++r) pmf_row[r - 1] = std::pow(r, -a.k) / H;
        std::mt19937_64 rng(common.seed);
        PowerLawSampler sampler(spec);

        std::string csv = meta_line("sample", {{"R", std::to_string(a.R)},
                                               {"k", fmt(a.k)},
                                               {"frames", std::to_string(a.frames)},
                                               {"draws", std::to_string(a.draws)},
                                               {"seed", std::to_string(common.seed)}});
        for (int s = 0; s < a.R; ++s) csv += (s ? ",symbol_" : "symbol_") + std::to_string(s);
        csv += "\n";
        std::vector<int> perm(a.R);
        std::vector<double> frame(a.R);
        for (std::uint64_t f = 0; f < a.frames; ++f) {
            for (int i = 0; i < a.R; ++i) perm[i] = i;
            for (int i = a.R - 1; i > 0; --i)
                std::swap(perm[i], perm[static_cast<int>(next_canonical(rng) * (i + 1))]);
            std::fill(frame.begin(), frame.end(), 0.0);
            if (a.draws == 0) {
                for (int r = 0; r < a.R; ++r) frame[perm[r]] = pmf_row[r];
            } else {
                for (std::uint64_t d = 0; d < a.draws; ++d)
                    frame[perm[sampler(rng) - 1]] += 1.0 / static_cast<double>(a.draws);
            }
            for (int s = 0; s < a.R; ++s) csv += (s ? "," : "") + fmt(frame[s]);
            csv += "\n";
        }
        write_output(common.out, csv);
        return kExitOk;
    }

    if (a.count < 1) throw CLI::ValidationError("--count", "need --count or --frames");
    auto ranks = sample(spec, common.seed, a.count);
    std::string csv = meta_line("sample", {{"R", std::to_string(a.R)},
                                           {"k", fmt(a.k)},
                                           {"count", std::to_string(a.count)},
                                           {"seed", std::to_string(common.seed)}});
    csv += "rank\n";
    for (int r : ranks) csv += std::to_string(r) + "\n";
    write_output(common.out, csv);
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"quantum search decoder analysis toolkit"};
    app.set_version_flag("--version", kVersion);
    app.set_config("--config")->configurable(false);
    app.require_subcommand(1);

    Common common;
    CurvesArgs curves;
    RuntimeArgs runtime;
    BeamArgs beam;
    SimulateArgs simulate;
    FitArgs fit;
    SampleArgs sampleargs;

    auto* c_curves = app.add_subcommand("curves", "speedup exponent f(R,k) grid");
    c_curves->add_option("--R", curves.R_list, "alphabet sizes")->delimiter(',');
    c_curves->add_option("--k-min", curves.k_min, "grid start");
    c_curves->add_option("--k-max", curves.k_max, "grid end");
    c_curves->add_option("--k-step", curves.k_step, "grid step");
    common.attach(c_curves);

    auto* c_runtime = app.add_subcommand("runtime", "query-count curves over n");
    c_runtime->add_option("--R", runtime.R);
    c_runtime->add_option("--k", runtime.k);
    c_runtime->add_option("--n-min", runtime.n_min);
    c_runtime->add_option("--n-max", runtime.n_max);
    c_runtime->add_option("--n-step", runtime.n_step);
    common.attach(c_runtime);

    auto* c_beam = app.add_subcommand("beam", "beam pruning sweeps");
    c_beam->add_option("--R", beam.R);
    c_beam->add_option("--k", beam.k);
    c_beam->add_option("--mode", beam.mode, "capped | fsplit | fraction")->required();
    c_beam->add_option("--nmax", beam.nmax, "retained-width cap (number or 'inf')");
    c_beam->add_option("--fsplit", beam.fsplit);
    c_beam->add_option("--fsplit-exp", beam.fsplit_exp, "f_split = n^-exp");
    c_beam->add_option("--g", beam.g, "post-amplification retained mass");
    c_beam->add_option("--g-exp", beam.g_exp, "g = n^-exp");
    c_beam->add_option("--c0", beam.c0, "retained-mass target");
    c_beam->add_option("--c0-exp", beam.c0_exp, "C0 = n^-exp");
    c_beam->add_option("--n-min", beam.n_min);
    c_beam->add_option("--n-max", beam.n_max);
    c_beam->add_option("--n-step", beam.n_step);
    common.attach(c_beam);

    auto* c_sim = app.add_subcommand("simulate", "quantum decode trial batches");
    c_sim->add_option("--acceptor", simulate.acceptor_path)->required();
    c_sim->add_option("--table", simulate.table_path)->required();
    c_sim->add_option("--algo", simulate.algo, "search | beam");
    c_sim->add_option("--score", simulate.score, "prob | random");
    c_sim->add_option("--score-seed", simulate.score_seed);
    c_sim->add_option("--p0", simulate.p0, "beam probability cutoff");
    c_sim->add_option("--trials", simulate.trials);
    c_sim->add_option("--rounds", simulate.rounds, "0: ceil(log2 N) + 3");
    c_sim->add_option("--budget", simulate.budget, "max enumerated hypotheses");
    common.attach(c_sim);

    auto* c_fit = app.add_subcommand("fit", "rank-frequency power-law fit");
    c_fit->add_option("--input", fit.input)->required();
    c_fit->add_option("--rank-min", fit.rank_min);
    c_fit->add_option("--rank-max", fit.rank_max, "0: full profile");
    common.attach(c_fit);

    auto* c_sample = app.add_subcommand("sample", "power-law / grammar sampling");
    c_sample->add_option("--R", sampleargs.R);
    c_sample->add_option("--k", sampleargs.k);
    c_sample->add_option("--count", sampleargs.count);
    c_sample->add_option("--frames", sampleargs.frames, "emit a synthetic softmax dump");
    c_sample->add_option("--draws", sampleargs.draws, "histogram draws per frame (0: exact pmf)");
    c_sample->add_option("--acceptor", sampleargs.acceptor_path);
    c_sample->add_option("--n", sampleargs.n, "string length for acceptor sampling");
    common.attach(c_sample);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        std::cout << kVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        common.apply();
        if (c_curves->parsed()) return cmd_curves(curves, common);
        if (c_runtime->parsed()) return cmd_runtime(runtime, common);
        if (c_beam->parsed()) return cmd_beam(beam, common);
        if (c_sim->parsed()) return cmd_simulate(simulate, common);
        if (c_fit->parsed()) return cmd_fit(fit, common);
        if (c_sample->parsed()) return cmd_sample(sampleargs, common);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const infeasible_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const enumeration_overflow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const empty_language_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace qsd::cli
