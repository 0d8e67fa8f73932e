// Command-line front end: word enumeration, circuit-class counting, p(w)
// estimation, theoretical moments, Monte Carlo simulation, convergence
// studies, and the self-verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.
// The default seed can be overridden with the TOEPBLOCK_SEED environment
// variable; --seed wins over the environment.

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "toepblock/address.hpp"
#include "toepblock/counting.hpp"
#include "toepblock/matrix.hpp"
#include "toepblock/report.hpp"
#include "toepblock/simulate.hpp"
#include "toepblock/spectral.hpp"
#include "toepblock/theory.hpp"
#include "toepblock/verify.hpp"
#include "toepblock/version.hpp"
#include "toepblock/words.hpp"

using namespace toepblock;

namespace {

std::uint64_t default_seed() {
    const char* env = std::getenv("TOEPBLOCK_SEED");
    if (env == nullptr || *env == '\0') return 12345;
    std::string s(env);
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("TOEPBLOCK_SEED must be a decimal integer, got '" + s +
                                        "'");
    }
    return std::strtoull(s.c_str(), nullptr, 10);
}

// Accepts "-1,+1", "1,-1", or the compact "-+" form.
SignVector parse_signs(const std::string& text) {
    SignVector out;
    bool compact = !text.empty();
    for (char c : text) compact = compact && (c == '+' || c == '-');
    if (compact) {
        for (char c : text) out.entries.push_back(c == '+' ? 1 : -1);
        return out;
    }
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token == "+1" || token == "1" || token == "+") {
            out.entries.push_back(1);
        } else if (token == "-1" || token == "-") {
            out.entries.push_back(-1);
        } else {
            throw std::invalid_argument("bad sign token '" + token + "'");
        }
    }
    if (out.entries.empty()) throw std::invalid_argument("empty sign vector '" + text + "'");
    return out;
}

void deliver(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        write_text_file(out_path, content);
    }
}

struct CommonOpts {
    std::string format = "text";
    std::string out;
    double max_nodes = 1e10;
    int jobs = 1;

    CountBudget budget() const { return CountBudget{max_nodes, jobs}; }
};

void add_common(CLI::App* cmd, CommonOpts& opts, const std::string& default_format) {
    opts.format = default_format;
    cmd->add_option("--format", opts.format, "Output format")->capture_default_str();
    cmd->add_option("--out", opts.out, "Write output to this path instead of stdout");
    cmd->add_option("--budget", opts.max_nodes,
                    "Maximum estimated node visits for exact counting")
        ->capture_default_str();
    cmd->add_option("--jobs", opts.jobs, "Worker threads for counting / replicates")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

int run_words(int t_max, bool catalan_only, const CommonOpts& opts) {
    std::ostringstream text;
    std::ostringstream json;
    json << "[";
    for (int t = 1; t <= t_max; ++t) {
        std::vector<Word> all = enumerate_pair_matched(t);
        std::vector<Word> kept;
        int catalan = 0;
        for (const Word& w : all) {
            bool cat = is_catalan(w);
            catalan += cat ? 1 : 0;
            if (!catalan_only || cat) kept.push_back(w);
        }
        text << "t=" << t << ": " << all.size() << " pair-matched, " << catalan << " Catalan\n";
        for (const Word& w : kept) text << "  " << w.letters() << "\n";
        if (t > 1) json << ",";
        json << "\n  {\"t\": " << t << ", \"pair_matched\": " << all.size()
             << ", \"catalan\": " << catalan << ", \"words\": [";
        for (std::size_t i = 0; i < kept.size(); ++i) {
            if (i) json << ", ";
            json << '"' << kept[i].letters() << '"';
        }
        json << "]}";
    }
    json << "\n]\n";
    deliver(opts.format == "json" ? json.str() : text.str(), opts.out);
    return 0;
}

int run_count(LinkKind kind, int n, int k, const std::string& word, const std::string& sign,
              const CommonOpts& opts) {
    Word w(word);
    Link link = make_link(kind, n, k);
    CountResult result = sign.empty() ? count_pi_star(link, w, opts.budget())
                                      : count_pi_star_signed(link, w, parse_signs(sign),
                                                             opts.budget());
    if (opts.format == "json") {
        deliver(count_json(result), opts.out);
    } else {
        std::ostringstream text;
        text << "word " << w.letters() << " under " << link_name(kind) << " at dimension "
             << result.n;
        if (result.sign.has_value()) {
            text << ", sign (";
            for (std::size_t i = 0; i < result.sign->entries.size(); ++i)
                text << (i ? "," : "") << (result.sign->entries[i] > 0 ? "+1" : "-1");
            text << ")";
        }
        text << ":\n  count = " << result.count << "\n  normalized = " << result.normalized
             << "\n";
        deliver(text.str(), opts.out);
    }
    return 0;
}

int run_pw(LinkKind kind, const std::string& word, const std::vector<int>& grid,
           const CommonOpts& opts) {
    Word w(word);
    PFit fit = estimate_p(kind, w, grid, opts.budget());
    if (opts.format == "json") {
        deliver(report_json(fit, kind, w), opts.out);
    } else {
        std::ostringstream text;
        text << "p(" << w.letters() << ") under " << link_name(kind) << ":\n";
        for (std::size_t i = 0; i < fit.grid.size(); ++i)
            text << "  n=" << fit.grid[i] << "  normalized=" << fit.normalized[i] << "\n";
        text << "  p_hat = " << fit.p_hat << "\n  residual = " << fit.residual << "\n";
        deliver(text.str(), opts.out);
    }
    return 0;
}

int run_moments(Model model, Regime regime, int t_max, int size, const std::vector<int>& grid,
                const CommonOpts& opts) {
    TheoreticalMoments moments = theoretical_moments(model, regime, t_max, size, grid,
                                                     opts.budget());
    if (opts.format == "json") {
        deliver(report_json(moments), opts.out);
    } else {
        std::ostringstream text;
        text << "model " << model_name(model) << ", regime " << regime_name(regime);
        if (regime != Regime::BothLarge) text << ", size " << size;
        text << ":\n";
        for (int t = 1; t <= moments.t_max(); ++t)
            text << "  beta_" << 2 * t << " = " << moments.beta2t[t - 1] << "\n";
        deliver(text.str(), opts.out);
    }
    return 0;
}

int run_simulate(RunConfig cfg, const std::string& hist_csv, const std::string& eig_csv,
                 const std::string& dump_path, const CommonOpts& opts) {
    cfg.keep_eigenvalues = !eig_csv.empty();
    SimReport report = run_simulation(cfg);
    if (!hist_csv.empty()) write_text_file(hist_csv, histogram_csv(report.hist));
    if (!eig_csv.empty()) write_text_file(eig_csv, eigenvalue_csv(report.spectra));
    if (!dump_path.empty()) {
        InputSpec rep0 = cfg.input;
        rep0.seed = replicate_seed(cfg.input.seed, 0);
        SymmetricMatrix mat = build_block_matrix(cfg.model, cfg.k, cfg.n, rep0);
        std::ofstream out(dump_path);
        if (!out) throw std::runtime_error("cannot open '" + dump_path + "' for writing");
        write_matrix(mat, out);
    }
    deliver(opts.format == "csv" ? moments_csv(report) : report_json(report), opts.out);
    return 0;
}

int run_converge(Model model, Regime regime, const std::vector<int>& sizes, int other, int reps,
                 int t_max, Distribution dist, std::uint64_t seed, const CommonOpts& opts) {
    std::vector<RunConfig> grid;
    for (int size : sizes) {
        RunConfig cfg;
        cfg.model = model;
        cfg.regime = regime;
        cfg.n = regime == Regime::FixedK ? other : size;
        cfg.k = regime == Regime::FixedK ? size : other;
        cfg.replicates = reps;
        cfg.input.dist = dist;
        cfg.input.seed = seed;
        cfg.h_max = 2 * t_max;
        cfg.jobs = opts.jobs;
        cfg.budget = opts.budget();
        grid.push_back(cfg);
    }
    ConvergenceReport report = run_convergence(grid);
    deliver(opts.format == "csv" ? convergence_csv(report) : report_json(report), opts.out);
    return 0;
}

int run_verify(const std::string& suite, const CommonOpts& opts) {
    VerifyReport report = run_verification(suite, opts.budget());
    if (opts.format == "json") {
        deliver(report_json(report), opts.out);
    } else {
        std::ostringstream text;
        for (const VerifyCheck& check : report.checks)
            text << (check.pass ? "PASS " : "FAIL ") << check.name
                 << (check.pass ? "" : ": " + check.detail) << "\n";
        text << "suite " << report.suite << ": " << (report.pass ? "PASS" : "FAIL") << " ("
             << report.checks.size() << " checks)\n";
        if (!report.pass) text << "first failing identity: " << report.first_failure() << "\n";
        deliver(text.str(), opts.out);
    }
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Block-patterned random matrix toolkit"};
    app.set_version_flag("--version", std::string(artifact_version()));
    app.require_subcommand(1);

    // words
    auto* words_cmd = app.add_subcommand("words", "Enumerate pair-matched words");
    int words_t_max = 3;
    bool catalan_only = false;
    CommonOpts words_opts;
    words_cmd->add_option("--t-max", words_t_max, "Largest half-length")
        ->check(CLI::Range(1, 6))
        ->capture_default_str();
    words_cmd->add_flag("--catalan-only", catalan_only, "List only Catalan words");
    add_common(words_cmd, words_opts, "text");

    // count
    auto* count_cmd = app.add_subcommand("count", "Count circuit classes exactly");
    std::string count_link;
    std::string count_word;
    std::string count_sign;
    int count_n = 0;
    int count_k = 1;
    CommonOpts count_opts;
    count_cmd->add_option("--link", count_link,
                          "Link function: sym-toeplitz, wigner, asym-toeplitz, full-iid, tbi, tbt")
        ->required();
    count_cmd->add_option("--n", count_n, "Matrix (or block) dimension")->required();
    count_cmd->add_option("--k", count_k, "Block count for composite links")
        ->capture_default_str();
    count_cmd->add_option("--word", count_word, "Pair-matched word, e.g. abab")->required();
    count_cmd->add_option("--sign", count_sign,
                          "Sign vector for a single class, e.g. '-1,+1' or '-+'");
    add_common(count_cmd, count_opts, "text");

    // pw
    auto* pw_cmd = app.add_subcommand("pw", "Estimate the limit p(w) of normalized counts");
    std::string pw_link = "sym-toeplitz";
    std::string pw_word;
    std::vector<int> pw_grid;
    CommonOpts pw_opts;
    pw_cmd->add_option("--link", pw_link, "Link function")->capture_default_str();
    pw_cmd->add_option("--word", pw_word, "Pair-matched word")->required();
    pw_cmd->add_option("--grid", pw_grid, "Ascending sizes for the fit (default 20,40,80,160)")
        ->delimiter(',');
    add_common(pw_cmd, pw_opts, "text");

    // moments
    auto* moments_cmd = app.add_subcommand("moments", "Theoretical limit moments");
    std::string moments_model;
    std::string moments_regime = "both_large";
    int moments_t_max = 2;
    int moments_n = 0;
    int moments_k = 0;
    std::vector<int> moments_grid;
    CommonOpts moments_opts;
    moments_cmd->add_option("--model", moments_model, "tbi or tbt")->required();
    moments_cmd->add_option("--regime", moments_regime, "fixed_k, fixed_n, or both_large")
        ->capture_default_str();
    moments_cmd->add_option("--t-max", moments_t_max, "Highest even moment / 2")
        ->check(CLI::Range(1, 5))
        ->capture_default_str();
    moments_cmd->add_option("--k", moments_k, "Pinned size for fixed_k");
    moments_cmd->add_option("--n", moments_n, "Pinned size for fixed_n");
    moments_cmd->add_option("--grid", moments_grid, "Sizes for p(w) factors")->delimiter(',');
    add_common(moments_cmd, moments_opts, "text");

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo spectra and moment comparison");
    std::string sim_model;
    std::string sim_regime = "both_large";
    std::string sim_dist = "rademacher";
    std::string sim_hist_csv;
    std::string sim_eig_csv;
    std::string sim_dump;
    RunConfig sim_cfg;
    bool sim_seed_given = false;
    CommonOpts sim_opts;
    sim_cmd->add_option("--model", sim_model, "tbi or tbt")->required();
    sim_cmd->add_option("--regime", sim_regime, "Regime whose theory to attach")
        ->capture_default_str();
    sim_cmd->add_option("--n", sim_cfg.n, "Block size")->capture_default_str();
    sim_cmd->add_option("--k", sim_cfg.k, "Block count")->capture_default_str();
    sim_cmd->add_option("--reps", sim_cfg.replicates, "Independent replicates")
        ->capture_default_str();
    sim_cmd->add_option("--seed", sim_cfg.input.seed, "Master seed (env TOEPBLOCK_SEED)")
        ->each([&](const std::string&) { sim_seed_given = true; });
    sim_cmd->add_option("--dist", sim_dist, "rademacher, gaussian, or uniform")
        ->capture_default_str();
    sim_cmd->add_option("--h-max", sim_cfg.h_max, "Highest moment (even, <= 10)")
        ->capture_default_str();
    sim_cmd->add_option("--bins", sim_cfg.bins, "Histogram bins (0 = automatic)")
        ->capture_default_str();
    sim_cmd->add_option("--hist-csv", sim_hist_csv, "Also write the pooled histogram as CSV");
    sim_cmd->add_option("--eig-csv", sim_eig_csv, "Also write all eigenvalues as CSV");
    sim_cmd->add_option("--dump-matrix", sim_dump, "Write the replicate-0 matrix as text");
    add_common(sim_cmd, sim_opts, "json");

    // converge
    auto* conv_cmd = app.add_subcommand("converge", "Finite-size theory against the joint limit");
    std::string conv_model;
    std::string conv_regime;
    std::string conv_dist = "rademacher";
    std::vector<int> conv_sizes;
    int conv_other = 32;
    int conv_reps = 0;
    int conv_t_max = 2;
    std::uint64_t conv_seed = 0;
    bool conv_seed_given = false;
    CommonOpts conv_opts;
    conv_cmd->add_option("--model", conv_model, "tbi or tbt")->required();
    conv_cmd->add_option("--regime", conv_regime, "fixed_k or fixed_n")->required();
    conv_cmd->add_option("--sizes", conv_sizes, "Ascending pinned sizes, e.g. 2,4,8,16")
        ->delimiter(',')
        ->required();
    conv_cmd->add_option("--n", conv_other, "The free dimension (fixed_k runs)")
        ->capture_default_str();
    conv_cmd->add_option("--k", conv_other, "The free dimension (fixed_n runs)");
    conv_cmd->add_option("--reps", conv_reps, "Replicates per point (0 = theory only)")
        ->capture_default_str();
    conv_cmd->add_option("--t-max", conv_t_max, "Highest even moment / 2")
        ->check(CLI::Range(1, 5))
        ->capture_default_str();
    conv_cmd->add_option("--seed", conv_seed, "Master seed (env TOEPBLOCK_SEED)")
        ->each([&](const std::string&) { conv_seed_given = true; });
    conv_cmd->add_option("--dist", conv_dist, "rademacher, gaussian, or uniform")
        ->capture_default_str();
    add_common(conv_cmd, conv_opts, "json");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run the self-check suites");
    std::string verify_suite = "all";
    CommonOpts verify_opts;
    verify_cmd->add_option("--suite", verify_suite,
                           "lemmas, decomposition, counting-oracle, or all")
        ->capture_default_str();
    add_common(verify_cmd, verify_opts, "text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (words_cmd->parsed()) return run_words(words_t_max, catalan_only, words_opts);
        if (count_cmd->parsed())
            return run_count(parse_link(count_link), count_n, count_k, count_word, count_sign,
                             count_opts);
        if (pw_cmd->parsed()) {
            if (pw_grid.empty()) pw_grid = default_p_grid();
            return run_pw(parse_link(pw_link), pw_word, pw_grid, pw_opts);
        }
        if (moments_cmd->parsed()) {
            Regime regime = parse_regime(moments_regime);
            int size = regime == Regime::FixedK ? moments_k : moments_n;
            std::vector<int> grid = moments_grid.empty() ? default_p_grid() : moments_grid;
            return run_moments(parse_model(moments_model), regime, moments_t_max, size, grid,
                               moments_opts);
        }
        if (sim_cmd->parsed()) {
            sim_cfg.model = parse_model(sim_model);
            sim_cfg.regime = parse_regime(sim_regime);
            sim_cfg.input.dist = parse_distribution(sim_dist);
            if (!sim_seed_given) sim_cfg.input.seed = default_seed();
            sim_cfg.jobs = sim_opts.jobs;
            sim_cfg.budget = sim_opts.budget();
            return run_simulate(sim_cfg, sim_hist_csv, sim_eig_csv, sim_dump, sim_opts);
        }
        if (conv_cmd->parsed()) {
            if (!conv_seed_given) conv_seed = default_seed();
            return run_converge(parse_model(conv_model), parse_regime(conv_regime), conv_sizes,
                                conv_other, conv_reps, conv_t_max,
                                parse_distribution(conv_dist), conv_seed, conv_opts);
        }
        if (verify_cmd->parsed()) return run_verify(verify_suite, verify_opts);
    } catch (const VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const EigensolverError& e) {
        std::cerr << "eigensolver failure: " << e.what() << "\n";
        return 1;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
