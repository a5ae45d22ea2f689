// rwords: exact and asymptotic distributions of the longest weakly
// increasing subsequence in inhomogeneous random words.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rwords/asymptotics.hpp"
#include "rwords/crosscheck.hpp"
#include "rwords/errors.hpp"
#include "rwords/measure.hpp"
#include "rwords/parallel.hpp"
#include "rwords/simulate.hpp"
#include "rwords/toeplitz.hpp"

#include "output.hpp"
#include "table1.hpp"

namespace rwords::cli {
namespace {

nlohmann::ordered_json model_params(const ProbModel& model, const std::string& probs_arg) {
    nlohmann::ordered_json p;
    p["probs"] = probs_arg;
    auto sorted = nlohmann::ordered_json::array();
    for (const Rat& q : model.probs()) sorted.push_back(fraction_string(q));
    p["probs_sorted"] = sorted;
    p["letter_order"] = model.user_order(); // sorted letter i+1 came from this input slot
    return p;
}

std::string regime_name(const ProbModel& model) {
    return mean_regime(model) == MeanRegime::Proved ? "proved" : "conjectured";
}

CommandOutput run_distribution(const std::string& command, const std::string& probs_arg,
                               int N, int single_n, int workers) {
    const ProbModel model = ProbModel::parse(probs_arg);
    CommandOutput out;
    out.command = command;
    out.params = model_params(model, probs_arg);
    out.params["N"] = N;
    out.workers = workers;
    out.columns = {"n", "cdf", "cdf_decimal"};
    const bool toeplitz = command == "toeplitz";
    int lo = 0, hi = N;
    if (single_n >= 0) lo = hi = single_n;
    for (int n = lo; n <= hi; ++n) {
        const Rat q = toeplitz ? cdf_via_toeplitz(n, N, model) : cdf_exact(n, N, model, workers);
        nlohmann::ordered_json row;
        row["n"] = n;
        row["cdf"] = fraction_string(q);
        row["cdf_decimal"] = decimal_string(q, 12);
        out.rows.push_back(std::move(row));
    }
    return out;
}

CommandOutput run_simulate(const std::string& probs_arg, int N, long samples,
                           std::uint64_t seed, int workers) {
    const ProbModel model = ProbModel::parse(probs_arg);
    const SimulationSummary sim = simulate_lwis(model, N, samples, seed, workers);

    CommandOutput out;
    out.command = "simulate";
    out.params = model_params(model, probs_arg);
    out.params["N"] = N;
    out.params["samples"] = samples;
    out.params["substream_rule"] = "Rng(seed, chunk_index)";
    out.seed = seed;
    out.workers = workers;
    out.is_summary = true;
    out.summary["samples"] = sim.samples;
    out.summary["sample_mean"] = sim.mean;
    out.summary["sample_variance"] = sim.variance;
    out.summary["std_error"] = sim.std_error;
    try {
        const Rat mean = mean_asymptotic(model, N);
        const Rat var = variance_asymptotic(model, N);
        out.summary["asymptotic_mean"] = decimal_string(mean, 2);
        out.summary["asymptotic_mean_exact"] = fraction_string(mean);
        out.summary["asymptotic_variance"] = decimal_string(var, 4);
        out.summary["asymptotic_variance_exact"] = fraction_string(var);
        out.summary["mean_regime"] = regime_name(model);
    } catch (const DegenerateLeaderError&) {
        out.summary["asymptotic_mean"] = nullptr;
        out.summary["asymptotic_mean_exact"] = nullptr;
        out.summary["asymptotic_variance"] = nullptr;
        out.summary["asymptotic_variance_exact"] = nullptr;
        out.summary["mean_regime"] = "degenerate";
    }
    return out;
}

CommandOutput run_limit(const std::string& probs_arg, double s, std::string method,
                        long samples, std::uint64_t seed, int workers) {
    const ProbModel model = ProbModel::parse(probs_arg);
    if (method == "auto") method = model.homogeneous() ? "mc" : "reduced";

    LimitSpec spec(model, s);
    spec.samples = samples;
    spec.workers = workers;

    CommandOutput out;
    out.command = "limit";
    out.params = model_params(model, probs_arg);
    out.params["s"] = s;
    out.workers = workers;
    out.is_summary = true;
    if (method == "reduced") {
        const LimitResult r = limit_cdf_reduced(spec);
        out.summary["method"] = "reduced-quadrature";
        out.summary["value"] = r.value;
        out.summary["error_estimate"] = r.error_estimate;
    } else if (method == "mc") {
        const LimitResult r = limit_cdf_mc(spec, seed);
        out.seed = seed;
        out.params["samples"] = samples;
        out.params["substream_rule"] = "Rng(seed, chunk_index)";
        out.summary["method"] = "mc-importance";
        out.summary["value"] = r.value;
        out.summary["error_estimate"] = r.error_estimate;
    } else {
        throw Error("unknown method: " + method);
    }
    return out;
}

CommandOutput run_table1(std::uint64_t seed, int workers, bool& flagged_any) {
    CommandOutput out;
    out.command = "table1";
    out.params["rows"] = static_cast<int>(table1_rows().size());
    out.params["row_seed_rule"] = "seed + row_index";
    out.params["substream_rule"] = "Rng(seed, chunk_index)";
    out.seed = seed;
    out.workers = workers;
    out.columns = {"k",       "probs",     "N",       "NS",     "sim_mean",
                   "published_sim_mean", "asymptotic_mean", "flagged", "regime"};
    flagged_any = false;
    for (std::size_t i = 0; i < table1_rows().size(); ++i) {
        const Table1Row& row = table1_rows()[i];
        const ProbModel model = ProbModel::parse(row.probs);
        const SimulationSummary sim =
            simulate_lwis(model, row.N, row.NS, seed + i, workers);
        const double p1 = model.probs()[0].get_d();
        const double se = std::sqrt(row.N * p1 * (1.0 - p1) / static_cast<double>(row.NS));
        const bool flagged = std::abs(sim.mean - row.sim_mean) > 4.0 * se;
        flagged_any = flagged_any || flagged;
        nlohmann::ordered_json r;
        r["k"] = row.k;
        r["probs"] = row.probs;
        r["N"] = row.N;
        r["NS"] = row.NS;
        r["sim_mean"] = sim.mean;
        r["published_sim_mean"] = row.sim_mean;
        r["asymptotic_mean"] = decimal_string(mean_asymptotic(model, row.N), 2);
        r["flagged"] = flagged;
        r["regime"] = regime_name(model);
        out.rows.push_back(std::move(r));
    }
    return out;
}

CommandOutput run_crosscheck_cmd(const std::string& probs_arg, int max_N, bool& all_equal) {
    std::vector<ProbModel> models;
    std::string described;
    if (probs_arg.empty()) {
        for (const char* probs : {"1", "5/7,2/7", "1/2,5/14,1/7"}) {
            models.push_back(ProbModel::parse(probs));
            described += described.empty() ? probs : std::string(" | ") + probs;
        }
    } else {
        models.push_back(ProbModel::parse(probs_arg));
        described = probs_arg;
    }
    const CrosscheckReport report = run_crosscheck(models, max_N);
    all_equal = report.all_equal();

    CommandOutput out;
    out.command = "crosscheck";
    out.params["models"] = described;
    out.params["max_N"] = max_N;
    out.is_summary = true;
    out.summary["status"] = all_equal ? "ALL-EQUAL" : "MISMATCH";
    out.summary["cells"] = report.cells;
    if (!all_equal) {
        const CrosscheckMismatch& mm = *report.mismatch;
        out.summary["k"] = mm.k;
        out.summary["N"] = mm.N;
        out.summary["n"] = mm.n;
        out.summary["word_enum"] = fraction_string(mm.word_enum);
        out.summary["exact"] = fraction_string(mm.exact);
        out.summary["toeplitz"] = fraction_string(mm.toeplitz);
    }
    return out;
}

} // namespace
} // namespace rwords::cli

int main(int argc, char** argv) {
    using namespace rwords;
    using namespace rwords::cli;

    CLI::App app{"longest weakly increasing subsequences of inhomogeneous random words:\n"
                 "exact finite-N distributions (partition sum and Toeplitz determinant),\n"
                 "seeded simulation, and the limiting constrained-GUE distribution"};
    app.require_subcommand(1);

    std::string probs, format = "tsv-plain", method = "auto";
    int N = 0, single_n = -1, max_N = 10;
    long samples = 0;
    double s = 0.0;
    std::uint64_t seed = 42;
    int workers = default_workers();

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv", "tsv-plain"}))
            ->capture_default_str();
    };
    const auto add_workers = [&](CLI::App* cmd) {
        cmd->add_option("--workers", workers, "parallelism degree")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    CLI::App* exact = app.add_subcommand("exact", "F_N(n) for n = 0..N by partition summation");
    exact->add_option("--probs", probs, "letter probabilities, exact rationals")->required();
    exact->add_option("--N", N, "word length")->required()->check(CLI::NonNegativeNumber);
    exact->add_option("--n", single_n, "only this threshold");
    add_workers(exact);
    add_format(exact);

    CLI::App* toeplitz =
        app.add_subcommand("toeplitz", "F_N(n) via the Toeplitz determinant route");
    toeplitz->add_option("--probs", probs)->required();
    toeplitz->add_option("--N", N)->required()->check(CLI::NonNegativeNumber);
    toeplitz->add_option("--n", single_n, "only this threshold");
    add_workers(toeplitz);
    add_format(toeplitz);

    CLI::App* simulate = app.add_subcommand("simulate", "sample words, summarize lwis lengths");
    simulate->add_option("--probs", probs)->required();
    simulate->add_option("--N", N)->required()->check(CLI::NonNegativeNumber);
    simulate->add_option("--samples", samples, "sample count")
        ->default_val(20000L)
        ->check(CLI::PositiveNumber);
    simulate->add_option("--seed", seed)->capture_default_str();
    add_workers(simulate);
    add_format(simulate);

    CLI::App* limit = app.add_subcommand("limit", "limiting CDF of (lwis - N p1)/sqrt(N p1)");
    limit->add_option("--probs", probs)->required();
    limit->add_option("--s", s, "threshold")->required();
    limit->add_option("--method", method, "reduced | mc | auto")
        ->check(CLI::IsMember({"auto", "reduced", "mc"}))
        ->capture_default_str();
    limit->add_option("--samples", samples, "Monte Carlo samples")
        ->default_val(1'000'000L)
        ->check(CLI::PositiveNumber);
    limit->add_option("--seed", seed)->capture_default_str();
    add_workers(limit);
    add_format(limit);

    CLI::App* table1 = app.add_subcommand(
        "table1", "reproduce the published simulation table with fresh seeded runs");
    table1->add_option("--seed", seed)->capture_default_str();
    add_workers(table1);
    add_format(table1);

    CLI::App* crosscheck = app.add_subcommand(
        "crosscheck", "word enumeration vs partition sum vs Toeplitz, exact equality");
    crosscheck->add_option("--probs", probs, "one model (default: a built-in k=1,2,3 trio)");
    crosscheck->add_option("--N", max_N, "largest word length")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    add_format(crosscheck);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        CommandOutput out;
        int exit_code = 0;
        if (app.got_subcommand(exact))
            out = run_distribution("exact", probs, N, single_n, workers);
        else if (app.got_subcommand(toeplitz))
            out = run_distribution("toeplitz", probs, N, single_n, workers);
        else if (app.got_subcommand(simulate))
            out = run_simulate(probs, N, samples, seed, workers);
        else if (app.got_subcommand(limit))
            out = run_limit(probs, s, method, samples, seed, workers);
        else if (app.got_subcommand(table1)) {
            bool flagged = false;
            out = run_table1(seed, workers, flagged);
        } else if (app.got_subcommand(crosscheck)) {
            bool all_equal = true;
            out = run_crosscheck_cmd(probs, max_N, all_equal);
            exit_code = all_equal ? 0 : 1;
        }
        std::fputs(render(out, parse_format(format)).c_str(), stdout);
        return exit_code;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 2;
    }
}
