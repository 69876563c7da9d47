// Command-line front end: curve sweeps, bounds from data files, LP
// certification, Monte Carlo error bars and noise-model fitting.
//
// Exit codes: 0 success, 2 input error, 3 numeric invariant violation.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qcausal/commands.hpp"
#include "qcausal/error.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;

} // namespace

int main(int argc, char **argv) {
    using namespace qcausal;

    CLI::App app{"Classical and quantum bounds on the average causal effect in the binary "
                 "instrumental scenario. All angles are in radians."};
    app.require_subcommand(1);

    // sweep
    auto *sweep = app.add_subcommand("sweep", "Bound curves over a grid of entanglement angles alpha");
    std::string family_name;
    double alpha_start = 0.0;
    double alpha_end = 0.0;
    std::size_t steps = 0;
    std::optional<double> phi0;
    std::optional<double> v;
    std::optional<double> lambda;
    std::optional<double> delta;
    bool emit_probs = false;
    unsigned sweep_workers = 1;
    std::optional<std::uint64_t> counts_per_setting;
    std::size_t sweep_samples = 1000;
    std::uint64_t sweep_seed = 0;
    std::string sweep_out;
    sweep->add_option("--family", family_name, "ms1 or ms2")->required();
    sweep->add_option("--alpha-start", alpha_start, "First alpha (rad)")->required();
    sweep->add_option("--alpha-end", alpha_end, "Last alpha (rad)")->required();
    sweep->add_option("--steps", steps, "Number of grid points")->required();
    sweep->add_option("--phi0", phi0, "Fixed MS1 phi0 (rad) instead of the per-alpha optimum");
    sweep->add_option("--v", v, "White-noise visibility");
    sweep->add_option("--lambda", lambda, "Colored-noise fraction");
    sweep->add_option("--delta", delta, "Pockels-cell phase (rad); enables the hardware model");
    sweep->add_flag("--emit-probs", emit_probs, "Append the p(a,b|x) table to every row");
    sweep->add_option("--workers", sweep_workers, "Worker threads (0 = all cores)");
    sweep->add_option("--counts-per-setting", counts_per_setting,
                      "Add Monte Carlo sigmas from synthetic counts of this size per x");
    sweep->add_option("--samples", sweep_samples, "Monte Carlo resamples per row");
    sweep->add_option("--seed", sweep_seed, "Monte Carlo seed");
    sweep->add_option("--out", sweep_out, "Output curve CSV")->required();

    // bounds
    auto *bounds = app.add_subcommand("bounds", "cACE_LB and qACE_LB of an observed distribution");
    std::string bounds_input;
    std::string bounds_format;
    std::string bounds_out;
    bounds->add_option("--input", bounds_input, "Counts CSV or probability JSON")->required();
    bounds->add_option("--format", bounds_format, "counts or probs")->required();
    bounds->add_option("--out", bounds_out, "Output JSON report")->required();

    // oracle
    auto *oracle = app.add_subcommand("oracle", "Minimum classical ACE by linear programming");
    std::string oracle_input;
    std::string oracle_out;
    oracle->add_option("--input", oracle_input, "Probability JSON (or counts CSV by .csv extension)")
        ->required();
    oracle->add_option("--out", oracle_out, "Output JSON certificate")->required();

    // mc
    auto *mc = app.add_subcommand("mc", "Monte Carlo error bars of the bounds from a counts table");
    std::string mc_input;
    std::size_t mc_samples = 0;
    std::uint64_t mc_seed = 0;
    unsigned mc_workers = 1;
    std::string mc_out;
    mc->add_option("--input", mc_input, "Counts CSV")->required();
    mc->add_option("--samples", mc_samples, "Number of resamples (>= 100)")->required();
    mc->add_option("--seed", mc_seed, "Seed")->required();
    mc->add_option("--workers", mc_workers, "Worker threads (0 = all cores)");
    mc->add_option("--out", mc_out, "Output JSON report")->required();

    // fit
    auto *fit = app.add_subcommand("fit", "Fit visibility, colored-noise fraction and cell phase");
    std::string fit_dataset;
    std::string fit_family;
    unsigned fit_workers = 1;
    std::string fit_out;
    fit->add_option("--dataset", fit_dataset, "Dataset JSON")->required();
    fit->add_option("--family", fit_family, "ms1 or ms2")->required();
    fit->add_option("--workers", fit_workers, "Worker threads (0 = all cores)");
    fit->add_option("--out", fit_out, "Output JSON fit")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*sweep) {
            SweepOptions opts;
            opts.spec.family = parse_family(family_name);
            opts.spec.alpha_grid = linear_grid(alpha_start, alpha_end, steps);
            opts.spec.phi0 = phi0;
            if (v || lambda) {
                opts.spec.noise = NoiseParams{v.value_or(1.0), lambda.value_or(0.0)};
            }
            if (delta) {
                opts.spec.hardware = HardwareParams{*delta, 0.0};
            }
            opts.emit_probs = emit_probs;
            opts.workers = sweep_workers;
            opts.counts_per_setting = counts_per_setting;
            opts.samples = sweep_samples;
            opts.seed = sweep_seed;
            cmd_sweep(opts, sweep_out);
        } else if (*bounds) {
            cmd_bounds(bounds_input, io::parse_format(bounds_format), bounds_out);
        } else if (*oracle) {
            cmd_oracle(oracle_input, oracle_out);
        } else if (*mc) {
            cmd_mc(mc_input, mc_samples, mc_seed, mc_workers, mc_out);
        } else if (*fit) {
            cmd_fit(fit_dataset, parse_family(fit_family), fit_workers, fit_out);
        }
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InvariantError &e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const EtaSolveError &e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    }
    return 0;
}
