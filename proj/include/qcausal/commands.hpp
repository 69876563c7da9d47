#pragma once

/**
 * @file commands.hpp
 * Batch commands behind the command-line front end. Each command reads its
 * inputs, writes one output file and throws InputError / InvariantError on
 * failure (mapped to exit codes 2 / 3 by the executable).
 */

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcausal/causal.hpp"
#include "qcausal/io.hpp"
#include "qcausal/settings_gen.hpp"
#include "qcausal/stats.hpp"

namespace qcausal {

inline constexpr const char *kClampConvention =
    "negative lower bounds are reported raw and clamped at 0";
inline constexpr const char *kResamplingLaw = "multinomial per setting x with observed totals";

struct CurveRow {
    double alpha;
    double phi0;
    AceReport report;
    std::optional<UncertainValue> mc_cace_lb;
    std::optional<UncertainValue> mc_qace_lb;
    std::optional<ObservedDistribution> probs;
};

struct SweepOptions {
    SweepSpec spec;
    bool emit_probs = false;
    unsigned workers = 1;
    /// When set, each row gets Monte Carlo sigmas from synthetic counts with
    /// this many events per setting x.
    std::optional<std::uint64_t> counts_per_setting;
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
};

/// `steps` equally spaced points from start to end inclusive (steps >= 1).
std::vector<double> linear_grid(double start, double end, std::size_t steps);

/// One row per alpha, in grid order regardless of worker count.
std::vector<CurveRow> compute_sweep(const SweepOptions &options);

/// CSV with header `alpha,cace_lb_raw,cace_lb,qace,qace_lb_raw,qace_lb,gap`, then
/// `sigma_cace_lb,sigma_qace_lb` (Monte Carlo) and `p000..p111` (--emit-probs, index xab).
std::string format_curve_csv(const std::vector<CurveRow> &rows, const SweepOptions &options);

/// Parsed curve CSV: column names and numeric rows (metadata lines skipped).
struct CurveTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    [[nodiscard]] std::size_t column(const std::string &name) const;
};
CurveTable parse_curve_csv(const std::string &text);

nlohmann::json metadata(std::optional<Family> family, std::optional<NoiseParams> noise,
                        std::optional<double> delta, std::optional<std::uint64_t> seed);

nlohmann::json bounds_json(const ObservedDistribution &p);
/// Throws InvariantError if the LP optimum undercuts cace_lb (after recording both).
nlohmann::json oracle_json(const ObservedDistribution &p);
nlohmann::json mc_json(const MonteCarloReport &r);
nlohmann::json fit_json(const FitResult &r, Family family, std::size_t points);

void cmd_sweep(const SweepOptions &options, const std::filesystem::path &out);
void cmd_bounds(const std::filesystem::path &input, io::InputFormat format,
                const std::filesystem::path &out);
void cmd_oracle(const std::filesystem::path &input, const std::filesystem::path &out);
void cmd_mc(const std::filesystem::path &input, std::size_t samples, std::uint64_t seed,
            unsigned workers, const std::filesystem::path &out);
void cmd_fit(const std::filesystem::path &dataset, Family family, unsigned workers,
             const std::filesystem::path &out);

} // namespace qcausal
