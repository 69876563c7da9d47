#include "qcausal/commands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qcausal/error.hpp"
#include "qcausal/oracle.hpp"
#include "qcausal/parallel.hpp"

namespace qcausal {

namespace {

constexpr double kDominanceTolerance = 1e-7;

std::string dump(const nlohmann::json &j) { return j.dump(2) + "\n"; }

TwoQubitState model_state(const SweepSpec &spec, double alpha) {
    return spec.noise ? noisy_state(alpha, *spec.noise) : pure_state(alpha);
}

} // namespace

std::vector<double> linear_grid(double start, double end, std::size_t steps) {
    if (steps == 0) {
        throw InputError("grid: steps must be at least 1");
    }
    if (!std::isfinite(start) || !std::isfinite(end)) {
        throw InputError("grid: bounds must be finite");
    }
    if (steps == 1) {
        return {start};
    }
    std::vector<double> grid(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
        grid[i] = i + 1 == steps ? end : start + (end - start) * t;
    }
    return grid;
}

std::vector<CurveRow> compute_sweep(const SweepOptions &options) {
    const SweepSpec &spec = options.spec;
    spec.validate();
    if (options.counts_per_setting && options.samples < kMinMonteCarloSamples) {
        throw InputError("sweep: samples must be at least " + std::to_string(kMinMonteCarloSamples));
    }
    std::vector<std::optional<CurveRow>> rows(spec.alpha_grid.size());
    parallel_for(rows.size(), options.workers, [&](std::size_t i) {
        const double alpha = spec.alpha_grid[i];
        Settings s = family_settings(spec.family, alpha, spec.phi0);
        if (spec.hardware) {
            s = with_hardware(s, alpha, spec.hardware->delta);
        }
        const TwoQubitState rho = model_state(spec, alpha);
        CurveRow row{alpha, s.phi0, report(rho, s), std::nullopt, std::nullopt, std::nullopt};
        if (options.emit_probs || options.counts_per_setting) {
            const ObservedDistribution p = observed_quantum(rho, s);
            if (options.counts_per_setting) {
                // Per-row seed keeps rows independent of the schedule.
                const auto mc = monte_carlo_bounds(expected_counts(p, *options.counts_per_setting),
                                                   options.samples, options.seed + i, 1);
                row.mc_cace_lb = mc.cace_lb;
                row.mc_qace_lb = mc.qace_lb;
            }
            if (options.emit_probs) {
                row.probs = p;
            }
        }
        rows[i] = row;
    });
    std::vector<CurveRow> out;
    out.reserve(rows.size());
    for (auto &r : rows) {
        out.push_back(*r);
    }
    return out;
}

nlohmann::json metadata(std::optional<Family> family, std::optional<NoiseParams> noise,
                        std::optional<double> delta, std::optional<std::uint64_t> seed) {
    nlohmann::json m;
    m["artifact"] = "qcausal";
    m["version"] = QCAUSAL_VERSION;
    m["family"] = family ? nlohmann::json(std::string(to_string(*family))) : nlohmann::json(nullptr);
    m["noise"] = noise ? nlohmann::json{{"v", noise->v}, {"lambda", noise->lambda}}
                       : nlohmann::json(nullptr);
    m["delta"] = delta ? nlohmann::json(*delta) : nlohmann::json(nullptr);
    m["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
    m["clamp"] = kClampConvention;
    m["units"] = "radians";
    return m;
}

std::string format_curve_csv(const std::vector<CurveRow> &rows, const SweepOptions &options) {
    const SweepSpec &spec = options.spec;
    std::ostringstream out;
    const auto meta = metadata(spec.family, spec.noise,
                               spec.hardware ? std::optional<double>(spec.hardware->delta)
                                             : std::nullopt,
                               options.counts_per_setting ? std::optional(options.seed)
                                                          : std::nullopt);
    for (const auto &[key, value] : meta.items()) {
        out << "# " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump())
            << "\n";
    }
    if (spec.family == Family::MS1) {
        out << "# phi0=" << (spec.phi0 ? io::format_double(*spec.phi0) : "optimal") << "\n";
    }
    if (options.counts_per_setting) {
        out << "# counts_per_setting=" << *options.counts_per_setting
            << "\n# samples=" << options.samples << "\n# resampling=" << kResamplingLaw << "\n";
    }
    out << "alpha,cace_lb_raw,cace_lb,qace,qace_lb_raw,qace_lb,gap";
    if (options.counts_per_setting) {
        out << ",sigma_cace_lb,sigma_qace_lb";
    }
    if (options.emit_probs) {
        for (int i = 0; i < 8; ++i) {
            out << ",p" << (i / 4) << ((i / 2) % 2) << (i % 2);
        }
    }
    out << "\n";
    for (const auto &row : rows) {
        const AceReport &r = row.report;
        const std::array<double, 7> fields{row.alpha, r.cace_lb_raw, r.cace_lb, r.qace,
                                           r.qace_lb_raw, r.qace_lb, r.gap};
        for (std::size_t k = 0; k < fields.size(); ++k) {
            out << (k ? "," : "") << io::format_double(fields[k]);
        }
        if (row.mc_cace_lb) {
            out << "," << io::format_double(row.mc_cace_lb->sigma) << ","
                << io::format_double(row.mc_qace_lb->sigma);
        }
        if (row.probs) {
            for (double p : row.probs->flat()) {
                out << "," << io::format_double(p);
            }
        }
        out << "\n";
    }
    return out.str();
}

std::size_t CurveTable::column(const std::string &name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) {
        throw InputError("curve CSV: no column '" + name + "'");
    }
    return static_cast<std::size_t>(it - columns.begin());
}

CurveTable parse_curve_csv(const std::string &text) {
    CurveTable table;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') {
            continue;
        }
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) {
            fields.push_back(field);
        }
        if (table.columns.empty()) {
            table.columns = fields;
            continue;
        }
        if (fields.size() != table.columns.size()) {
            throw InputError("curve CSV: row width does not match header");
        }
        std::vector<double> values;
        for (const auto &f : fields) {
            values.push_back(f == "nan" ? std::nan("") : std::stod(f));
        }
        table.rows.push_back(std::move(values));
    }
    return table;
}

nlohmann::json bounds_json(const ObservedDistribution &p) {
    const AceReport r = observational_report(p);
    const QuantumBound q = qace_lb(p);
    nlohmann::json j;
    j["meta"] = metadata(std::nullopt, std::nullopt, std::nullopt, std::nullopt);
    j["cace_lb_raw"] = r.cace_lb_raw;
    j["cace_lb"] = r.cace_lb;
    j["qace_lb_raw"] = r.qace_lb_raw;
    j["qace_lb"] = r.qace_lb;
    j["zeta"] = q.zeta;
    j["zeta_radicand_plus"] = q.radicand_plus;
    j["zeta_radicand_minus"] = q.radicand_minus;
    j["distribution"] = io::probs_to_json(p)["pabx"];
    return j;
}

nlohmann::json oracle_json(const ObservedDistribution &p) {
    const OracleResult res = min_classical_ace(p);
    const double classical_bound = cace_lb(p);
    nlohmann::json j;
    j["meta"] = metadata(std::nullopt, std::nullopt, std::nullopt, std::nullopt);
    j["feasible"] = res.feasible;
    j["infeasibility"] = res.infeasibility;
    j["cace_lb_raw"] = classical_bound;
    if (res.feasible) {
        j["min_ace"] = res.min_ace;
        j["witness_weights"] = res.witness_weights;
        j["dominates_cace_lb"] = res.min_ace >= classical_bound - kDominanceTolerance;
    } else {
        j["min_ace"] = nullptr;
        j["witness_weights"] = nlohmann::json::array();
        j["dominates_cace_lb"] = nullptr;
    }
    return j;
}

nlohmann::json mc_json(const MonteCarloReport &r) {
    nlohmann::json j;
    j["meta"] = metadata(std::nullopt, std::nullopt, std::nullopt, r.seed);
    j["meta"]["resampling"] = kResamplingLaw;
    j["samples"] = r.samples;
    j["cace_lb"] = {{"plugin", r.cace_lb_plugin}, {"mean", r.cace_lb.value}, {"sigma", r.cace_lb.sigma}};
    j["qace_lb"] = {{"plugin", r.qace_lb_plugin}, {"mean", r.qace_lb.value}, {"sigma", r.qace_lb.sigma}};
    return j;
}

nlohmann::json fit_json(const FitResult &r, Family family, std::size_t points) {
    nlohmann::json j;
    j["meta"] = metadata(family, std::nullopt, std::nullopt, std::nullopt);
    j["meta"]["unmodelled"] = {"wave-plate rotation errors", "detector efficiencies"};
    j["points"] = points;
    j["v"] = r.v;
    j["lambda"] = r.lambda;
    j["delta"] = r.delta;
    j["delta_over_pi"] = r.delta / std::numbers::pi;
    j["residual"] = r.residual;
    j["lambda_unidentifiable"] = r.lambda_unidentifiable;
    j["flat"] = {{"v", r.flat[0]}, {"lambda", r.flat[1]}, {"delta", r.flat[2]}};
    j["evaluations"] = r.evaluations;
    return j;
}

void cmd_sweep(const SweepOptions &options, const std::filesystem::path &out) {
    const auto rows = compute_sweep(options);
    io::write_text(out, format_curve_csv(rows, options));
}

void cmd_bounds(const std::filesystem::path &input, io::InputFormat format,
                const std::filesystem::path &out) {
    io::write_text(out, dump(bounds_json(io::load_distribution(input, format))));
}

void cmd_oracle(const std::filesystem::path &input, const std::filesystem::path &out) {
    const auto j = oracle_json(io::load_distribution(input, io::guess_format(input)));
    io::write_text(out, dump(j));
    if (j["dominates_cace_lb"] == false) {
        throw InvariantError("oracle: LP optimum undercuts the classical lower bound");
    }
}

void cmd_mc(const std::filesystem::path &input, std::size_t samples, std::uint64_t seed,
            unsigned workers, const std::filesystem::path &out) {
    const CountsTable counts = io::parse_counts_csv(io::read_text(input));
    io::write_text(out, dump(mc_json(monte_carlo_bounds(counts, samples, seed, workers))));
}

void cmd_fit(const std::filesystem::path &dataset, Family family, unsigned workers,
             const std::filesystem::path &out) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(io::read_text(dataset));
    } catch (const nlohmann::json::parse_error &e) {
        throw InputError(std::string("dataset JSON: ") + e.what());
    }
    const io::Dataset d = io::parse_dataset_json(j);
    if (d.family && *d.family != family) {
        throw InputError("fit: dataset family does not match --family");
    }
    io::write_text(out, dump(fit_json(fit_noise(d.points, family, workers), family, d.points.size())));
}

} // namespace qcausal
