#pragma once

/**
 * @file io.hpp
 * File formats.
 *
 *  - Counts CSV: header `x,a,b,count`, one integer row per (x, a, b) cell.
 *  - Probability JSON: {"pabx": [[[p000, p001], [p010, p011]], [[...x=1...]]]}
 *    indexed [x][a][b].
 *  - Dataset JSON (noise fitting):
 *    {"family": "ms1", "points": [{"alpha": R, "phi0": R?, "pabx": ...} |
 *                                 {"alpha": R, "phi0": R?, "counts": [[[n000, ...]]]}]}
 *    where "counts" is indexed like "pabx" and "family" is optional.
 *  - Curve CSV: `#`-prefixed metadata lines, then the column header.
 */

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcausal/scenario.hpp"
#include "qcausal/settings_gen.hpp"
#include "qcausal/stats.hpp"

namespace qcausal::io {

std::string read_text(const std::filesystem::path &path);
/// Throws InputError if the file cannot be written.
void write_text(const std::filesystem::path &path, const std::string &content);

CountsTable parse_counts_csv(const std::string &text);
std::string format_counts_csv(const CountsTable &c);

ObservedDistribution parse_probs_json(const nlohmann::json &j);
nlohmann::json probs_to_json(const ObservedDistribution &p);

enum class InputFormat { Counts, Probs };
InputFormat parse_format(const std::string &name);
/// `.csv` files are counts, anything else probability JSON.
InputFormat guess_format(const std::filesystem::path &path);

ObservedDistribution load_distribution(const std::filesystem::path &path, InputFormat format);

struct Dataset {
    std::optional<Family> family;
    std::vector<DatasetPoint> points;
};
Dataset parse_dataset_json(const nlohmann::json &j);
nlohmann::json dataset_to_json(const Dataset &d);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

} // namespace qcausal::io
