#include "qcausal/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qcausal/error.hpp"

namespace qcausal::io {

namespace {

std::string trim(const std::string &s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string &line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) {
        out.push_back(trim(field));
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

std::uint64_t parse_uint(const std::string &s, std::size_t line_no) {
    std::uint64_t v = 0;
    const auto *end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != end) {
        throw InputError("counts CSV line " + std::to_string(line_no) + ": '" + s +
                         "' is not a nonnegative integer");
    }
    return v;
}

double json_number(const nlohmann::json &j, const std::string &where) {
    if (!j.is_number()) {
        throw InputError(where + ": expected a number");
    }
    return j.get<double>();
}

} // namespace

std::string read_text(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::filesystem::path &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw InputError("cannot open '" + path.string() + "' for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw InputError("failed writing '" + path.string() + "'");
    }
}

CountsTable parse_counts_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::array<std::array<std::array<bool, 2>, 2>, 2> seen{};
    CountsTable table;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') {
            continue;
        }
        const auto fields = split(t, ',');
        if (!header_seen) {
            if (fields != std::vector<std::string>{"x", "a", "b", "count"}) {
                throw InputError("counts CSV: expected header 'x,a,b,count', got '" + t + "'");
            }
            header_seen = true;
            continue;
        }
        if (fields.size() != 4) {
            throw InputError("counts CSV line " + std::to_string(line_no) + ": expected 4 fields");
        }
        const auto x = parse_uint(fields[0], line_no);
        const auto a = parse_uint(fields[1], line_no);
        const auto b = parse_uint(fields[2], line_no);
        if (x > 1 || a > 1 || b > 1) {
            throw InputError("counts CSV line " + std::to_string(line_no) + ": x, a, b must be 0 or 1");
        }
        if (seen[x][a][b]) {
            throw InputError("counts CSV line " + std::to_string(line_no) + ": duplicate cell");
        }
        seen[x][a][b] = true;
        table.set(static_cast<int>(x), static_cast<int>(a), static_cast<int>(b),
                  parse_uint(fields[3], line_no));
    }
    if (!header_seen) {
        throw InputError("counts CSV: missing header");
    }
    for (int x = 0; x < 2; ++x) {
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                if (!seen[x][a][b]) {
                    throw InputError("counts CSV: missing cell x=" + std::to_string(x) +
                                     " a=" + std::to_string(a) + " b=" + std::to_string(b));
                }
            }
        }
    }
    return table;
}

std::string format_counts_csv(const CountsTable &c) {
    std::string out = "x,a,b,count\n";
    for (int x = 0; x < 2; ++x) {
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                out += std::to_string(x) + "," + std::to_string(a) + "," + std::to_string(b) + "," +
                       std::to_string(c(x, a, b)) + "\n";
            }
        }
    }
    return out;
}

ObservedDistribution parse_probs_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("pabx")) {
        throw InputError("probability JSON: missing \"pabx\"");
    }
    const auto &t = j.at("pabx");
    std::array<std::array<std::array<double, 2>, 2>, 2> p{};
    if (!t.is_array() || t.size() != 2) {
        throw InputError("probability JSON: \"pabx\" must be a 2x2x2 array");
    }
    for (std::size_t x = 0; x < 2; ++x) {
        if (!t[x].is_array() || t[x].size() != 2) {
            throw InputError("probability JSON: \"pabx\" must be a 2x2x2 array");
        }
        for (std::size_t a = 0; a < 2; ++a) {
            if (!t[x][a].is_array() || t[x][a].size() != 2) {
                throw InputError("probability JSON: \"pabx\" must be a 2x2x2 array");
            }
            for (std::size_t b = 0; b < 2; ++b) {
                p[x][a][b] = json_number(t[x][a][b], "probability JSON pabx[" + std::to_string(x) +
                                                         "][" + std::to_string(a) + "][" +
                                                         std::to_string(b) + "]");
            }
        }
    }
    return ObservedDistribution(p);
}

nlohmann::json probs_to_json(const ObservedDistribution &p) {
    nlohmann::json t = nlohmann::json::array();
    for (int x = 0; x < 2; ++x) {
        nlohmann::json xa = nlohmann::json::array();
        for (int a = 0; a < 2; ++a) {
            xa.push_back({p(x, a, 0), p(x, a, 1)});
        }
        t.push_back(xa);
    }
    return {{"pabx", t}};
}

InputFormat parse_format(const std::string &name) {
    if (name == "counts") {
        return InputFormat::Counts;
    }
    if (name == "probs") {
        return InputFormat::Probs;
    }
    throw InputError("unknown format '" + name + "' (expected counts or probs)");
}

InputFormat guess_format(const std::filesystem::path &path) {
    return path.extension() == ".csv" ? InputFormat::Counts : InputFormat::Probs;
}

namespace {

nlohmann::json parse_json_text(const std::string &text, const std::string &what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw InputError(what + ": " + e.what());
    }
}

} // namespace

ObservedDistribution load_distribution(const std::filesystem::path &path, InputFormat format) {
    const std::string text = read_text(path);
    if (format == InputFormat::Counts) {
        return counts_to_distribution(parse_counts_csv(text));
    }
    return parse_probs_json(parse_json_text(text, "probability JSON '" + path.string() + "'"));
}

Dataset parse_dataset_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("points") || !j.at("points").is_array()) {
        throw InputError("dataset JSON: missing \"points\" array");
    }
    Dataset d;
    if (j.contains("family")) {
        if (!j.at("family").is_string()) {
            throw InputError("dataset JSON: \"family\" must be a string");
        }
        d.family = parse_family(j.at("family").get<std::string>());
    }
    std::size_t index = 0;
    for (const auto &pt : j.at("points")) {
        const std::string where = "dataset point " + std::to_string(index++);
        if (!pt.is_object() || !pt.contains("alpha")) {
            throw InputError(where + ": missing \"alpha\"");
        }
        const double alpha = json_number(pt.at("alpha"), where + " alpha");
        std::optional<double> phi0;
        if (pt.contains("phi0")) {
            phi0 = json_number(pt.at("phi0"), where + " phi0");
        }
        if (pt.contains("pabx")) {
            d.points.push_back({alpha, phi0, parse_probs_json(pt)});
        } else if (pt.contains("counts")) {
            const auto &t = pt.at("counts");
            CountsTable c;
            try {
                for (int x = 0; x < 2; ++x) {
                    for (int a = 0; a < 2; ++a) {
                        for (int b = 0; b < 2; ++b) {
                            c.set(x, a, b, t.at(x).at(a).at(b).get<std::uint64_t>());
                        }
                    }
                }
            } catch (const nlohmann::json::exception &) {
                throw InputError(where + ": \"counts\" must be a 2x2x2 array of nonnegative integers");
            }
            d.points.push_back({alpha, phi0, counts_to_distribution(c)});
        } else {
            throw InputError(where + ": needs \"pabx\" or \"counts\"");
        }
    }
    return d;
}

nlohmann::json dataset_to_json(const Dataset &d) {
    nlohmann::json j;
    if (d.family) {
        j["family"] = std::string(to_string(*d.family));
    }
    j["points"] = nlohmann::json::array();
    for (const auto &pt : d.points) {
        nlohmann::json e = probs_to_json(pt.empirical);
        e["alpha"] = pt.alpha;
        if (pt.phi0) {
            e["phi0"] = *pt.phi0;
        }
        j["points"].push_back(e);
    }
    return j;
}

std::string format_double(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

} // namespace qcausal::io
