#pragma once

// Command-line front end: reads a data file, builds splines and writes CSV or
// JSON tables. Kept separate from main() so tests can drive run() directly.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "trigspline/trigspline.hpp"

namespace trigspline::cli {

inline const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"nodes",  "coeffs", "factors",   "build-eval",
                                                "sample", "verify", "enumerate", "compare-analog"};
    return names;
}

struct RunConfig {
    std::string command;
    std::string input_path;
    std::string output_path; // empty: standard output
    std::string sign = "A1";
    std::vector<int> r_values{1};
    int i1 = 0;
    int i2 = 0;
    std::optional<double> alpha;
    double tol = 1e-10;
    long m_max = 20000;
    std::optional<long> fixed_m; // fixed-M truncation; required when some r is 0
    int samples = 512;
    std::string format = "csv";
    std::vector<double> t_values; // evaluation points for build-eval
};

/// Exit status for each error code; 0 is success, 1 is a usage error.
inline int exit_status(ErrorCode code) { return 10 + static_cast<int>(code); }

inline std::string format_real(double x) {
    if (std::isnan(x)) return "nan";
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", x);
    return buffer;
}

inline std::vector<double> parse_values(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw Error(ErrorCode::InputError, "input is empty");

    std::vector<double> values;
    if (text[first] == '{' || text[first] == '[') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorCode::InputError, std::string("malformed JSON: ") + e.what());
        }
        const nlohmann::json* list = &doc;
        if (doc.is_object()) {
            if (!doc.contains("values")) throw Error(ErrorCode::InputError, "JSON input lacks a \"values\" array");
            list = &doc["values"];
        }
        if (!list->is_array()) throw Error(ErrorCode::InputError, "\"values\" must be an array");
        for (const auto& item : *list) {
            if (!item.is_number()) throw Error(ErrorCode::InputError, "\"values\" must hold only numbers");
            values.push_back(item.get<double>());
        }
    } else {
        std::istringstream lines(text);
        std::string line;
        int line_no = 0;
        while (std::getline(lines, line)) {
            ++line_no;
            const std::size_t start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos || line[start] == '#') continue;
            std::string cell = line.substr(start, line.find(',', start) - start);
            while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\r' || cell.back() == '\t')) cell.pop_back();
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(cell, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != cell.size() || used == 0) {
                if (values.empty() && line_no == 1) continue; // column header
                throw Error(ErrorCode::InputError, "line " + std::to_string(line_no) + ": not a number");
            }
            values.push_back(v);
        }
    }
    for (double v : values) {
        if (!std::isfinite(v)) throw Error(ErrorCode::InputError, "input holds a non-finite value");
    }
    return values;
}

inline std::vector<double> read_values(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InputError, "cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_values(buffer.str());
}

namespace detail {

using Cell = std::variant<double, long, std::string, bool>;

/// One output block: a header record and a table, rendered as CSV or JSON.
struct Table {
    std::string title;                                   // "spec", "nodes", ...
    std::vector<std::pair<std::string, Cell>> header;    // key=value pairs
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, Cell>> summary;   // trailing key=value pairs
};

inline std::string cell_text(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) return format_real(*d);
    if (const auto* l = std::get_if<long>(&cell)) return std::to_string(*l);
    if (const auto* b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
    return std::get<std::string>(cell);
}

inline nlohmann::ordered_json cell_json(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) {
        if (!std::isfinite(*d)) return nullptr;
        return *d;
    }
    if (const auto* l = std::get_if<long>(&cell)) return *l;
    if (const auto* b = std::get_if<bool>(&cell)) return *b;
    return std::get<std::string>(cell);
}

inline void write_csv(std::ostream& out, const std::vector<Table>& tables) {
    for (const Table& table : tables) {
        out << "# " << table.title << ":";
        for (const auto& [key, value] : table.header) out << ' ' << key << '=' << cell_text(value);
        out << '\n';
        for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
        out << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
            out << '\n';
        }
        for (const auto& [key, value] : table.summary) out << "# " << key << '=' << cell_text(value) << '\n';
    }
}

inline void write_json(std::ostream& out, const std::vector<Table>& tables) {
    nlohmann::ordered_json runs = nlohmann::ordered_json::array();
    for (const Table& table : tables) {
        nlohmann::ordered_json run;
        nlohmann::ordered_json header = nlohmann::ordered_json::object();
        for (const auto& [key, value] : table.header) header[key] = cell_json(value);
        run[table.title] = header;
        run["columns"] = table.columns;
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : table.rows) {
            nlohmann::ordered_json r = nlohmann::ordered_json::array();
            for (const auto& cell : row) r.push_back(cell_json(cell));
            rows.push_back(std::move(r));
        }
        run["rows"] = std::move(rows);
        if (!table.summary.empty()) {
            nlohmann::ordered_json summary = nlohmann::ordered_json::object();
            for (const auto& [key, value] : table.summary) summary[key] = cell_json(value);
            run["summary"] = summary;
        }
        runs.push_back(std::move(run));
    }
    nlohmann::ordered_json doc;
    doc["runs"] = std::move(runs);
    out << doc.dump(2) << '\n';
}

inline void validate(const RunConfig& config) {
    bool known = false;
    for (const auto& name : command_names()) known = known || name == config.command;
    if (!known) throw Error(ErrorCode::InvalidArgument, "unknown command '" + config.command + "'");
    lookup_sign(config.sign);
    if (config.i1 != 0 && config.i1 != 1) throw Error(ErrorCode::InvalidArgument, "--i1 must be 0 or 1");
    if (config.i2 != 0 && config.i2 != 1) throw Error(ErrorCode::InvalidArgument, "--i2 must be 0 or 1");
    if (config.r_values.empty()) throw Error(ErrorCode::InvalidArgument, "at least one --r is required");
    for (int r : config.r_values) {
        if (r < 0) throw Error(ErrorCode::InvalidArgument, "--r must be >= 0");
        if (r == 0 && !config.fixed_m)
            throw Error(ErrorCode::TruncationNotConverged, "r = 0 does not converge uniformly; pass --fixed-m");
    }
    if (config.alpha && !(*config.alpha > 0.0 && std::isfinite(*config.alpha)))
        throw Error(ErrorCode::InvalidArgument, "--alpha must be positive");
    if (!(config.tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "--tol must be positive");
    if (config.m_max < TruncationPolicy{}.m_min) throw Error(ErrorCode::InvalidArgument, "--m-max too small");
    if (config.fixed_m && *config.fixed_m < 1) throw Error(ErrorCode::InvalidArgument, "--fixed-m must be >= 1");
    if (config.samples < 2) throw Error(ErrorCode::InvalidArgument, "--samples must be >= 2");
    if (config.format != "csv" && config.format != "json")
        throw Error(ErrorCode::InvalidArgument, "--format must be csv or json");
    if (config.command == "build-eval" && config.t_values.empty())
        throw Error(ErrorCode::InvalidArgument, "build-eval needs at least one --t");
}

inline TruncationPolicy policy_for(const RunConfig& config) {
    TruncationPolicy policy;
    if (config.fixed_m) policy = TruncationPolicy::fixed(*config.fixed_m);
    policy.tol = config.tol;
    policy.m_max = config.m_max;
    return policy;
}

inline double alpha_for(const RunConfig& config, int n_nodes) {
    return config.alpha.value_or(2.0 * std::numbers::pi / n_nodes);
}

inline SplineSpec spec_for(const RunConfig& config, int r, int n_nodes, int i1, int i2, const SignMatrix& signs) {
    return SplineSpec{FactorFamily::sinc_power(r, alpha_for(config, n_nodes)), signs, n_nodes,
                      grid_kind_from_index(i1), grid_kind_from_index(i2), policy_for(config)};
}

inline std::vector<std::pair<std::string, Cell>> spec_header(const RunConfig& config, int r, int n_nodes) {
    return {{"sign", config.sign},          {"r", static_cast<long>(r)},
            {"i1", static_cast<long>(config.i1)}, {"i2", static_cast<long>(config.i2)},
            {"N", static_cast<long>(n_nodes)},    {"alpha", alpha_for(config, n_nodes)}};
}

inline std::vector<Table> nodes_tables(int n_nodes) {
    Table table{"nodes", {{"N", static_cast<long>(n_nodes)}}, {"j", "aligned", "staggered"}, {}, {}};
    const GridSpec aligned(n_nodes, GridKind::Aligned);
    const GridSpec staggered(n_nodes, GridKind::Staggered);
    for (int i = 0; i < n_nodes; ++i)
        table.rows.push_back({static_cast<long>(i + 1), aligned.node(i), staggered.node(i)});
    return {table};
}

inline std::vector<Table> coeffs_tables(const RunConfig& config, const std::vector<double>& values) {
    const int n_nodes = static_cast<int>(values.size());
    const HarmonicCoeffs coeffs = dft_coeffs(SampleSet(values, GridSpec(n_nodes, grid_kind_from_index(config.i2))));
    Table table{"coeffs", {{"N", static_cast<long>(n_nodes)}, {"i2", static_cast<long>(config.i2)}},
                {"k", "a", "b"}, {}, {}};
    table.rows.push_back({0L, coeffs.a0, 0.0});
    for (int k = 1; k <= coeffs.harmonics(); ++k)
        table.rows.push_back({static_cast<long>(k), coeffs.a[static_cast<std::size_t>(k - 1)],
                              coeffs.b[static_cast<std::size_t>(k - 1)]});
    return {table};
}

inline Table factors_table(const RunConfig& config, int r, int n_nodes) {
    const SignMatrix signs = lookup_sign(config.sign);
    const SplineSpec spec = spec_for(config, r, n_nodes, config.i1, config.i2, signs);
    const FactorPair pair =
        raw_interp_factors(spec.family, signs, spec.crosslink, spec.interpolation, n_nodes, spec.policy);
    Table table{"spec", spec_header(config, r, n_nodes), {"k", "v", "hc", "hs", "degenerate_hc", "degenerate_hs"}, {}, {}};
    for (int k = 1; k <= (n_nodes - 1) / 2; ++k) {
        const auto i = static_cast<std::size_t>(k - 1);
        const double vk = spec.family.at(k);
        table.rows.push_back({static_cast<long>(k), vk, pair.hc[i], pair.hs[i], is_degenerate(pair.hc[i], vk),
                              is_degenerate(pair.hs[i], vk)});
    }
    return table;
}

inline Table enumerate_table(const RunConfig& config, int r, const std::vector<double>& values) {
    const int n_nodes = static_cast<int>(values.size());
    Table table{"enumerate",
                {{"r", static_cast<long>(r)}, {"N", static_cast<long>(n_nodes)}, {"alpha", alpha_for(config, n_nodes)}},
                {"sign", "i1", "i2", "min_abs_hc", "min_abs_hs", "degenerate_hc", "degenerate_hs", "max_residual"},
                {},
                {}};
    for (const SignMatrix& signs : enumerate_signs()) {
        for (int i1 : {0, 1}) {
            for (int i2 : {0, 1}) {
                const SplineSpec spec = spec_for(config, r, n_nodes, i1, i2, signs);
                const FactorPair pair =
                    raw_interp_factors(spec.family, signs, spec.crosslink, spec.interpolation, n_nodes, spec.policy);
                double min_hc = std::numeric_limits<double>::infinity();
                double min_hs = std::numeric_limits<double>::infinity();
                bool degenerate_hc = false;
                bool degenerate_hs = false;
                for (std::size_t i = 0; i < pair.hc.size(); ++i) {
                    const double vk = spec.family.series_value(static_cast<long>(i + 1));
                    min_hc = std::min(min_hc, std::abs(pair.hc[i]));
                    min_hs = std::min(min_hs, std::abs(pair.hs[i]));
                    degenerate_hc = degenerate_hc || is_degenerate(pair.hc[i], vk);
                    degenerate_hs = degenerate_hs || is_degenerate(pair.hs[i], vk);
                }
                double residual = std::numeric_limits<double>::quiet_NaN();
                if (!degenerate_hc && !degenerate_hs)
                    residual = SplineModel::build(values, spec).verify_interpolation().max_deviation;
                table.rows.push_back({std::string(signs.name), static_cast<long>(i1), static_cast<long>(i2), min_hc,
                                      min_hs, degenerate_hc, degenerate_hs, residual});
            }
        }
    }
    return table;
}

inline Table model_table(const RunConfig& config, int r, const std::vector<double>& values) {
    const int n_nodes = static_cast<int>(values.size());
    const SignMatrix signs = lookup_sign(config.sign);
    const SplineModel model = SplineModel::build(values, spec_for(config, r, n_nodes, config.i1, config.i2, signs));
    Table table{"spec", spec_header(config, r, n_nodes), {}, {}, {}};

    if (config.command == "build-eval" || config.command == "sample") {
        table.columns = {"t", "value"};
        if (config.command == "sample") {
            for (const auto& [t, value] : model.sample(config.samples)) table.rows.push_back({t, value});
        } else {
            for (double t : config.t_values) table.rows.push_back({t, model.eval(t)});
        }
    } else if (config.command == "verify") {
        const InterpolationReport report = model.verify_interpolation();
        const GridSpec& grid = model.source().grid();
        table.columns = {"j", "t", "value", "data", "residual"};
        for (int i = 0; i < n_nodes; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            table.rows.push_back({static_cast<long>(i + 1), grid.node(i), model.eval(grid.node(i)),
                                  values[idx], report.residuals[idx]});
        }
        table.summary = {{"max_deviation", report.max_deviation}};
    } else { // compare-analog
        const PeriodicPolySpline analog = analog_for(model);
        const char* name = analog.kind() == AnalogKind::BrokenLine ? "broken-line"
                           : analog.kind() == AnalogKind::Cubic    ? "cubic"
                                                                   : "quadratic";
        table.columns = {"analog", "knots", "samples", "max_deviation", "solver_residual"};
        table.rows.push_back({std::string(name), static_cast<long>(index_of(analog.knots().kind())),
                              static_cast<long>(config.samples), max_deviation(model, analog, config.samples),
                              analog.solver_residual()});
    }
    return table;
}

} // namespace detail

/// Runs one command. Output goes to config.output_path, or to out when that
/// is empty. Failures print a single "error: <Code>: <message>" line to err.
inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        detail::validate(config);
        const std::vector<double> values = read_values(config.input_path);
        validate_node_count(static_cast<int>(values.size()));
        const int n_nodes = static_cast<int>(values.size());

        std::vector<detail::Table> tables;
        if (config.command == "nodes") {
            tables = detail::nodes_tables(n_nodes);
        } else if (config.command == "coeffs") {
            tables = detail::coeffs_tables(config, values);
        } else {
            for (int r : config.r_values) {
                if (config.command == "factors")
                    tables.push_back(detail::factors_table(config, r, n_nodes));
                else if (config.command == "enumerate")
                    tables.push_back(detail::enumerate_table(config, r, values));
                else
                    tables.push_back(detail::model_table(config, r, values));
            }
        }

        std::ostringstream rendered;
        if (config.format == "json") detail::write_json(rendered, tables); else detail::write_csv(rendered, tables);
        if (config.output_path.empty()) {
            out << rendered.str();
        } else {
            std::ofstream file(config.output_path, std::ios::binary);
            if (!file) throw Error(ErrorCode::InputError, "cannot open output file '" + config.output_path + "'");
            file << rendered.str();
        }
        return 0;
    } catch (const Error& e) {
        std::string message = e.what();
        for (char& c : message) if (c == '\n') c = ' ';
        err << "error: " << to_string(e.code()) << ": " << message << '\n';
        return exit_status(e.code());
    }
}

} // namespace trigspline::cli
