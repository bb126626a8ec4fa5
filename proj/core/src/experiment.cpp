#include "gsobolev/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "gsobolev/corpus.hpp"
#include "gsobolev/errors.hpp"
#include "gsobolev/spline_approx.hpp"
#include "gsobolev/trig_interp.hpp"

namespace gsob {
namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string algorithm_name(Algorithm algo) { return algo == Algorithm::trig ? "trig" : "spline"; }

QuadratureConfig quad_config(const ExperimentSpec& spec, double support) {
    QuadratureConfig cfg = QuadratureConfig::for_support(support);
    if (spec.quad_nodes_per_panel) cfg.nodes_per_panel = *spec.quad_nodes_per_panel;
    if (spec.quad_max_panel_width)
        cfg.panel_count = std::max(
            1, static_cast<int>(std::ceil(2.0 * support / *spec.quad_max_panel_width - 1e-9)));
    cfg.validate();
    return cfg;
}

double cutoff_for(const ExperimentSpec& spec, int n) {
    if (!spec.alpha_free) return select_T(n, spec.params);
    if (spec.gamma_schedule) return select_T_alpha_free(n, spec.gamma_schedule, spec.params);
    return select_T_alpha_free(n, [](int nn) { return default_gamma(nn); }, spec.params);
}

void maybe_fit(ConvergenceReport& report) {
    if (report.rows.size() < 3) return;
    std::vector<RatePoint> pts;
    for (const auto& row : report.rows) {
        if (!(row.n > 0.0) || !(row.error > 0.0)) return;
        pts.push_back({row.n, row.error});
    }
    report.fitted_rate = fit_rate(pts);
}

}  // namespace

void ExperimentSpec::validate() const {
    params.validate();
    corpus_lookup(function_id);  // throws on unknown ids
    const auto strictly_increasing = [](const std::vector<int>& v) {
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i] >= v[i + 1]) return false;
        return true;
    };
    if (algorithm == Algorithm::trig) {
        if (n_list.empty()) throw std::invalid_argument("ExperimentSpec: empty n list");
        if (!strictly_increasing(n_list))
            throw std::invalid_argument("ExperimentSpec: n list must be strictly increasing");
        for (int n : n_list)
            if (n < 2) throw std::invalid_argument("ExperimentSpec: trig budgets must be >= 2");
    } else {
        if (m_list.empty()) throw std::invalid_argument("ExperimentSpec: empty m list");
        if (!strictly_increasing(m_list))
            throw std::invalid_argument("ExperimentSpec: m list must be strictly increasing");
        for (int m : m_list)
            if (m < 1 || m > 24)
                throw std::invalid_argument("ExperimentSpec: spline levels must be in [1, 24]");
    }
    if (quad_nodes_per_panel && (*quad_nodes_per_panel < 2 || *quad_nodes_per_panel > 512))
        throw std::invalid_argument("ExperimentSpec: quadrature nodes outside [2, 512]");
    if (quad_max_panel_width && !(*quad_max_panel_width > 0.0))
        throw std::invalid_argument("ExperimentSpec: quadrature panel width must be positive");
}

ConvergenceReport run_experiment(const ExperimentSpec& spec) {
    spec.validate();
    const TestFunction f = corpus_lookup(spec.function_id);

    ConvergenceReport report;
    report.algorithm = algorithm_name(spec.algorithm);
    report.function_id = spec.function_id;
    report.params = spec.params;

    if (spec.algorithm == Algorithm::trig) {
        for (int n : spec.n_list) {
            const double T = cutoff_for(spec, n);
            const TrigInterpolant interp = build_trig_interpolant(f, n, T, spec.params.p);
            const double error = weighted_lp_error(f, interp, spec.params.p, quad_config(spec, T));
            report.rows.push_back({double(n), T, error});
        }
    } else {
        for (int m : spec.m_list) {
            const SplineApproximant approx = build_spline_approximant(
                f, m, spec.kernel, spec.kernel.smoothness_order(), spec.params.p);
            const double error =
                weighted_lp_error(f, approx, spec.params.p, quad_config(spec, double(m)));
            report.rows.push_back({double(allocate_points(m).total), double(m), error});
        }
    }
    maybe_fit(report);

    if (!spec.output_path.empty())
        write_atomic(spec.output_path,
                     spec.format == OutputFormat::csv ? report_to_csv(report) : report_to_json(report));
    return report;
}

std::vector<PointRow> export_points(const ExperimentSpec& spec) {
    spec.validate();
    std::vector<PointRow> rows;
    if (spec.algorithm == Algorithm::trig) {
        for (int n : spec.n_list) {
            const double T = cutoff_for(spec, n);
            for (int j = 0; j < n; ++j)
                rows.push_back({"trig", n, 2.0 * T * j / n - T});
        }
    } else {
        for (int m : spec.m_list) {
            const PointAllocation alloc = allocate_points(m);
            for (int k = -m; k <= m; ++k) {
                if (k == 0) continue;
                for (double x : interval_points(alloc.counts[std::abs(k) - 1], k))
                    rows.push_back({"spline", alloc.total, x});
            }
        }
    }
    return rows;
}

std::vector<CurveRow> export_weighted_curve(const ExperimentSpec& spec,
                                            const std::vector<double>& grid) {
    spec.validate();
    if (grid.empty()) throw std::invalid_argument("export_weighted_curve: empty grid");
    const auto& budgets = spec.algorithm == Algorithm::trig ? spec.n_list : spec.m_list;
    if (budgets.size() != 1)
        throw std::invalid_argument("export_weighted_curve: exactly one budget entry required");

    const TestFunction f = corpus_lookup(spec.function_id);
    const auto weighted_f = [&](double x) {
        return f.value(x) * gaussian_density_pow(x, 1.0 / spec.params.p);
    };

    std::vector<CurveRow> rows;
    rows.reserve(grid.size());
    if (spec.algorithm == Algorithm::trig) {
        const int n = spec.n_list.front();
        const TrigInterpolant interp = build_trig_interpolant(f, n, cutoff_for(spec, n), spec.params.p);
        for (double x : grid) rows.push_back({x, evaluate_trig_weighted(interp, x), weighted_f(x)});
    } else {
        const SplineApproximant approx = build_spline_approximant(
            f, spec.m_list.front(), spec.kernel, spec.kernel.smoothness_order(), spec.params.p);
        for (double x : grid) rows.push_back({x, evaluate_spline_weighted(approx, x), weighted_f(x)});
    }
    return rows;
}

std::vector<double> default_curve_grid() {
    std::vector<double> grid(2001);
    for (std::size_t i = 0; i < grid.size(); ++i)
        grid[i] = -12.0 + 24.0 * double(i) / double(grid.size() - 1);
    return grid;
}

std::string report_to_csv(const ConvergenceReport& report) {
    std::string out = "algorithm,n,param_T_or_m,error,rate_running\n";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        out += report.algorithm;
        out += ',';
        out += std::to_string(static_cast<long long>(std::llround(row.n)));
        out += ',';
        out += fmt(row.param);
        out += ',';
        out += fmt(row.error);
        out += ',';
        if (i > 0) {
            const auto& prev = report.rows[i - 1];
            out += fmt((std::log(row.error) - std::log(prev.error)) /
                       (std::log(row.n) - std::log(prev.n)));
        }
        out += '\n';
    }
    return out;
}

std::string report_to_json(const ConvergenceReport& report) {
    nlohmann::json j;
    j["algorithm"] = report.algorithm;
    j["function"] = report.function_id;
    j["params"] = {{"p", report.params.p},
                   {"q", report.params.q},
                   {"alpha", report.params.alpha},
                   {"epsilon", report.params.epsilon}};
    j["rows"] = nlohmann::json::array();
    for (const auto& row : report.rows)
        j["rows"].push_back({{"n", row.n}, {"param", row.param}, {"error", row.error}});
    if (report.fitted_rate)
        j["fitted_rate"] = *report.fitted_rate;
    else
        j["fitted_rate"] = nullptr;
    return j.dump(2) + "\n";
}

ConvergenceReport report_from_json(const std::string& text) {
    try {
        const nlohmann::json j = nlohmann::json::parse(text);
        ConvergenceReport report;
        report.algorithm = j.at("algorithm").get<std::string>();
        report.function_id = j.at("function").get<std::string>();
        const auto& params = j.at("params");
        report.params.p = params.at("p").get<double>();
        report.params.q = params.at("q").get<double>();
        report.params.alpha = params.at("alpha").get<int>();
        report.params.epsilon = params.at("epsilon").get<double>();
        for (const auto& row : j.at("rows"))
            report.rows.push_back({row.at("n").get<double>(), row.at("param").get<double>(),
                                   row.at("error").get<double>()});
        if (!j.at("fitted_rate").is_null())
            report.fitted_rate = j.at("fitted_rate").get<double>();
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("report_from_json: malformed report: ") + e.what());
    }
}

std::string points_to_csv(const std::vector<PointRow>& rows) {
    std::string out = "algorithm,n,point\n";
    for (const auto& row : rows) {
        out += row.algorithm;
        out += ',';
        out += std::to_string(row.n);
        out += ',';
        out += fmt(row.point);
        out += '\n';
    }
    return out;
}

std::string curve_to_csv(const std::vector<CurveRow>& rows) {
    std::string out = "x,approx_weighted,f_weighted\n";
    for (const auto& row : rows) {
        out += fmt(row.x);
        out += ',';
        out += fmt(row.approx_weighted);
        out += ',';
        out += fmt(row.f_weighted);
        out += '\n';
    }
    return out;
}

void write_atomic(const std::string& path, const std::string& content) {
    if (path.empty()) throw std::invalid_argument("write_atomic: empty path");
    const std::filesystem::path dest(path);
    const std::filesystem::path tmp = dest.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::invalid_argument("write_atomic: cannot open '" + tmp.string() + "'");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::invalid_argument("write_atomic: short write to '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, dest, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw std::invalid_argument("write_atomic: cannot move output into '" + path + "'");
    }
}

}  // namespace gsob
