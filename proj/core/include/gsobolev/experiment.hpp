#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gsobolev/error_metrics.hpp"
#include "gsobolev/params.hpp"
#include "gsobolev/special_functions.hpp"

namespace gsob {

enum class Algorithm { trig, spline };
enum class OutputFormat { csv, json };

/// One convergence experiment: an algorithm, a corpus function, a list of
/// sample budgets, and output settings. Budgets are n for the trigonometric
/// algorithm and levels m for the interval smoother (n = 2 (2^m - 1)).
struct ExperimentSpec {
    Algorithm algorithm = Algorithm::trig;
    ApproximationParams params;
    std::string function_id = "abs3";
    std::vector<int> n_list;
    std::vector<int> m_list;
    MaternKernel kernel;                       // spline only
    bool alpha_free = false;                   // trig only
    std::function<double(int)> gamma_schedule; // defaults to max(ln ln n, 1)
    std::optional<int> quad_nodes_per_panel;
    std::optional<double> quad_max_panel_width;
    std::string output_path;                   // empty: nothing written
    OutputFormat format = OutputFormat::csv;

    void validate() const;
};

/// Runs the rows in order, fits the log-log rate once three or more rows
/// exist, and writes the report atomically when an output path is set.
ConvergenceReport run_experiment(const ExperimentSpec& spec);

struct PointRow {
    std::string algorithm;
    long long n = 0;
    double point = 0.0;
};

/// The sampling sites the run would use, one row per point, in evaluation
/// order: per budget for trig, per interval for the smoother.
std::vector<PointRow> export_points(const ExperimentSpec& spec);

struct CurveRow {
    double x = 0.0;
    double approx_weighted = 0.0;
    double f_weighted = 0.0;
};

/// The weighted frame on a grid: the fitted approximant of g = f rho^{1/p}
/// against g itself. Requires exactly one budget entry.
std::vector<CurveRow> export_weighted_curve(const ExperimentSpec& spec,
                                            const std::vector<double>& grid);

/// 2001 equispaced points on [-12, 12].
std::vector<double> default_curve_grid();

std::string report_to_csv(const ConvergenceReport& report);
std::string report_to_json(const ConvergenceReport& report);
ConvergenceReport report_from_json(const std::string& text);
std::string points_to_csv(const std::vector<PointRow>& rows);
std::string curve_to_csv(const std::vector<CurveRow>& rows);

/// Write-then-rename within the destination directory; the final path never
/// holds partial output.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace gsob
