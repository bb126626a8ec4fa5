#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include "gsobolev/corpus.hpp"
#include "gsobolev/errors.hpp"
#include "gsobolev/experiment.hpp"

namespace {

struct Options {
    std::string fn = "abs3";
    double p = 1.0;
    double q = 2.0;
    double eps = std::nan("");
    int alpha = 1;
    bool alpha_free = false;
    std::vector<int> n_list;
    std::vector<int> m_list;
    double gamma = 1.5;
    double length_scale = 1.0;
    int quad_nodes = 0;
    double quad_width = 0.0;
    std::string algo = "trig";
    std::string out;
    std::string format = "csv";
};

void add_shared(CLI::App* cmd, Options& opt) {
    cmd->add_option("--fn", opt.fn, "Corpus function id")->required();
    cmd->add_option("--p", opt.p, "Error exponent p (>= 1)")->required();
    cmd->add_option("--q", opt.q, "Smoothness exponent q (> p)")->required();
    cmd->add_option("--eps", opt.eps, "Tail slack in (0, (q-p)/(pq)); defaults to the midpoint");
    cmd->add_option("--out", opt.out, "Output file; stdout when omitted");
}

void add_trig(CLI::App* cmd, Options& opt) {
    cmd->add_option("--alpha", opt.alpha, "Integer smoothness driving the cutoff");
    cmd->add_flag("--alpha-free", opt.alpha_free, "Use the smoothness-free cutoff schedule");
    cmd->add_option("--n", opt.n_list, "Sample counts, comma separated")
        ->required()
        ->delimiter(',');
}

void add_spline(CLI::App* cmd, Options& opt) {
    cmd->add_option("--gamma", opt.gamma, "Matern order: 0.5, 1.5, 2.5 or 3.5");
    cmd->add_option("--length-scale", opt.length_scale, "Kernel length scale (> 0)");
    cmd->add_option("--m", opt.m_list, "Levels, comma separated; n = 2 (2^m - 1)")
        ->required()
        ->delimiter(',');
}

void add_quad(CLI::App* cmd, Options& opt) {
    cmd->add_option("--quad-nodes", opt.quad_nodes, "Quadrature nodes per panel");
    cmd->add_option("--quad-width", opt.quad_width, "Maximum quadrature panel width");
}

gsob::ApproximationParams make_params(const Options& opt, int alpha) {
    const double eps =
        std::isnan(opt.eps) ? gsob::ApproximationParams::default_epsilon(opt.p, opt.q) : opt.eps;
    return gsob::ApproximationParams::make(opt.p, opt.q, alpha, eps);
}

gsob::ExperimentSpec make_spec(const Options& opt, gsob::Algorithm algo, bool alpha_given) {
    gsob::ExperimentSpec spec;
    spec.algorithm = algo;
    spec.function_id = opt.fn;
    if (algo == gsob::Algorithm::trig) {
        if (!opt.alpha_free && !alpha_given)
            throw std::invalid_argument("trig cutoff needs --alpha unless --alpha-free is set");
        spec.params = make_params(opt, opt.alpha_free && !alpha_given ? 1 : opt.alpha);
        spec.alpha_free = opt.alpha_free;
        spec.n_list = opt.n_list;
    } else {
        spec.kernel = gsob::MaternKernel(opt.gamma, opt.length_scale);
        spec.params = make_params(opt, spec.kernel.smoothness_order());
        spec.m_list = opt.m_list;
    }
    if (opt.quad_nodes > 0) spec.quad_nodes_per_panel = opt.quad_nodes;
    if (opt.quad_width > 0.0) spec.quad_max_panel_width = opt.quad_width;
    spec.output_path = opt.out;
    spec.format = opt.format == "json" ? gsob::OutputFormat::json : gsob::OutputFormat::csv;
    return spec;
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty())
        std::cout << content;
    else
        gsob::write_atomic(path, content);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sampling recovery in Gaussian-weighted Sobolev spaces"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* trig = app.add_subcommand("trig", "Trigonometric interpolation convergence run");
    add_shared(trig, opt);
    add_trig(trig, opt);
    add_quad(trig, opt);
    trig->add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* spline = app.add_subcommand("spline", "Interval kernel smoother convergence run");
    add_shared(spline, opt);
    add_spline(spline, opt);
    add_quad(spline, opt);
    spline->add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* points = app.add_subcommand("points", "Sampling sites a run would use");
    add_shared(points, opt);
    points->add_option("--algo", opt.algo, "trig or spline")
        ->required()
        ->check(CLI::IsMember({"trig", "spline"}));
    points->add_option("--alpha", opt.alpha, "Integer smoothness driving the trig cutoff");
    points->add_flag("--alpha-free", opt.alpha_free, "Use the smoothness-free cutoff schedule");
    points->add_option("--n", opt.n_list, "Trig sample counts")->delimiter(',');
    points->add_option("--gamma", opt.gamma, "Matern order: 0.5, 1.5, 2.5 or 3.5");
    points->add_option("--length-scale", opt.length_scale, "Kernel length scale (> 0)");
    points->add_option("--m", opt.m_list, "Spline levels")->delimiter(',');

    CLI::App* curve = app.add_subcommand("curve", "Weighted approximant against g on a grid");
    add_shared(curve, opt);
    curve->add_option("--algo", opt.algo, "trig or spline")
        ->required()
        ->check(CLI::IsMember({"trig", "spline"}));
    curve->add_option("--alpha", opt.alpha, "Integer smoothness driving the trig cutoff");
    curve->add_flag("--alpha-free", opt.alpha_free, "Use the smoothness-free cutoff schedule");
    curve->add_option("--n", opt.n_list, "Trig sample count (single value)")->delimiter(',');
    curve->add_option("--gamma", opt.gamma, "Matern order: 0.5, 1.5, 2.5 or 3.5");
    curve->add_option("--length-scale", opt.length_scale, "Kernel length scale (> 0)");
    curve->add_option("--m", opt.m_list, "Spline level (single value)")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (trig->parsed() || spline->parsed()) {
            const gsob::Algorithm algo =
                trig->parsed() ? gsob::Algorithm::trig : gsob::Algorithm::spline;
            const bool alpha_given = trig->parsed() && trig->count("--alpha") > 0;
            gsob::ExperimentSpec spec = make_spec(opt, algo, alpha_given);
            const gsob::ConvergenceReport report = gsob::run_experiment(spec);
            if (opt.out.empty())
                std::cout << (spec.format == gsob::OutputFormat::json ? gsob::report_to_json(report)
                                                                      : gsob::report_to_csv(report));
        } else {
            CLI::App* cmd = points->parsed() ? points : curve;
            const gsob::Algorithm algo =
                opt.algo == "trig" ? gsob::Algorithm::trig : gsob::Algorithm::spline;
            gsob::ExperimentSpec spec = make_spec(opt, algo, cmd->count("--alpha") > 0);
            spec.output_path.clear();
            const std::string content =
                points->parsed()
                    ? gsob::points_to_csv(gsob::export_points(spec))
                    : gsob::curve_to_csv(gsob::export_weighted_curve(spec, gsob::default_curve_grid()));
            emit(opt.out, content);
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const gsob::numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
