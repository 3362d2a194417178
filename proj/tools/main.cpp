// alphacomp command line: compounds, measures, contraction certificates,
// minimal contraction order, Hausdorff-dimension bounds, and simulation.

#include "alphacomp/alpha_compound.hpp"
#include "alphacomp/compound.hpp"
#include "alphacomp/contraction.hpp"
#include "alphacomp/io.hpp"
#include "alphacomp/matrix_functions.hpp"
#include "alphacomp/measures.hpp"
#include "alphacomp/ode.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace alphacomp;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitRefuted = 2;

struct SystemOptions {
    std::string name;
    double b = std::numeric_limits<double>::quiet_NaN();
    double c = std::numeric_limits<double>::quiet_NaN();
    std::string matrix_path;
};

SystemModel resolve_system(const SystemOptions& opt) {
    std::optional<RealMatrix> matrix;
    if (!opt.matrix_path.empty()) {
        matrix = real_part_checked(read_matrix_file(opt.matrix_path));
    }
    return make_named_system(opt.name, opt.b, opt.c, matrix);
}

void add_system_options(CLI::App* cmd, SystemOptions& opt) {
    cmd->add_option("--system", opt.name, "builtin system name")->required();
    cmd->add_option("--b", opt.b, "Thomas dissipation constant");
    cmd->add_option("--c", opt.c, "feedback gain (thomas-cl)");
    cmd->add_option("--matrix", opt.matrix_path,
                    "matrix file for lti / laplacian systems");
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

void print_spectrum(const Matrix& M) {
    auto values = eig(M).values;
    std::vector<Complex> sorted(values.data(), values.data() + values.size());
    std::sort(sorted.begin(), sorted.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });
    std::cout << "spectrum:\n";
    for (const Complex& z : sorted) {
        std::cout << "  " << format_number(z.real()) << " "
                  << format_number(z.imag()) << "\n";
    }
}

RealVector parse_point(const std::string& text) {
    std::vector<double> values;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        values.push_back(std::stod(token));
    }
    RealVector x(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) x(i) = values[i];
    return x;
}

// Merge {"flag": value} pairs from a JSON config file into argv form;
// command-line flags win.
std::vector<std::string> apply_config(std::vector<std::string> args) {
    auto it = std::find(args.begin(), args.end(), "--config");
    if (it == args.end()) return args;
    if (std::next(it) == args.end()) {
        throw std::invalid_argument("--config requires a file path");
    }
    const std::string path = *std::next(it);
    args.erase(it, std::next(it, 2));

    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file '" + path + "'");
    }
    nlohmann::json doc = nlohmann::json::parse(in);
    if (!doc.is_object()) {
        throw std::invalid_argument("config file must hold a JSON object");
    }
    for (const auto& [key, value] : doc.items()) {
        const std::string flag = "--" + key;
        if (std::find(args.begin(), args.end(), flag) != args.end()) continue;
        args.push_back(flag);
        if (value.is_string()) {
            args.push_back(value.get<std::string>());
        } else if (!value.is_boolean() || !value.get<bool>()) {
            args.push_back(value.dump());
        }
    }
    return args;
}

int run(std::vector<std::string> args) {
    CLI::App app{"compound matrices, matrix measures, and contraction "
                 "analysis for nonlinear systems"};
    app.require_subcommand(1);

    // ---- compound ----
    std::string in_path, out_path, kind = "mult";
    double order = 1.0;
    auto* cmd_compound =
        app.add_subcommand("compound", "k or alpha compound of a matrix");
    cmd_compound->add_option("--input", in_path, "matrix JSON file")
        ->required();
    cmd_compound->add_option("--kind", kind, "mult or add")
        ->check(CLI::IsMember({"mult", "add"}));
    cmd_compound->add_option("--order", order, "integer k or real alpha")
        ->required();
    cmd_compound->add_option("--output", out_path, "write result here");

    // ---- measure ----
    std::string measure_in, measure_p = "2";
    double measure_alpha = 1.0;
    auto* cmd_measure =
        app.add_subcommand("measure", "matrix measure of A^[alpha] and the "
                                      "full compound-measure chain");
    cmd_measure->add_option("--input", measure_in, "matrix JSON file")
        ->required();
    cmd_measure->add_option("--p", measure_p, "norm selector: 1, 2, inf");
    cmd_measure->add_option("--alpha", measure_alpha, "compound order");

    // ---- certify ----
    SystemOptions certify_sys;
    double certify_alpha = 1.0, certify_horizon = 0.0;
    int certify_grid = 9, certify_tsamples = 1;
    std::string certify_p = "2";
    auto* cmd_certify = app.add_subcommand(
        "certify", "sampled alpha-contraction certificate (exit 0 certified, "
                   "2 refuted)");
    add_system_options(cmd_certify, certify_sys);
    cmd_certify->add_option("--alpha", certify_alpha, "contraction order")
        ->required();
    cmd_certify->add_option("--p", certify_p, "norm selector: 1, 2, inf");
    cmd_certify->add_option("--grid", certify_grid,
                            "samples per axis over the system domain");
    cmd_certify->add_option("--horizon", certify_horizon,
                            "latest time sample for time-varying checks");
    cmd_certify->add_option("--tsamples", certify_tsamples,
                            "number of time samples over [0, horizon]");

    // ---- alpha-star ----
    SystemOptions star_sys;
    std::string star_p = "2";
    int star_grid = 9;
    double star_tol = 1e-3;
    auto* cmd_star = app.add_subcommand(
        "alpha-star", "minimal contraction order by bisection");
    add_system_options(cmd_star, star_sys);
    cmd_star->add_option("--p", star_p, "norm selector: 1, 2, inf");
    cmd_star->add_option("--grid", star_grid, "samples per axis");
    cmd_star->add_option("--tol", star_tol, "bisection tolerance");

    // ---- hausdorff ----
    std::vector<std::string> jac_paths;
    SystemOptions haus_sys;
    double haus_alpha = 1.0, haus_tau = 1.0;
    int haus_grid = 3;
    auto* cmd_haus = app.add_subcommand(
        "hausdorff", "Hausdorff-dimension upper-bound test from sampled "
                     "Jacobians (omega < 1)");
    cmd_haus->add_option("--jacobian", jac_paths,
                         "map Jacobian file (repeatable)");
    cmd_haus->add_option("--system", haus_sys.name,
                         "sample time-tau flow Jacobians of this system");
    cmd_haus->add_option("--b", haus_sys.b, "Thomas dissipation constant");
    cmd_haus->add_option("--c", haus_sys.c, "feedback gain (thomas-cl)");
    cmd_haus->add_option("--matrix", haus_sys.matrix_path,
                         "matrix file for lti / laplacian systems");
    cmd_haus->add_option("--alpha", haus_alpha, "candidate dimension")
        ->required();
    cmd_haus->add_option("--tau", haus_tau, "flow time for system sampling");
    cmd_haus->add_option("--grid", haus_grid, "samples per axis");

    // ---- simulate ----
    SystemOptions sim_sys;
    std::string sim_x0, sim_out, sim_method = "rk45";
    double sim_t = 1.0, sim_t0 = 0.0, sim_abs = 1e-9, sim_rel = 1e-9,
           sim_dt = 1e-3;
    auto* cmd_sim = app.add_subcommand("simulate", "integrate a system and "
                                                   "export the trajectory CSV");
    add_system_options(cmd_sim, sim_sys);
    cmd_sim->add_option("--x0", sim_x0, "initial state, comma separated")
        ->required();
    cmd_sim->add_option("--t", sim_t, "final time")->required();
    cmd_sim->add_option("--t0", sim_t0, "initial time");
    cmd_sim->add_option("--method", sim_method, "rk45 or rk4")
        ->check(CLI::IsMember({"rk45", "rk4"}));
    cmd_sim->add_option("--abs-tol", sim_abs, "absolute tolerance (rk45)");
    cmd_sim->add_option("--rel-tol", sim_rel, "relative tolerance (rk45)");
    cmd_sim->add_option("--dt", sim_dt, "fixed step (rk4)");
    cmd_sim->add_option("--output", sim_out, "CSV path (default: stdout)");

    args = apply_config(std::move(args));
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (cmd_compound->parsed()) {
        const Matrix A = read_matrix_file(in_path);
        const AlphaIndex alpha =
            AlphaIndex::of(order, static_cast<int>(std::min(A.rows(),
                                                            A.cols())));
        const Matrix result = (kind == "mult")
                                  ? alpha_mult_compound(A, alpha)
                                  : alpha_add_compound(A, alpha);
        if (!out_path.empty()) write_matrix_file(out_path, result);
        print_spectrum(result);
        return kExitOk;
    }

    if (cmd_measure->parsed()) {
        const Matrix A = read_matrix_file(measure_in);
        const MeasureNorm p = parse_measure_norm(measure_p);
        const AlphaIndex alpha =
            AlphaIndex::of(measure_alpha, static_cast<int>(A.rows()));
        std::cout << "mu_" << to_string(p) << "(A^[" << format_number(alpha.alpha)
                  << "]) = " << format_number(alpha_measure(A, alpha, p))
                  << "\nchain:";
        for (double v : measure_chain(A, p)) std::cout << ' ' << format_number(v);
        std::cout << "\n";
        return kExitOk;
    }

    if (cmd_certify->parsed()) {
        const SystemModel sys = resolve_system(certify_sys);
        const MeasureNorm p = parse_measure_norm(certify_p);
        const AlphaIndex alpha = AlphaIndex::of(certify_alpha, sys.dimension);
        const auto samples = grid_samples(sys.domain, certify_grid);
        std::vector<double> t_grid;
        if (certify_horizon <= 0.0 || certify_tsamples <= 1) {
            t_grid.push_back(0.0);
        } else {
            for (int i = 0; i < certify_tsamples; ++i) {
                t_grid.push_back(certify_horizon * i /
                                 (certify_tsamples - 1));
            }
        }
        const auto cert =
            certify_alpha_contraction(sys, alpha, p, samples, t_grid);
        std::cout << certificate_to_json(cert) << "\n";
        return cert.certified ? kExitOk : kExitRefuted;
    }

    if (cmd_star->parsed()) {
        const SystemModel sys = resolve_system(star_sys);
        const MeasureNorm p = parse_measure_norm(star_p);
        const auto samples = grid_samples(sys.domain, star_grid);
        std::vector<AlphaProbe> trace;
        const double star = minimal_alpha(sys, p, samples, star_tol, &trace);
        std::cout << "alpha_star = " << format_number(star) << "\n";
        std::cout << "trace:\n";
        for (const auto& probe : trace) {
            std::cout << "  alpha = " << format_number(probe.alpha) << " -> "
                      << (probe.certified ? "certified" : "refuted") << "\n";
        }
        return kExitOk;
    }

    if (cmd_haus->parsed()) {
        std::vector<Matrix> jacobians;
        AlphaIndex alpha = AlphaIndex::of(haus_alpha);
        if (!jac_paths.empty()) {
            for (const auto& path : jac_paths) {
                jacobians.push_back(read_matrix_file(path));
            }
            alpha = AlphaIndex::of(
                haus_alpha,
                static_cast<int>(std::min(jacobians.front().rows(),
                                          jacobians.front().cols())));
        } else if (!haus_sys.name.empty()) {
            const SystemModel sys = resolve_system(haus_sys);
            alpha = AlphaIndex::of(haus_alpha, sys.dimension);
            for (const auto& x0 : grid_samples(sys.domain, haus_grid)) {
                const auto sol = integrate_variational(sys, x0, 0.0, haus_tau);
                jacobians.push_back(sol.fundamental.back().cast<Complex>());
            }
        } else {
            throw std::invalid_argument(
                "hausdorff needs --jacobian files or a --system to sample");
        }
        const auto bound = douady_oesterle_check(jacobians, alpha);
        std::cout << dimension_bound_to_json(bound) << "\n";
        std::cout << "omega_max = " << format_number(bound.omega_max)
                  << ", conclusive = " << (bound.conclusive ? "true" : "false")
                  << "\n";
        return kExitOk;
    }

    if (cmd_sim->parsed()) {
        const SystemModel sys = resolve_system(sim_sys);
        const RealVector x0 = parse_point(sim_x0);
        IntegratorConfig cfg;
        cfg.method = (sim_method == "rk4")
                         ? IntegratorConfig::Method::Rk4Fixed
                         : IntegratorConfig::Method::Rk45Adaptive;
        cfg.abs_tol = sim_abs;
        cfg.rel_tol = sim_rel;
        cfg.fixed_step = sim_dt;
        const Trajectory traj = integrate(sys, x0, sim_t0, sim_t, cfg);
        if (sim_out.empty()) {
            write_trajectory_csv(std::cout, traj);
        } else {
            write_trajectory_csv_file(sim_out, traj);
            std::cout << "wrote " << traj.times.size() << " rows to " << sim_out
                      << "\n";
        }
        if (traj.status != Trajectory::Status::Complete) {
            std::cerr << "integration stopped early at t = "
                      << format_number(traj.times.back())
                      << " (step-size underflow)\n";
            return kExitError;
        }
        return kExitOk;
    }

    return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* threads = std::getenv("ALPHACOMP_THREADS")) {
        const int count = std::atoi(threads);
        if (count >= 1) Eigen::setNbThreads(count);
    }
    std::vector<std::string> args(argv, argv + argc);
    try {
        return run(std::move(args));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
