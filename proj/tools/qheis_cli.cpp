#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qheis/suites.hpp"

namespace fs = std::filesystem;

namespace {

int run_command(const qheis::RunConfig& cfg) {
    qheis::SuiteReport report = qheis::run_suites(cfg);
    for (const auto& c : report.checks) {
        std::cout << (c.pass ? "PASS" : "FAIL") << "  [" << c.suite << "] " << c.name
                  << "  residual=" << c.residual << " tol=" << c.tolerance;
        if (!c.note.empty()) std::cout << "  (" << c.note << ")";
        std::cout << "\n";
    }
    std::cout << (report.all_pass() ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED") << "\n";
    if (!cfg.out_dir.empty()) {
        fs::create_directories(cfg.out_dir);
        {
            std::ofstream js(fs::path(cfg.out_dir) / "report.json");
            if (!js) throw std::runtime_error("cannot write to " + cfg.out_dir);
            qheis::write_report_json(report, js);
        }
        {
            std::ofstream cs(fs::path(cfg.out_dir) / "residuals.csv");
            qheis::write_residuals_csv(report, cs);
        }
        if (!report.curves.empty()) {
            std::ofstream cv(fs::path(cfg.out_dir) / "convergence.csv");
            qheis::write_convergence_csv(report, cv);
        }
        std::cout << "report written to " << cfg.out_dir << "\n";
    }
    return report.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dressing-orbit and quantum Heisenberg group algebra verification suites"};
    app.require_subcommand(1);

    // run ------------------------------------------------------------------
    auto* run = app.add_subcommand("run", "run verification suites and write reports");
    std::string config_path;
    qheis::RunConfig cfg;
    std::vector<std::string> tol_overrides;
    bool serial = false;
    run->add_option("--config", config_path, "flat KEY=VALUE config file");
    run->add_option("--lambda", cfg.lambda, "deformation constant");
    run->add_option("--n", cfg.n, "vector dimension");
    run->add_option("--grid-n", cfg.grid_n, "grid points per axis");
    run->add_option("--grid-extent", cfg.grid_extent, "grid half-width");
    run->add_option("--suite", cfg.suites, "suite name (repeatable); default: all")
        ->take_all();
    run->add_option("--seed", cfg.seed, "random seed");
    run->add_option("--tolerance", tol_overrides, "override KEY=VAL (KEY is a check name)")
        ->take_all();
    run->add_option("--out", cfg.out_dir, "output directory for report.json / residuals.csv");
    run->add_flag("--serial", serial, "disable the OpenMP kernels");

    // traces ---------------------------------------------------------------
    auto* traces = app.add_subcommand("traces", "emit an orbit point cloud as CSV");
    std::vector<double> point{1.0, 1.0, 0.0, 0.0};
    int samples = 200;
    double tr_lambda = 0.0;
    double tr_zero_tol = 0.0;
    std::string tr_out = "traces.csv";
    traces->add_option("--point", point, "orbit base point p q r s")->expected(4);
    traces->add_option("--samples", samples, "points on the trace");
    traces->add_option("--lambda", tr_lambda, "deformation constant");
    traces->add_option("--zero-tol", tr_zero_tol,
                       "classification tolerance for zero tests (default exact)");
    traces->add_option("--out", tr_out, "output CSV path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            if (!config_path.empty()) {
                qheis::RunConfig file_cfg = qheis::load_config_file(config_path);
                // Command-line values override the file.
                if (run->count("--lambda") == 0) cfg.lambda = file_cfg.lambda;
                if (run->count("--n") == 0) cfg.n = file_cfg.n;
                if (run->count("--grid-n") == 0) cfg.grid_n = file_cfg.grid_n;
                if (run->count("--grid-extent") == 0) cfg.grid_extent = file_cfg.grid_extent;
                if (run->count("--seed") == 0) cfg.seed = file_cfg.seed;
                if (run->count("--suite") == 0) cfg.suites = file_cfg.suites;
                if (run->count("--out") == 0) cfg.out_dir = file_cfg.out_dir;
                cfg.tolerance_overrides = file_cfg.tolerance_overrides;
                cfg.parallel = file_cfg.parallel;
            }
            for (const std::string& kv : tol_overrides) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw std::runtime_error("--tolerance expects KEY=VAL");
                cfg.tolerance_overrides[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
            }
            if (serial) cfg.parallel = false;
            if (cfg.suites.empty() && run->count("--suite") == 0 && config_path.empty())
                cfg.suites = qheis::known_suites();
            return run_command(cfg);
        }
        if (traces->parsed()) {
            const qheis::ModelParams params(tr_lambda, 1);
            std::ofstream os(tr_out);
            if (!os) throw std::runtime_error("cannot write " + tr_out);
            qheis::write_orbit_trace_csv(params, point, samples, os, tr_zero_tol);
            std::cout << "trace written to " << tr_out << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
