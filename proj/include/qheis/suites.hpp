#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qheis/grid.hpp"
#include "qheis/params.hpp"

namespace qheis {

struct RunConfig {
    double lambda = 0.0;
    int n = 1;
    int grid_n = 128;
    double grid_extent = 6.0;
    std::vector<std::string> suites;
    std::uint64_t seed = 1;
    std::map<std::string, double> tolerance_overrides;
    std::string out_dir;
    bool parallel = true;

    GridSpec grid_spec() const;
};

/// Parses a flat KEY=VALUE config file (suites comma-separated, tolerance
/// overrides as tol.<check name>=value).
RunConfig load_config_file(const std::string& path);

struct CheckResult {
    std::string suite;
    std::string name;
    std::string anchor;   // which formula or law the check verifies
    int criterion = 0;    // acceptance criterion this check belongs to
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double wall_ms = 0.0;
    std::string note;
};

struct CurvePoint {
    std::string curve; // e.g. "pi_tilde_pq to S" or "homomorphism refinement"
    double x = 0.0;    // sequence parameter (dyadic p, grid size, ...)
    double value = 0.0;
};

struct SuiteReport {
    RunConfig config;
    std::vector<CheckResult> checks;
    std::vector<CurvePoint> curves;
    bool all_pass() const;
};

const std::vector<std::string>& known_suites();

/// Runs the selected suites deterministically under the config seed.
SuiteReport run_suites(const RunConfig& config);

void write_report_json(const SuiteReport& report, std::ostream& os);
void write_residuals_csv(const SuiteReport& report, std::ostream& os);
void write_convergence_csv(const SuiteReport& report, std::ostream& os);

/// Point cloud of the orbit through mu (n = 1 coordinates) as CSV rows.
void write_orbit_trace_csv(const ModelParams& params, const std::vector<double>& mu_coords,
                           int samples, std::ostream& os, double zero_tol = 0.0);

} // namespace qheis
