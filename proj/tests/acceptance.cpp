// Acceptance gate: runs every verification suite at desk scale
// (n = 1, lambda in {0, 0.5}, grid N = 128, L = 6) and prints one line per
// criterion.  Exit status is the number of failed criteria.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "qheis/suites.hpp"

namespace {

const char* kCriterionText[] = {
    "",
    "group axioms (associativity, unit, inverse; all five groups)",
    "dressing consistency (factorization route, left action, orbit invariance)",
    "infinitesimal dressing matches finite differences",
    "omega form: stabilizer vanishing and dressing invariance",
    "measures: det B, symplectic fourier round trip and parseval",
    "trace formula and hilbert-schmidt identity",
    "representation homomorphism/adjoint oracles with grid refinement",
    "deformed product suite (quantization map, associativity, hbar slope)",
    "plancherel identity (closed form, grid route, intertwining)",
    "topology suite (limit operators, diagonality, unitary scaled fourier)",
};

} // namespace

int main() {
    using namespace qheis;

    struct Tally {
        int pass = 0;
        int fail = 0;
        double worst_margin = 0.0; // residual - tolerance of the worst failure
        std::string worst_name;
    };
    std::map<int, Tally> tallies;

    for (double lambda : {0.0, 0.5}) {
        RunConfig cfg;
        cfg.lambda = lambda;
        cfg.n = 1;
        cfg.grid_n = 128;
        cfg.grid_extent = 6.0;
        cfg.seed = 1;
        cfg.suites = known_suites();
        const SuiteReport report = run_suites(cfg);
        for (const auto& c : report.checks) {
            Tally& t = tallies[c.criterion];
            if (c.pass) {
                ++t.pass;
            } else {
                ++t.fail;
                const double margin = c.residual - c.tolerance;
                if (t.worst_name.empty() || margin > t.worst_margin) {
                    t.worst_margin = margin;
                    t.worst_name = c.name + " (lambda=" + std::to_string(lambda) + ")";
                }
            }
        }
    }

    int failed_criteria = 0;
    for (int crit = 1; crit <= 10; ++crit) {
        const Tally& t = tallies[crit];
        const bool ok = t.fail == 0 && t.pass > 0;
        if (!ok) ++failed_criteria;
        std::printf("criterion %2d: %s  [%d checks] %s", crit, ok ? "PASS" : "FAIL",
                    t.pass + t.fail, kCriterionText[crit]);
        if (!ok && !t.worst_name.empty()) std::printf("  worst: %s", t.worst_name.c_str());
        std::printf("\n");
    }
    std::printf("%s\n", failed_criteria == 0 ? "ACCEPTANCE: ALL CRITERIA PASS"
                                             : "ACCEPTANCE: FAILURES PRESENT");
    return failed_criteria;
}
