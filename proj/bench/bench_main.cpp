// Times the OpenMP kernels against the serial reference implementations:
// kernel-matrix assembly from a closed-form expression and weighted operator
// composition.

#include <chrono>
#include <cstdio>
#include <random>

#include "qheis/grid.hpp"
#include "qheis/rep_a.hpp"
#include "qheis/schwartz.hpp"

using namespace qheis;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    fn(); // warm up
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

} // namespace

int main(int argc, char** argv) {
    int npoints = 256;
    int reps = 3;
    if (argc > 1) npoints = std::atoi(argv[1]);
    if (argc > 2) reps = std::atoi(argv[2]);

    const ModelParams params(0.5, 1);
    const Grid grid = Grid::trapezoid(npoints, 6.0);
    std::mt19937_64 rng(7);
    const SchwartzAPtr f = random_schwartz_a(rng, 1);
    const GaussianExpr fhat = partial_fourier_slice(params, *f, 1.0);

    set_parallel_kernels(false);
    const GridOperator a = pi_r(params, *f, 1.0, grid);
    const GridOperator b = pi_r(params, *f, 0.7, grid);

    std::printf("grid %d x %d, %d reps\n", npoints, npoints, reps);

    const double asm_serial = time_ms([&] {
        set_parallel_kernels(false);
        (void)kernel_from_orbit_symbol(params, fhat, 1.0, grid);
    }, reps);
    const double asm_parallel = time_ms([&] {
        set_parallel_kernels(true);
        (void)kernel_from_orbit_symbol(params, fhat, 1.0, grid);
    }, reps);
    std::printf("kernel assembly   serial %8.2f ms   openmp %8.2f ms   speedup %.2fx\n",
                asm_serial, asm_parallel, asm_serial / asm_parallel);

    const double comp_serial = time_ms([&] {
        set_parallel_kernels(false);
        (void)a.compose(b);
    }, reps);
    const double comp_parallel = time_ms([&] {
        set_parallel_kernels(true);
        (void)a.compose(b);
    }, reps);
    std::printf("compose           serial %8.2f ms   openmp %8.2f ms   speedup %.2fx\n",
                comp_serial, comp_parallel, comp_serial / comp_parallel);

    set_parallel_kernels(true);
    return 0;
}
