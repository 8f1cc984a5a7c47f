// Benchmark comparing the serial reference kernels against the
// OpenMP-parallel ones, plus the FFT multiplier route for scale.
#include <riesz_forms/harness.hpp>
#include <riesz_forms/suites.hpp>

#include <omp.h>

#include <cstdio>
#include <cstdlib>

using namespace riesz_forms;

namespace {

TestFormSpec bump(int n, int p) {
    BasisForm b = basis_forms(n, p).front();
    RadialExpr poly = RadialExpr::constant_form(n, b);
    Rational c = Rational(-1) / Rational(n);
    for (int k = 1; k <= n; ++k) {
        Monomial alpha(static_cast<size_t>(n), 0);
        alpha[static_cast<size_t>(k - 1)] = 2;
        poly.add_term(Affine(), alpha, b, LambdaRational(c));
    }
    return {poly, Rational(1)};
}

template <typename F>
double timed(F&& fn) {
    double t0 = omp_get_wtime();
    fn();
    return omp_get_wtime() - t0;
}

}  // namespace

int main(int argc, char** argv) {
    const char* env = std::getenv("RIESZ_FORMS_THREADS");
    if (env && std::atoi(env) > 0) omp_set_num_threads(std::atoi(env));

    int N = argc > 1 ? std::atoi(argv[1]) : 128;
    std::printf("grid %d x %d, %d OpenMP threads\n", N, N, omp_get_max_threads());

    for (int p : {0, 1}) {
        Grid grid(2, 8.0, N);
        SampledForm f = sample(bump(2, p), grid);
        RieszParams params = RieszParams::knapp_stein(2, p);
        FourierImage img = fourier(params);
        const double lambda0 = -1.0;

        SampledForm a(grid, p), b(grid, p), c(grid, p);
        double t_serial = timed([&] { a = direct_convolution_serial(params, lambda0, f); });
        double t_omp = timed([&] { b = direct_convolution(params, lambda0, f); });
        double t_fft = timed([&] { c = apply_multiplier_fft(img.m, lambda0, f); });

        double max_diff = 0;
        for (size_t comp = 0; comp < a.data.size(); ++comp)
            for (size_t i = 0; i < a.data[comp].size(); ++i)
                max_diff = std::max(max_diff, std::abs(a.data[comp][i] - b.data[comp][i]));

        std::printf("p=%d  quadrature serial %8.3f s | openmp %8.3f s (x%.2f) | fft route %7.3f s | "
                    "serial-vs-omp max diff %.2e\n",
                    p, t_serial, t_omp, t_serial / t_omp, t_fft, max_diff);
    }
    return 0;
}
