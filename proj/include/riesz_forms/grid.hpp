// Sampled complex-valued form fields on a uniform periodic grid, plus the
// polynomial-times-Gaussian test forms used by the numeric cross-checks.
#pragma once

#include <riesz_forms/radial.hpp>

#include <complex>
#include <vector>

namespace riesz_forms {

struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Grid {
    int n;       // 2 or 3
    double L;    // half-width of the cube [-L, L]^n
    int N;       // samples per axis, a power of two

    Grid(int n_, double L_, int N_);

    double h() const { return 2.0 * L / N; }
    size_t total() const {
        size_t t = 1;
        for (int i = 0; i < n; ++i) t *= static_cast<size_t>(N);
        return t;
    }
    // grid point coordinates of a flat index
    std::vector<double> point(size_t flat) const;
    // signed frequency index per axis for a flat index
    std::vector<int> freq_index(size_t flat) const;
    // physical frequency of a signed index: xi = pi/L * m
    double freq_of(int m) const { return M_PI / L * m; }

    bool operator==(const Grid& o) const { return n == o.n && L == o.L && N == o.N; }
};

struct SampledForm {
    Grid grid;
    int p;
    // one array of grid values per basis p-form, in canonical basis order
    std::vector<std::vector<std::complex<double>>> data;

    SampledForm(Grid g, int p_);

    size_t components() const { return data.size(); }
    SampledForm& operator*=(std::complex<double> c);
    // circular shift by whole cells along each axis
    SampledForm translated(const std::vector<int>& shift) const;
};

// polynomial coefficient form (exact) times a Gaussian of width sigma
struct TestFormSpec {
    RadialExpr poly;    // polynomial-coefficient form
    Rational sigma2;    // sigma^2, exact

    double sigma() const { return std::sqrt(to_double(sigma2)); }
};

SampledForm sample(const TestFormSpec& spec, const Grid& grid);

// exact symbolic image of the whole spec (polynomial times Gaussian) under
// d and delta; the Gaussian factor stays implicit
TestFormSpec gaussian_exterior_d(const TestFormSpec& spec);
TestFormSpec gaussian_codifferential(const TestFormSpec& spec);

// CSV slice along the first axis through the middle of the other axes
void dump_csv_slice(const SampledForm& form, const std::string& path);

struct CompareReport {
    double rel_l2 = 0.0;                 // relative L2 error over the interior window
    std::vector<double> component_max;   // per-component max absolute difference
    double tolerance = 0.0;
    bool pass = false;
};

CompareReport compare_report(const SampledForm& a, const SampledForm& b, double interior_fraction,
                             double tolerance);

}  // namespace riesz_forms
