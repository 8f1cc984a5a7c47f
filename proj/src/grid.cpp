#include <riesz_forms/grid.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>

namespace riesz_forms {

Grid::Grid(int n_, double L_, int N_) : n(n_), L(L_), N(N_) {
    if (n < 1 || n > 3) throw std::invalid_argument("grid dimension must be 1, 2 or 3");
    if (L <= 0) throw std::invalid_argument("grid extent must be positive");
    if (N < 2 || (N & (N - 1)) != 0) throw std::invalid_argument("samples per axis must be a power of two");
}

std::vector<double> Grid::point(size_t flat) const {
    std::vector<double> x(static_cast<size_t>(n));
    for (int d = n - 1; d >= 0; --d) {
        x[static_cast<size_t>(d)] = -L + h() * static_cast<double>(flat % static_cast<size_t>(N));
        flat /= static_cast<size_t>(N);
    }
    return x;
}

std::vector<int> Grid::freq_index(size_t flat) const {
    std::vector<int> m(static_cast<size_t>(n));
    for (int d = n - 1; d >= 0; --d) {
        int idx = static_cast<int>(flat % static_cast<size_t>(N));
        m[static_cast<size_t>(d)] = idx < N / 2 ? idx : idx - N;
        flat /= static_cast<size_t>(N);
    }
    return m;
}

SampledForm::SampledForm(Grid g, int p_) : grid(g), p(p_) {
    if (p < 0 || p > grid.n) throw std::invalid_argument("form degree out of range");
    data.assign(static_cast<size_t>(binomial(grid.n, p)),
                std::vector<std::complex<double>>(grid.total(), {0.0, 0.0}));
}

SampledForm& SampledForm::operator*=(std::complex<double> c) {
    for (auto& comp : data)
        for (auto& v : comp) v *= c;
    return *this;
}

SampledForm SampledForm::translated(const std::vector<int>& shift) const {
    if (shift.size() != static_cast<size_t>(grid.n)) throw std::invalid_argument("shift arity mismatch");
    SampledForm out(grid, p);
    const int N = grid.N;
    for (size_t c = 0; c < data.size(); ++c) {
        for (size_t i = 0; i < grid.total(); ++i) {
            // destination index of source cell i under the circular shift
            size_t rem = i, dest = 0;
            std::vector<int> idx(static_cast<size_t>(grid.n));
            for (int d = grid.n - 1; d >= 0; --d) {
                idx[static_cast<size_t>(d)] = static_cast<int>(rem % static_cast<size_t>(N));
                rem /= static_cast<size_t>(N);
            }
            for (int d = 0; d < grid.n; ++d) {
                int v = (idx[static_cast<size_t>(d)] + shift[static_cast<size_t>(d)]) % N;
                if (v < 0) v += N;
                dest = dest * static_cast<size_t>(N) + static_cast<size_t>(v);
            }
            out.data[c][dest] = data[c][i];
        }
    }
    return out;
}

SampledForm sample(const TestFormSpec& spec, const Grid& grid) {
    if (spec.sigma2 <= 0) throw std::invalid_argument("Gaussian width must be positive");
    if (!spec.poly.is_polynomial())
        throw std::invalid_argument("test form must have polynomial coefficients");
    if (spec.poly.n() != grid.n) throw std::invalid_argument("test form dimension mismatch");

    SampledForm out(grid, spec.poly.p());
    std::vector<BasisForm> basis = basis_forms(grid.n, spec.poly.p());
    // pre-extract (component, coefficient, alpha)
    struct Term {
        size_t comp;
        double coeff;
        Monomial alpha;
    };
    std::vector<Term> terms;
    for (const auto& [key, c] : spec.poly.terms()) {
        size_t comp = 0;
        while (basis[comp] != key.basis) ++comp;
        terms.push_back({comp, c.at(0.0), key.alpha});
    }
    const double inv2s2 = 1.0 / (2.0 * to_double(spec.sigma2));
    const size_t total = grid.total();
#pragma omp parallel for schedule(static)
    for (long long flat = 0; flat < static_cast<long long>(total); ++flat) {
        std::vector<double> x = grid.point(static_cast<size_t>(flat));
        double r2 = 0;
        for (double v : x) r2 += v * v;
        double g = std::exp(-r2 * inv2s2);
        for (const Term& t : terms) {
            double v = t.coeff * g;
            for (size_t d = 0; d < x.size(); ++d)
                for (int e = 0; e < t.alpha[d]; ++e) v *= x[d];
            out.data[t.comp][static_cast<size_t>(flat)] += v;
        }
    }
    return out;
}

TestFormSpec gaussian_exterior_d(const TestFormSpec& spec) {
    LambdaRational inv_s2{Rational(1) / spec.sigma2};
    RadialExpr poly = exterior_d(spec.poly) - exterior_x(spec.poly).scaled(inv_s2);
    return {poly, spec.sigma2};
}

TestFormSpec gaussian_codifferential(const TestFormSpec& spec) {
    LambdaRational inv_s2{Rational(1) / spec.sigma2};
    RadialExpr poly = codifferential(spec.poly) + interior_x(spec.poly).scaled(inv_s2);
    return {poly, spec.sigma2};
}

void dump_csv_slice(const SampledForm& form, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    os << std::setprecision(17);
    std::vector<BasisForm> basis = basis_forms(form.grid.n, form.p);
    os << "x";
    for (const auto& b : basis) {
        std::string name = "c";
        for (int i : b.indices()) name += std::to_string(i);
        os << "," << name;
    }
    os << "\n";
    const int N = form.grid.N;
    size_t stride = 1;
    for (int d = 1; d < form.grid.n; ++d) stride *= static_cast<size_t>(N);
    size_t offset = 0;
    for (int d = 1; d < form.grid.n; ++d) offset = offset * static_cast<size_t>(N) + static_cast<size_t>(N / 2);
    for (int i = 0; i < N; ++i) {
        size_t flat = static_cast<size_t>(i) * stride + offset;
        os << (-form.grid.L + form.grid.h() * i);
        for (const auto& comp : form.data) os << "," << comp[flat].real();
        os << "\n";
    }
}

CompareReport compare_report(const SampledForm& a, const SampledForm& b, double interior_fraction,
                             double tolerance) {
    if (!(a.grid == b.grid) || a.p != b.p) throw std::invalid_argument("compared forms differ in shape");
    if (interior_fraction <= 0 || interior_fraction > 1)
        throw std::invalid_argument("interior fraction must be in (0, 1]");
    CompareReport rep;
    rep.tolerance = tolerance;
    rep.component_max.assign(a.data.size(), 0.0);
    const int N = a.grid.N;
    const int lo = static_cast<int>(std::floor(N * (1.0 - interior_fraction) / 2.0));
    const int hi = N - lo;
    double num = 0, den = 0;
    for (size_t i = 0; i < a.grid.total(); ++i) {
        size_t rem = i;
        bool interior = true;
        for (int d = a.grid.n - 1; d >= 0; --d) {
            int idx = static_cast<int>(rem % static_cast<size_t>(N));
            rem /= static_cast<size_t>(N);
            if (idx < lo || idx >= hi) {
                interior = false;
                break;
            }
        }
        if (!interior) continue;
        for (size_t c = 0; c < a.data.size(); ++c) {
            double d2 = std::norm(a.data[c][i] - b.data[c][i]);
            num += d2;
            den += std::norm(b.data[c][i]);
            rep.component_max[c] = std::max(rep.component_max[c], std::sqrt(d2));
        }
    }
    rep.rel_l2 = den > 0 ? std::sqrt(num / den) : std::sqrt(num);
    rep.pass = rep.rel_l2 <= tolerance;
    return rep;
}

}  // namespace riesz_forms
