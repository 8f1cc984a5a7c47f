#include <riesz_forms/harness.hpp>

#include <fftw3.h>
#include <omp.h>

#include <cmath>
#include <cstring>
#include <sstream>

namespace riesz_forms {

FormMatrixStructure build_form_structure(int n, int p) {
    FormMatrixStructure s;
    s.n = n;
    s.p = p;
    s.basis = basis_forms(n, p);
    s.C = static_cast<int>(s.basis.size());
    auto index_of = [&](const BasisForm& b) {
        for (int i = 0; i < s.C; ++i)
            if (s.basis[static_cast<size_t>(i)] == b) return i;
        throw std::logic_error("basis form not found");
    };
    for (int J = 0; J < s.C; ++J) {
        const BasisForm& eJ = s.basis[static_cast<size_t>(J)];
        for (int l = 1; l <= n; ++l) {
            SignedBasis w = wedge_axis(l, eJ);
            if (w.sign == 0) continue;
            for (int k = 1; k <= n; ++k) {
                SignedBasis c = contract_axis(k, w.form);
                if (c.sign == 0) continue;
                s.ie.push_back({index_of(c.form), J, k, l, w.sign * c.sign});
            }
        }
        for (int k = 1; k <= n; ++k) {
            SignedBasis c = contract_axis(k, eJ);
            if (c.sign == 0) continue;
            for (int l = 1; l <= n; ++l) {
                SignedBasis w = wedge_axis(l, c.form);
                if (w.sign == 0) continue;
                s.ei.push_back({index_of(w.form), J, k, l, c.sign * w.sign});
            }
        }
    }
    return s;
}

void fft_forward(const Grid& grid, std::vector<std::complex<double>>& data) {
    // FFTW_BACKWARD carries the e^{+i<x,xi>} kernel of our convention
    fftw_complex* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan = grid.n == 2
                         ? fftw_plan_dft_2d(grid.N, grid.N, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE)
                         : fftw_plan_dft_3d(grid.N, grid.N, grid.N, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
}

void fft_inverse(const Grid& grid, std::vector<std::complex<double>>& data) {
    fftw_complex* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan = grid.n == 2
                         ? fftw_plan_dft_2d(grid.N, grid.N, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE)
                         : fftw_plan_dft_3d(grid.N, grid.N, grid.N, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
    const double scale = 1.0 / static_cast<double>(grid.total());
    for (auto& v : data) v *= scale;
}

namespace {

SampledForm apply_multiplier_impl(const Multiplier& m, double lambda0, const SampledForm& f,
                                  bool parallel) {
    if (m.n != f.grid.n || m.p != f.p) throw std::invalid_argument("multiplier/form shape mismatch");
    const Grid& grid = f.grid;
    FormMatrixStructure st = build_form_structure(m.n, m.p);
    const int C = st.C;
    const double rp = m.rpow.at(lambda0);
    const double P = m.P.at(lambda0);
    const double Q = m.Q.at(lambda0);

    SampledForm out(grid, f.p);
    std::vector<std::vector<std::complex<double>>> hat(f.data);
    for (auto& comp : hat) fft_forward(grid, comp);

    const size_t total = grid.total();
#pragma omp parallel for schedule(static) if (parallel)
    for (long long flat = 0; flat < static_cast<long long>(total); ++flat) {
        std::vector<int> mi = grid.freq_index(static_cast<size_t>(flat));
        double xi[3] = {0, 0, 0};
        double r2 = 0;
        for (int d = 0; d < grid.n; ++d) {
            xi[d] = grid.freq_of(mi[static_cast<size_t>(d)]);
            r2 += xi[d] * xi[d];
        }
        if (r2 == 0.0) {
            // principal-value surrogate: the symbol has no limit at 0 for
            // negative homogeneity, so the constant mode is projected out
            for (int I = 0; I < C; ++I) out.data[static_cast<size_t>(I)][static_cast<size_t>(flat)] = 0.0;
            continue;
        }
        double mat[9] = {0, 0, 0, 0, 0, 0, 0, 0, 0};
        for (const auto& e : st.ie) mat[e[0] * C + e[1]] += P * e[4] * xi[e[2] - 1] * xi[e[3] - 1];
        for (const auto& e : st.ei) mat[e[0] * C + e[1]] += Q * e[4] * xi[e[2] - 1] * xi[e[3] - 1];
        const double w = std::pow(r2, rp / 2.0);
        for (int I = 0; I < C; ++I) {
            std::complex<double> acc{0.0, 0.0};
            for (int J = 0; J < C; ++J)
                acc += mat[I * C + J] * hat[static_cast<size_t>(J)][static_cast<size_t>(flat)];
            out.data[static_cast<size_t>(I)][static_cast<size_t>(flat)] = w * acc;
        }
    }
    for (size_t c = 0; c < out.data.size(); ++c) {
        fft_inverse(grid, out.data[c]);
        for (size_t i = 0; i < total; ++i) {
            std::complex<double> v = out.data[c][i];
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                std::ostringstream os;
                os << "non-finite value in component " << c << " at cell " << i;
                throw numeric_error(os.str());
            }
        }
    }
    return out;
}

SampledForm direct_convolution_impl(const RieszParams& params, double lambda0, const SampledForm& f,
                                    bool parallel) {
    if (params.n != f.grid.n || params.p != f.p)
        throw std::invalid_argument("kernel/form shape mismatch");
    if (!(lambda0 > -params.n))
        throw std::invalid_argument("direct quadrature requires lambda0 > -n");
    const Grid& grid = f.grid;
    if (grid.n != 2) throw std::invalid_argument("direct quadrature implemented for n = 2");

    FormMatrixStructure st = build_form_structure(params.n, params.p);
    const int C = st.C;
    const int N = grid.N;
    const double h = grid.h();
    const double A = params.A.at(lambda0);
    const double B = params.B.at(lambda0);

    // kernel matrix table over the difference lattice (2N-1)^2;
    // the singular cell z = 0 carries 0
    const int W = 2 * N - 1;
    std::vector<double> table(static_cast<size_t>(W) * W * C * C, 0.0);
#pragma omp parallel for schedule(static) if (parallel)
    for (int di = -(N - 1); di <= N - 1; ++di) {
        for (int dj = -(N - 1); dj <= N - 1; ++dj) {
            if (di == 0 && dj == 0) continue;
            double z[2] = {h * di, h * dj};
            double r2 = z[0] * z[0] + z[1] * z[1];
            double w = std::pow(r2, (lambda0 - 2.0) / 2.0);
            double* slot =
                &table[(static_cast<size_t>(di + N - 1) * W + static_cast<size_t>(dj + N - 1)) * C * C];
            for (const auto& e : st.ie) slot[e[0] * C + e[1]] += w * A * e[4] * z[e[2] - 1] * z[e[3] - 1];
            for (const auto& e : st.ei) slot[e[0] * C + e[1]] += w * B * e[4] * z[e[2] - 1] * z[e[3] - 1];
        }
    }

    SampledForm out(grid, f.p);
    const double cell = h * h;
#pragma omp parallel for schedule(static) if (parallel)
    for (int xi = 0; xi < N; ++xi) {
        for (int xj = 0; xj < N; ++xj) {
            std::vector<std::complex<double>> acc(static_cast<size_t>(C), {0.0, 0.0});
            for (int yi = 0; yi < N; ++yi) {
                const size_t row = (static_cast<size_t>(xi - yi + N - 1) * W) * C * C;
                for (int yj = 0; yj < N; ++yj) {
                    const double* slot = &table[row + static_cast<size_t>(xj - yj + N - 1) * C * C];
                    const size_t src = static_cast<size_t>(yi) * N + static_cast<size_t>(yj);
                    for (int I = 0; I < C; ++I) {
                        std::complex<double> s{0.0, 0.0};
                        for (int J = 0; J < C; ++J)
                            s += slot[I * C + J] * f.data[static_cast<size_t>(J)][src];
                        acc[static_cast<size_t>(I)] += s;
                    }
                }
            }
            const size_t dst = static_cast<size_t>(xi) * N + static_cast<size_t>(xj);
            for (int I = 0; I < C; ++I) out.data[static_cast<size_t>(I)][dst] = acc[static_cast<size_t>(I)] * cell;
        }
    }
    return out;
}

}  // namespace

SampledForm apply_multiplier_fft(const Multiplier& m, double lambda0, const SampledForm& f,
                                 bool parallel) {
    return apply_multiplier_impl(m, lambda0, f, parallel);
}

SampledForm apply_multiplier_fft_serial(const Multiplier& m, double lambda0, const SampledForm& f) {
    return apply_multiplier_impl(m, lambda0, f, false);
}

SampledForm direct_convolution(const RieszParams& params, double lambda0, const SampledForm& f,
                               bool parallel) {
    return direct_convolution_impl(params, lambda0, f, parallel);
}

SampledForm direct_convolution_serial(const RieszParams& params, double lambda0, const SampledForm& f) {
    return direct_convolution_impl(params, lambda0, f, false);
}

}  // namespace riesz_forms
