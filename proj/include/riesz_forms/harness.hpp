// The two numeric routes for the convolution operators: exact-symbol FFT
// multiplication and direct quadrature of the kernel integral. The hot
// loops are OpenMP-parallel; serial reference implementations are kept for
// testing and benchmarking.
#pragma once

#include <riesz_forms/grid.hpp>
#include <riesz_forms/multiplier.hpp>
#include <riesz_forms/riesz_family.hpp>

namespace riesz_forms {

// quadratic-form structure of i_z eps_z and eps_z i_z on basis p-forms:
// entries (I, J, k, l, sign) contribute sign * z_k * z_l to matrix slot (I, J)
struct FormMatrixStructure {
    int n = 0, p = 0, C = 0;
    std::vector<BasisForm> basis;
    std::vector<std::array<int, 5>> ie;
    std::vector<std::array<int, 5>> ei;
};

FormMatrixStructure build_form_structure(int n, int p);

// unnormalized DFT with kernel e^{+i<x,xi>} (matching F(delta_0) = 1)
void fft_forward(const Grid& grid, std::vector<std::complex<double>>& data);
// inverse of fft_forward, including the 1/N^n factor
void fft_inverse(const Grid& grid, std::vector<std::complex<double>>& data);

// pointwise application of r^rpow (P i eps + Q eps i) in the frequency
// domain; the zero-frequency bin of a non-integrable symbol is projected out
SampledForm apply_multiplier_fft(const Multiplier& m, double lambda0, const SampledForm& f,
                                 bool parallel = true);
SampledForm apply_multiplier_fft_serial(const Multiplier& m, double lambda0, const SampledForm& f);

// trapezoidal quadrature of the kernel convolution; requires lambda0 > -n,
// the singular cell at x = y is dropped
SampledForm direct_convolution(const RieszParams& params, double lambda0, const SampledForm& f,
                               bool parallel = true);
SampledForm direct_convolution_serial(const RieszParams& params, double lambda0, const SampledForm& f);

}  // namespace riesz_forms
