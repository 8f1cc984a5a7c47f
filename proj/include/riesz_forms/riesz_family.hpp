// The Riesz distribution family for differential forms,
//   R^l_{A,B}(x) = r^(l-2)(x) (A(l) i_x eps_x + B(l) eps_x i_x),
// and its exact meta-theory: Fourier transform, Bernstein-Sato operators,
// residues, convolution constants. All identity checking happens in the
// multiplier algebra.
#pragma once

#include <riesz_forms/diff_op.hpp>
#include <riesz_forms/multiplier.hpp>

#include <optional>

namespace riesz_forms {

struct RieszParams {
    int n = 0;
    int p = 0;
    LambdaRational A;
    LambdaRational B;

    // named parameter families
    static RieszParams riesz(int n, int p);        // (1, 0), the classical family
    static RieszParams one_one(int n, int p);      // (1, 1), r^l times the identity
    static RieszParams knapp_stein(int n, int p);  // (1, -1), the reflection family
    static RieszParams self_dual(int n, int p);    // (alpha_l, beta_l)

    // the associated kernel R^l_{A,B} applied to a constant form, as a
    // radial expression (for cross-checks against the multiplier route)
    RadialExpr kernel_applied(const BasisForm& beta) const;
};

// alpha_l = n/2 - p + l and beta_l = n/2 - p - l
LambdaRational bg_alpha(int n, int p);
LambdaRational bg_beta(int n, int p);

// C_l = (l+p) A - p B,  D_l = -(n-p) A + (l+n-p) B
std::pair<LambdaRational, LambdaRational> cd_coefficients(const RieszParams& params);

struct FourierImage {
    GammaExpr constant;  // -2^(l+n-1) pi^(n/2) G((l+n)/2) / G(-(l-2)/2)
    Multiplier m;        // r^(-l-n-2) (C i eps + D eps i)
};

FourierImage fourier(const RieszParams& params);

// on 0-forms the multiplier collapses to P * r^(rpow+2); returns the
// combined constant and the r-power
std::pair<GammaExpr, Affine> restrict_to_functions(const FourierImage& img);

struct BernsteinSato {
    DiffOpLP op;                   // D_2k = C_l D_{l+2k} (delta d)^k + C_{l+2k} D_l (d delta)^k
    LambdaRational rhs_constant;   // (-1)^k 4^k (l/2)_k ((l+n)/2)_k C_{l+2k} D_{l+2k}
};

BernsteinSato bernstein_sato_operator(const RieszParams& params, int k);

// exact Fourier-side verification of D_2k R^{l+2k} = rhs_constant * R^l
VerifyReport verify_bernstein_sato(const RieszParams& params, int k);

struct ResidueResult {
    Rational lambda0;                 // -n - 2k
    GammaExpr constant;               // residue of the Fourier constant at lambda0
    double constant_value = 0.0;
    Multiplier multiplier_form;       // r^(2k-2) (C(lambda0) i eps + D(lambda0) eps i)
    std::optional<DiffOpLP> diff_op;  // present iff the multiplier is polynomial
};

ResidueResult residue_at(const RieszParams& params, int k);

struct ConvolutionResult {
    bool hypothesis_ok = false;
    LambdaRational residual;             // C_{2(l-n)} C'_{-2l} - D_{2(l-n)} D'_{-2l}
    GammaExpr constant;                  // defined when the hypothesis holds
};

// convolution R^{2(l-n)}_{params1} * R^{-2l}_{params2} = constant * delta_0,
// valid exactly when the residual vanishes identically
ConvolutionResult convolution_constant(const RieszParams& params1, const RieszParams& params2);

}  // namespace riesz_forms
