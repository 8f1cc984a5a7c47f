// Concrete conformally covariant operators: the Branson-Gover family on
// p-forms, its recurrence, intertwining checks for the conformal action,
// complementary-series positivity, compact-picture eigenvalue identities
// and the middle-degree reflection operator.
#pragma once

#include <riesz_forms/riesz_family.hpp>

namespace riesz_forms {

// L_2N = alpha_N (delta d)^N + beta_N (d delta)^N; L_0 = alpha_0 * Id
DiffOpLP branson_gover(int n, int p, int N);

RadialExpr apply_diffop(const DiffOpLP& op, const RadialExpr& omega);

// monomial forms x^alpha e_I with |alpha| <= degree
std::vector<Monomial> monomials_up_to(int n, int degree);

enum class CaseStatus { pass, fail, inapplicable };

struct CaseReport {
    CaseStatus status = CaseStatus::pass;
    std::string detail;
};

// L_2N = (alpha_N/alpha_{N-1} delta d + beta_N/beta_{N-1} d delta) L_{2N-2},
// checked as an exact operator identity and by application to all monomial
// forms of degree <= 2N
CaseReport verify_recurrence(int n, int p, int N);

// infinitesimal intertwining of L_2N between the weights -n/2 -+ N,
// checked on all monomial forms of degree <= 2N+1
CaseReport verify_intertwining_bg(int n, int p, int N, int j);

// Fourier-side intertwining of the reflection-family convolution operator,
// exact in the formal spectral parameter
CaseReport verify_intertwining_knapp_stein(int n, int p, int j);

struct ComplementaryInterval {
    bool empty = true;
    Rational lo{0};
    Rational hi{0};
    bool scan_pass = false;
    std::string detail;
};

// endpoints +-(n/2 - p) from the multiplier signs, with a numeric scan at
// resolution 1/64 confirming sign changes only at the endpoints
ComplementaryInterval complementary_interval(int n, int p);

struct SpectralEigen {
    int j = 0;
    int q = 0;
    GammaExpr value;  // formal in the spectral parameter
};

// G(n/2+j+l)/G(n/2+j-l) * G(n/2-p+q+l)/G(n/2-p+q-l)
SpectralEigen z_eigenvalue(int n, int p, int j, int q);

// the eigenvalue at a fixed rational parameter; throws pole_error at poles
GammaExpr z_eigenvalue_at(int n, int p, int j, int q, const Rational& l0);

// the middle-degree reflection multiplier squares to the identity, and acts
// on 1-forms as reflection in the hyperplane orthogonal to x
CaseReport beurling_ahlfors_check(int n);

}  // namespace riesz_forms
