// Constants of the form  q(l) * 2^(a*l+b) * pi^c * prod Gamma(arg_i)^{e_i}
// with q an exact rational function and every Gamma argument affine in the
// formal parameter. Canonicalization repeatedly applies G(z+1) = z*G(z),
// so equality of canonical forms is mathematical equality.
#pragma once

#include <riesz_forms/lambda_rational.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace riesz_forms {

struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct unsupported_pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

class GammaExpr {
  public:
    GammaExpr() : prefactor_(Rational(1)) {}

    static GammaExpr zero();
    static GammaExpr one() { return GammaExpr(); }
    static GammaExpr from_rational(LambdaRational q);
    static GammaExpr gamma(Affine arg, int exponent = 1);
    static GammaExpr power_of_two(Affine exponent);
    static GammaExpr power_of_pi(Rational exponent);

    const LambdaRational& prefactor() const { return prefactor_; }
    const Affine& two_exponent() const { return two_exp_; }
    const Rational& pi_exponent() const { return pi_exp_; }
    const std::vector<std::pair<Affine, int>>& gamma_factors() const { return gammas_; }

    bool is_zero() const { return prefactor_.is_zero(); }
    // true when the canonical form is a bare rational function of l
    bool is_rational() const;
    std::optional<LambdaRational> as_rational() const;

    GammaExpr operator*(const GammaExpr& o) const;
    GammaExpr operator*(const LambdaRational& q) const;
    GammaExpr operator-() const;
    GammaExpr inverse() const;
    GammaExpr operator/(const GammaExpr& o) const { return *this * o.inverse(); }

    // sum, defined when the non-rational parts agree after normalization
    std::optional<GammaExpr> try_add(const GammaExpr& o) const;

    // canonical form (idempotent, multiplicative)
    GammaExpr normalized() const;

    bool operator==(const GammaExpr& o) const;
    bool operator!=(const GammaExpr& o) const { return !(*this == o); }

    // positive: pole order at l0; negative: vanishing order; 0: finite nonzero
    int order_at(const Rational& l0) const;

    // residue of a simple pole at l0, as a constant expression; zero when
    // regular; throws unsupported_pole_error for higher-order poles
    GammaExpr residue_at(const Rational& l0) const;

    // exact substitution l = l0; throws pole_error at a pole
    GammaExpr substitute(const Rational& l0) const;

    // value under l -> s*l + t
    GammaExpr compose_affine(const Rational& s, const Rational& t) const;

    // floating evaluation; throws pole_error at poles of any factor
    double evaluate(double l0) const;

    std::string str(const std::string& var = "l") const;

  private:
    LambdaRational prefactor_;
    Affine two_exp_{Rational(0), Rational(0)};
    Rational pi_exp_{0};
    std::vector<std::pair<Affine, int>> gammas_;  // not necessarily canonical
};

inline GammaExpr operator*(const LambdaRational& q, const GammaExpr& e) { return e * q; }

}  // namespace riesz_forms
