#include <riesz_forms/riesz_family.hpp>

namespace riesz_forms {

namespace {
const LambdaRational kOne{Rational(1)};
}

RieszParams RieszParams::riesz(int n, int p) { return {n, p, kOne, LambdaRational(Rational(0))}; }
RieszParams RieszParams::one_one(int n, int p) { return {n, p, kOne, kOne}; }
RieszParams RieszParams::knapp_stein(int n, int p) { return {n, p, kOne, LambdaRational(Rational(-1))}; }
RieszParams RieszParams::self_dual(int n, int p) { return {n, p, bg_alpha(n, p), bg_beta(n, p)}; }

LambdaRational bg_alpha(int n, int p) {
    return LambdaRational::affine(Affine(Rational(1), rat(n, 2) - p));
}

LambdaRational bg_beta(int n, int p) {
    return LambdaRational::affine(Affine(Rational(-1), rat(n, 2) - p));
}

RadialExpr RieszParams::kernel_applied(const BasisForm& beta) const {
    RadialExpr base = RadialExpr::constant_form(n, beta);
    RadialExpr out = ix_ex(base).scaled(A) + ex_ix(base).scaled(B);
    return out.times_rpow(Affine(Rational(1), Rational(-2)));
}

std::pair<LambdaRational, LambdaRational> cd_coefficients(const RieszParams& params) {
    LambdaRational l = LambdaRational::variable();
    LambdaRational C = (l + Rational(params.p)) * params.A - Rational(params.p) * params.B;
    LambdaRational D = LambdaRational(Rational(-(params.n - params.p))) * params.A +
                       (l + Rational(params.n - params.p)) * params.B;
    return {C, D};
}

FourierImage fourier(const RieszParams& params) {
    auto [C, D] = cd_coefficients(params);
    GammaExpr constant = GammaExpr::from_rational(LambdaRational(Rational(-1))) *
                         GammaExpr::power_of_two(Affine(Rational(1), Rational(params.n - 1))) *
                         GammaExpr::power_of_pi(rat(params.n, 2)) *
                         GammaExpr::gamma(Affine(rat(1, 2), rat(params.n, 2))) *
                         GammaExpr::gamma(Affine(rat(-1, 2), Rational(1)), -1);
    Multiplier m{params.n, params.p, Affine(Rational(-1), Rational(-params.n - 2)), C, D};
    return {constant, m};
}

std::pair<GammaExpr, Affine> restrict_to_functions(const FourierImage& img) {
    if (img.m.p != 0) throw std::invalid_argument("restriction to functions requires p = 0");
    return {img.constant * img.m.P, img.m.rpow + Rational(2)};
}

BernsteinSato bernstein_sato_operator(const RieszParams& params, int k) {
    if (k < 1) throw std::invalid_argument("Bernstein-Sato order must be positive");
    auto [C, D] = cd_coefficients(params);
    LambdaRational C2k = C.compose_affine(Rational(1), Rational(2 * k));
    LambdaRational D2k = D.compose_affine(Rational(1), Rational(2 * k));
    DiffOpLP op(params.n, params.p);
    op.add_term(k, GammaExpr::from_rational(C * D2k), GammaExpr::from_rational(C2k * D));

    Poly half_l(std::vector<Rational>{Rational(0), rat(1, 2)});
    Poly half_ln(std::vector<Rational>{rat(params.n, 2), rat(1, 2)});
    Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    Rational four_k(1);
    for (int i = 0; i < k; ++i) four_k *= 4;
    LambdaRational rhs = LambdaRational(pochhammer(half_l, k) * pochhammer(half_ln, k)) *
                         LambdaRational(sign * four_k) * C2k * D2k;
    return {op, rhs};
}

VerifyReport verify_bernstein_sato(const RieszParams& params, int k) {
    BernsteinSato bs = bernstein_sato_operator(params, k);
    FourierImage img = fourier(params);

    // lhs: symbol of D_2k composed with the transform of R^{l+2k}
    ScaledMultiplier sym = bs.op.symbol();
    GammaExpr lhs_const = img.constant.compose_affine(Rational(1), Rational(2 * k)) * sym.constant;
    Multiplier lhs_m = multiplier_compose(sym.m, img.m.compose_affine(Rational(1), Rational(2 * k)));

    // rhs: rhs_constant times the transform of R^l
    GammaExpr rhs_const = img.constant * bs.rhs_constant;
    ScaledMultiplier lhs{lhs_const, lhs_m};
    ScaledMultiplier rhs{rhs_const, img.m};

    VerifyReport rep;
    if (!lhs.equals(rhs)) {
        rep.pass = false;
        rep.detail = "lhs = " + lhs_const.str() + " * " + lhs_m.str() + "; rhs = " + rhs_const.str() +
                     " * " + img.m.str();
    } else {
        rep.detail = "exact multiplier identity";
    }
    return rep;
}

ResidueResult residue_at(const RieszParams& params, int k) {
    if (k < 0) throw std::invalid_argument("residue index must be non-negative");
    FourierImage img = fourier(params);
    Rational l0 = Rational(-params.n - 2 * k);

    ResidueResult res;
    res.lambda0 = l0;
    res.constant = img.constant.residue_at(l0);
    res.constant_value = res.constant.evaluate(0.0);
    Rational Pv = img.m.P.at(l0);
    Rational Qv = img.m.Q.at(l0);
    res.multiplier_form = Multiplier{params.n, params.p, Affine(Rational(0), Rational(2 * k - 2)),
                                     LambdaRational(Pv), LambdaRational(Qv)};
    if (k >= 1) {
        DiffOpLP op(params.n, params.p);
        op.add_term(k, res.constant * LambdaRational(Pv), res.constant * LambdaRational(Qv));
        res.diff_op = op;
    } else if (Pv == Qv) {
        // r^-2 (C i eps + C eps i) = C times the identity
        DiffOpLP op(params.n, params.p);
        op.add_term(0, res.constant * LambdaRational(Pv), GammaExpr::zero());
        res.diff_op = op;
    }
    return res;
}

ConvolutionResult convolution_constant(const RieszParams& params1, const RieszParams& params2) {
    if (params1.n != params2.n || params1.p != params2.p)
        throw std::invalid_argument("convolution of families with different shape");
    FourierImage f1 = fourier(params1);
    FourierImage f2 = fourier(params2);

    // parameter substitutions l -> 2(l-n) and l -> -2l
    GammaExpr c1 = f1.constant.compose_affine(Rational(2), Rational(-2 * params1.n));
    Multiplier m1 = f1.m.compose_affine(Rational(2), Rational(-2 * params1.n));
    GammaExpr c2 = f2.constant.compose_affine(Rational(-2), Rational(0));
    Multiplier m2 = f2.m.compose_affine(Rational(-2), Rational(0));

    Multiplier prod = multiplier_compose(m1, m2);
    ConvolutionResult out;
    out.residual = prod.P - prod.Q;
    out.hypothesis_ok = out.residual.is_zero();
    if (out.hypothesis_ok) {
        if (!(prod.rpow == Affine(Rational(0), Rational(-2))))
            throw std::logic_error("composed convolution multiplier has unexpected r-power");
        // P == Q makes the multiplier P times the identity; F(delta_0) = 1
        out.constant = c1 * c2 * prod.P;
    } else {
        out.constant = GammaExpr::zero();
    }
    return out;
}

}  // namespace riesz_forms
