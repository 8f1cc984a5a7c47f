// The two-dimensional Fourier multiplier algebra
//   r^rpow(xi) * (P * i_xi eps_xi + Q * eps_xi i_xi)
// closed under composition via (i eps)^2 = r^2 i eps, (eps i)^2 = r^2 eps i
// and vanishing cross terms.
#pragma once

#include <riesz_forms/gamma_expr.hpp>
#include <riesz_forms/radial.hpp>

namespace riesz_forms {

struct Multiplier {
    int n = 0;
    int p = 0;
    Affine rpow;
    LambdaRational P;
    LambdaRational Q;

    static Multiplier identity(int n, int p) {
        return Multiplier{n, p, Affine(Rational(0), Rational(-2)), LambdaRational(Rational(1)),
                          LambdaRational(Rational(1))};
    }

    // eps i annihilates 0-forms and i eps annihilates top forms, so the
    // corresponding coefficient carries no information there
    Multiplier canonical() const {
        Multiplier m = *this;
        if (p == 0) m.Q = LambdaRational(Rational(0));
        if (p == n) m.P = LambdaRational(Rational(0));
        return m;
    }

    bool is_zero() const {
        Multiplier m = canonical();
        return m.P.is_zero() && m.Q.is_zero();
    }

    Multiplier compose_affine(const Rational& s, const Rational& t) const {
        return Multiplier{n, p, rpow.compose(s, t), P.compose_affine(s, t), Q.compose_affine(s, t)};
    }

    bool operator==(const Multiplier& o) const {
        if (n != o.n || p != o.p) return false;
        if (is_zero() && o.is_zero()) return true;
        Multiplier a = canonical(), b = o.canonical();
        return a.rpow == b.rpow && a.P == b.P && a.Q == b.Q;
    }
    bool operator!=(const Multiplier& o) const { return !(*this == o); }

    std::string str(const std::string& var = "l") const;
};

Multiplier multiplier_compose(const Multiplier& m1, const Multiplier& m2);

// symbolic application to a radial expression in the frequency variable
RadialExpr apply_multiplier(const Multiplier& m, const RadialExpr& e);

// a multiplier together with its Gamma-expression constant; equality is
// insensitive to moving scalar factors between the two parts
struct ScaledMultiplier {
    GammaExpr constant;
    Multiplier m;

    bool equals(const ScaledMultiplier& o) const {
        if (m.n != o.m.n || m.p != o.m.p) return false;
        bool z1 = constant.is_zero() || m.is_zero();
        bool z2 = o.constant.is_zero() || o.m.is_zero();
        if (z1 || z2) return z1 == z2;
        Multiplier a = m.canonical(), b = o.m.canonical();
        if (!(a.rpow == b.rpow)) return false;
        return constant * a.P == o.constant * b.P && constant * a.Q == o.constant * b.Q;
    }
};

}  // namespace riesz_forms
