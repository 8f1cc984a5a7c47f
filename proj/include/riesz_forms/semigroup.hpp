// Composition of two Riesz families into a third so that the normalized
// kernels convolve additively. The solved parameters are genuinely rational
// in the two spectral variables jointly, so they live in a small bivariate
// fraction type; equality is decided by cross-multiplication.
#pragma once

#include <riesz_forms/riesz_family.hpp>

#include <map>

namespace riesz_forms {

// polynomials in (l, v) over the exact rationals
class Poly2 {
  public:
    Poly2() = default;
    explicit Poly2(Rational c);
    static Poly2 variable_l();
    static Poly2 variable_v();
    // embeds a univariate polynomial evaluated at c_l*l + c_v*v + c_0
    static Poly2 from_poly(const Poly& p, const Rational& cl, const Rational& cv, const Rational& c0);

    bool is_zero() const { return coeff_.empty(); }
    const std::map<std::pair<int, int>, Rational>& coefficients() const { return coeff_; }

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    Poly2 operator-() const;
    bool operator==(const Poly2& o) const { return coeff_ == o.coeff_; }

    Rational at(const Rational& l0, const Rational& v0) const;
    // substitute v = v0, keeping l formal
    Poly to_poly_in_l(const Rational& v0) const;

    std::string str() const;

  private:
    void add(int i, int j, const Rational& c);
    std::map<std::pair<int, int>, Rational> coeff_;  // (deg_l, deg_v) -> coefficient
};

// unreduced fractions of bivariate polynomials
struct Frac2 {
    Poly2 num;
    Poly2 den{Rational(1)};

    Frac2 operator+(const Frac2& o) const { return {num * o.den + o.num * den, den * o.den}; }
    Frac2 operator-(const Frac2& o) const { return {num * o.den - o.num * den, den * o.den}; }
    Frac2 operator*(const Frac2& o) const { return {num * o.num, den * o.den}; }
    bool equals(const Frac2& o) const { return (num * o.den - o.num * den).is_zero(); }
    std::string str() const { return "(" + num.str() + ")/(" + den.str() + ")"; }
};

struct SemigroupResult {
    Frac2 A;  // second parameter pair of the composed family, at argument l+v-n
    Frac2 B;
    Frac2 C;  // target products C_{l-n} C'_{v-n} and D_{l-n} D'_{v-n}
    Frac2 D;
    bool verified = false;  // cd coefficients of (A, B) reproduce (C, D) exactly
};

// solves for the family whose normalized kernel is the convolution of the
// two inputs, and re-verifies the defining equations exactly
SemigroupResult semigroup_compose(const RieszParams& params1, const RieszParams& params2);

}  // namespace riesz_forms
