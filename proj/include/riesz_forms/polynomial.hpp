// Dense univariate polynomials over the exact rationals.
#pragma once

#include <riesz_forms/rational.hpp>

#include <vector>

namespace riesz_forms {

class Poly {
  public:
    Poly() = default;
    explicit Poly(Rational c) : coeff_{std::move(c)} { trim(); }
    explicit Poly(std::vector<Rational> ascending) : coeff_(std::move(ascending)) { trim(); }

    static Poly variable() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }
    static Poly affine(const Affine& f) { return Poly(std::vector<Rational>{f.b, f.a}); }

    bool is_zero() const { return coeff_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coeff_.size()) - 1; }
    const Rational& leading() const;
    const std::vector<Rational>& coefficients() const { return coeff_; }
    Rational coefficient(int k) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Rational& c) const;
    bool operator==(const Poly& o) const { return coeff_ == o.coeff_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Rational at(const Rational& x) const;
    double at(double x) const;

    // p(s*x + t)
    Poly compose_affine(const Rational& s, const Rational& t) const;

    // quotient and remainder; divisor must be nonzero
    static std::pair<Poly, Poly> div_mod(const Poly& num, const Poly& den);
    static Poly gcd(Poly a, Poly b);  // monic gcd

    // multiplicity of x0 as a root
    int root_multiplicity(const Rational& x0) const;
    // divides out (x - x0)^m exactly
    Poly deflate(const Rational& x0, int m) const;

    Poly monic() const;

    std::string str(const std::string& var = "l") const;

  private:
    void trim();
    std::vector<Rational> coeff_;  // ascending, no trailing zeros
};

inline Poly pochhammer(const Poly& base, int k) {
    Poly r{Rational(1)};
    for (int i = 0; i < k; ++i) r = r * (base + Poly(Rational(i)));
    return r;
}

}  // namespace riesz_forms
