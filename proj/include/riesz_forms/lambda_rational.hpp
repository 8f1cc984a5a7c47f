// Exact rational functions in a single formal spectral parameter.
// Always reduced to lowest terms with monic denominator, so structural
// equality is mathematical equality.
#pragma once

#include <riesz_forms/polynomial.hpp>

#include <optional>

namespace riesz_forms {

class LambdaRational {
  public:
    LambdaRational() : num_(), den_(Rational(1)) {}
    LambdaRational(Rational c) : num_(std::move(c)), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
    LambdaRational(long c) : num_(Rational(c)), den_(Rational(1)) {}       // NOLINT(google-explicit-constructor)
    explicit LambdaRational(Poly p) : num_(std::move(p)), den_(Rational(1)) {}
    LambdaRational(Poly num, Poly den);

    static LambdaRational variable() { return LambdaRational(Poly::variable()); }
    static LambdaRational affine(const Affine& f) { return LambdaRational(Poly::affine(f)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    std::optional<Rational> as_constant() const;

    LambdaRational operator+(const LambdaRational& o) const;
    LambdaRational operator-(const LambdaRational& o) const;
    LambdaRational operator*(const LambdaRational& o) const;
    LambdaRational operator/(const LambdaRational& o) const;
    LambdaRational operator-() const;
    LambdaRational inverse() const;

    bool operator==(const LambdaRational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const LambdaRational& o) const { return !(*this == o); }

    // exact evaluation; throws on a pole
    Rational at(const Rational& l0) const;
    double at(double l0) const;

    // f(s*l + t)
    LambdaRational compose_affine(const Rational& s, const Rational& t) const;

    // order of vanishing at l0 (negative for a pole)
    int order_at(const Rational& l0) const;
    // the value of (l - l0)^{-order} * f at l0 (finite, nonzero)
    Rational leading_at(const Rational& l0) const;

    std::string str(const std::string& var = "l") const;

  private:
    void reduce();
    Poly num_, den_;
};

inline LambdaRational operator*(const Rational& c, const LambdaRational& f) {
    return LambdaRational(Rational(c)) * f;
}

}  // namespace riesz_forms
