#include <riesz_forms/lambda_rational.hpp>

#include <stdexcept>

namespace riesz_forms {

LambdaRational::LambdaRational(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    reduce();
}

void LambdaRational::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::div_mod(num_, g).first;
        den_ = Poly::div_mod(den_, g).first;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

std::optional<Rational> LambdaRational::as_constant() const {
    if (!is_constant()) return std::nullopt;
    if (num_.is_zero()) return Rational(0);
    return num_.coefficient(0) / den_.coefficient(0);
}

LambdaRational LambdaRational::operator+(const LambdaRational& o) const {
    return LambdaRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

LambdaRational LambdaRational::operator-(const LambdaRational& o) const {
    return LambdaRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

LambdaRational LambdaRational::operator*(const LambdaRational& o) const {
    return LambdaRational(num_ * o.num_, den_ * o.den_);
}

LambdaRational LambdaRational::operator/(const LambdaRational& o) const { return *this * o.inverse(); }

LambdaRational LambdaRational::operator-() const {
    LambdaRational r = *this;
    r.num_ = -r.num_;
    return r;
}

LambdaRational LambdaRational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return LambdaRational(den_, num_);
}

Rational LambdaRational::at(const Rational& l0) const {
    Rational d = den_.at(l0);
    if (riesz_forms::is_zero(d)) throw std::domain_error("rational function pole at " + l0.get_str());
    return num_.at(l0) / d;
}

double LambdaRational::at(double l0) const {
    double d = den_.at(l0);
    if (d == 0.0) throw std::domain_error("rational function pole");
    return num_.at(l0) / d;
}

LambdaRational LambdaRational::compose_affine(const Rational& s, const Rational& t) const {
    return LambdaRational(num_.compose_affine(s, t), den_.compose_affine(s, t));
}

int LambdaRational::order_at(const Rational& l0) const {
    if (is_zero()) throw std::logic_error("order of zero rational function");
    return num_.root_multiplicity(l0) - den_.root_multiplicity(l0);
}

Rational LambdaRational::leading_at(const Rational& l0) const {
    if (is_zero()) return Rational(0);
    int mn = num_.root_multiplicity(l0);
    int md = den_.root_multiplicity(l0);
    return num_.deflate(l0, mn).at(l0) / den_.deflate(l0, md).at(l0);
}

std::string LambdaRational::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    std::string n = num_.str(var);
    std::string d = den_.str(var);
    bool pn = num_.degree() > 0;
    std::string out = pn ? "(" + n + ")" : n;
    out += "/(" + d + ")";
    return out;
}

}  // namespace riesz_forms
