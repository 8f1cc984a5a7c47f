#include <riesz_forms/gamma_expr.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace riesz_forms {

namespace {

LambdaRational lr_pow(const LambdaRational& f, int e) {
    LambdaRational r{Rational(1)};
    LambdaRational base = e >= 0 ? f : f.inverse();
    for (int i = 0; i < std::abs(e); ++i) r = r * base;
    return r;
}

}  // namespace

GammaExpr GammaExpr::zero() {
    GammaExpr e;
    e.prefactor_ = LambdaRational(Rational(0));
    return e;
}

GammaExpr GammaExpr::from_rational(LambdaRational q) {
    GammaExpr e;
    e.prefactor_ = std::move(q);
    return e;
}

GammaExpr GammaExpr::gamma(Affine arg, int exponent) {
    GammaExpr e;
    if (exponent != 0) e.gammas_.emplace_back(std::move(arg), exponent);
    return e;
}

GammaExpr GammaExpr::power_of_two(Affine exponent) {
    GammaExpr e;
    e.two_exp_ = std::move(exponent);
    return e;
}

GammaExpr GammaExpr::power_of_pi(Rational exponent) {
    GammaExpr e;
    e.pi_exp_ = std::move(exponent);
    return e;
}

GammaExpr GammaExpr::operator*(const GammaExpr& o) const {
    GammaExpr e;
    e.prefactor_ = prefactor_ * o.prefactor_;
    e.two_exp_ = two_exp_ + o.two_exp_;
    e.pi_exp_ = pi_exp_ + o.pi_exp_;
    e.gammas_ = gammas_;
    e.gammas_.insert(e.gammas_.end(), o.gammas_.begin(), o.gammas_.end());
    return e;
}

GammaExpr GammaExpr::operator*(const LambdaRational& q) const {
    GammaExpr e = *this;
    e.prefactor_ = e.prefactor_ * q;
    return e;
}

GammaExpr GammaExpr::operator-() const {
    GammaExpr e = *this;
    e.prefactor_ = -e.prefactor_;
    return e;
}

GammaExpr GammaExpr::inverse() const {
    GammaExpr e;
    e.prefactor_ = prefactor_.inverse();
    e.two_exp_ = -two_exp_;
    e.pi_exp_ = -pi_exp_;
    e.gammas_.reserve(gammas_.size());
    for (const auto& [arg, exp] : gammas_) e.gammas_.emplace_back(arg, -exp);
    return e;
}

GammaExpr GammaExpr::normalized() const {
    GammaExpr e;
    e.prefactor_ = prefactor_;
    if (e.prefactor_.is_zero()) return zero();
    e.two_exp_ = two_exp_;
    e.pi_exp_ = pi_exp_;

    std::map<Affine, int> canonical;
    for (const auto& [arg, exp] : gammas_) {
        if (exp == 0) continue;
        Affine g = arg;
        if (g.is_constant()) {
            // shift the constant argument into (0, 1]
            if (is_integer(g.b) && g.b <= 0)
                throw pole_error("Gamma evaluated at non-positive integer " + g.b.get_str());
            while (g.b > 1) {
                g.b -= 1;
                e.prefactor_ = e.prefactor_ * lr_pow(LambdaRational(g.b), exp);
            }
            while (g.b <= 0) {
                e.prefactor_ = e.prefactor_ * lr_pow(LambdaRational(g.b), -exp);
                g.b += 1;
            }
            if (g.b == 1) continue;  // Gamma(1) = 1
            if (g.b == rat(1, 2)) {
                e.pi_exp_ += rat(exp, 2);  // Gamma(1/2) = sqrt(pi)
                continue;
            }
        } else {
            // shift the constant part into [0, 1)
            Rational b0 = g.b - rat_floor(g.b);
            while (g.b > b0) {
                g.b -= 1;
                e.prefactor_ = e.prefactor_ * lr_pow(LambdaRational::affine(g), exp);
            }
            while (g.b < b0) {
                e.prefactor_ = e.prefactor_ * lr_pow(LambdaRational::affine(g), -exp);
                g.b += 1;
            }
        }
        canonical[g] += exp;
    }
    for (const auto& [arg, exp] : canonical)
        if (exp != 0) e.gammas_.emplace_back(arg, exp);
    if (e.prefactor_.is_zero()) return zero();
    return e;
}

bool GammaExpr::is_rational() const {
    GammaExpr e = normalized();
    return e.gammas_.empty() && e.two_exp_ == Affine() && riesz_forms::is_zero(e.pi_exp_);
}

std::optional<LambdaRational> GammaExpr::as_rational() const {
    GammaExpr e = normalized();
    if (e.is_zero()) return LambdaRational(Rational(0));
    if (!e.gammas_.empty() || !(e.two_exp_ == Affine()) || !riesz_forms::is_zero(e.pi_exp_))
        return std::nullopt;
    return e.prefactor_;
}

bool GammaExpr::operator==(const GammaExpr& o) const {
    GammaExpr a = normalized();
    GammaExpr b = o.normalized();
    return a.prefactor_ == b.prefactor_ && a.two_exp_ == b.two_exp_ && a.pi_exp_ == b.pi_exp_ &&
           a.gammas_ == b.gammas_;
}

std::optional<GammaExpr> GammaExpr::try_add(const GammaExpr& o) const {
    GammaExpr a = normalized();
    GammaExpr b = o.normalized();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.gammas_ != b.gammas_ || a.pi_exp_ != b.pi_exp_) return std::nullopt;
    if (a.two_exp_.a != b.two_exp_.a) return std::nullopt;
    Rational shift = b.two_exp_.b - a.two_exp_.b;
    if (!is_integer(shift)) return std::nullopt;
    // fold 2^shift into b's prefactor
    Rational two_pow(1);
    long s = to_long(shift);
    for (long i = 0; i < std::abs(s); ++i) two_pow *= 2;
    if (s < 0) two_pow = 1 / two_pow;
    GammaExpr r = a;
    r.prefactor_ = a.prefactor_ + b.prefactor_ * LambdaRational(two_pow);
    return r.normalized();
}

int GammaExpr::order_at(const Rational& l0) const {
    GammaExpr e = normalized();
    if (e.is_zero()) throw std::logic_error("order of the zero expression");
    int order = e.prefactor_.order_at(l0);
    for (const auto& [arg, exp] : e.gammas_) {
        if (arg.is_constant()) continue;
        Rational z0 = arg.at(l0);
        if (is_integer(z0) && z0 <= 0) order -= exp;  // Gamma pole of order |exp|
    }
    return -order;  // positive = pole
}

GammaExpr GammaExpr::residue_at(const Rational& l0) const {
    GammaExpr e = normalized();
    if (e.is_zero()) return zero();

    // make every Gamma pole or zero at l0 explicit in the rational prefactor
    GammaExpr reg;
    reg.prefactor_ = e.prefactor_;
    reg.two_exp_ = e.two_exp_;
    reg.pi_exp_ = e.pi_exp_;
    for (auto [arg, exp] : e.gammas_) {
        Rational z0 = arg.at(l0);
        if (!arg.is_constant() && is_integer(z0) && z0 <= 0) {
            long m = to_long(-z0);
            // Gamma(g) = Gamma(g + m + 1) / prod_{i=0..m} (g + i)
            LambdaRational prod{Rational(1)};
            for (long i = 0; i <= m; ++i) prod = prod * LambdaRational::affine(arg + Rational(i));
            reg.prefactor_ = reg.prefactor_ * lr_pow(prod, -exp);
            arg.b += Rational(m + 1);
        }
        reg.gammas_.emplace_back(arg, exp);
    }

    int pole = -reg.prefactor_.order_at(l0);
    if (pole <= 0) return zero();
    if (pole >= 2)
        throw unsupported_pole_error("pole of order " + std::to_string(pole) + " at " + l0.get_str());
    reg.prefactor_ = reg.prefactor_ * LambdaRational(Poly(std::vector<Rational>{-l0, Rational(1)}));
    return reg.substitute(l0);
}

GammaExpr GammaExpr::substitute(const Rational& l0) const {
    GammaExpr e = normalized();
    if (e.is_zero()) return zero();
    GammaExpr r;
    r.prefactor_ = LambdaRational(e.prefactor_.at(l0));
    r.two_exp_ = Affine::constant(e.two_exp_.at(l0));
    r.pi_exp_ = e.pi_exp_;
    for (const auto& [arg, exp] : e.gammas_) r.gammas_.emplace_back(Affine::constant(arg.at(l0)), exp);
    return r.normalized();
}

GammaExpr GammaExpr::compose_affine(const Rational& s, const Rational& t) const {
    GammaExpr r;
    r.prefactor_ = prefactor_.compose_affine(s, t);
    r.two_exp_ = two_exp_.compose(s, t);
    r.pi_exp_ = pi_exp_;
    r.gammas_.reserve(gammas_.size());
    for (const auto& [arg, exp] : gammas_) r.gammas_.emplace_back(arg.compose(s, t), exp);
    return r;
}

double GammaExpr::evaluate(double l0) const {
    if (prefactor_.is_zero()) return 0.0;
    double v = prefactor_.at(l0);
    v *= std::pow(2.0, two_exp_.at(l0));
    v *= std::pow(M_PI, to_double(pi_exp_));
    for (const auto& [arg, exp] : gammas_) {
        double z = arg.at(l0);
        if (z <= 0.0 && std::abs(z - std::round(z)) < 1e-9)
            throw pole_error("Gamma argument at non-positive integer");
        v *= std::pow(std::tgamma(z), exp);
    }
    return v;
}

std::string GammaExpr::str(const std::string& var) const {
    GammaExpr e = normalized();
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool emitted = false;
    auto sep = [&]() {
        if (emitted) os << "*";
        emitted = true;
    };
    LambdaRational q = e.prefactor_;
    if (!(q == LambdaRational(Rational(1)))) {
        sep();
        os << q.str(var);
    }
    if (!(e.two_exp_ == Affine())) {
        sep();
        os << "2^(" << to_string(e.two_exp_, var) << ")";
    }
    if (!riesz_forms::is_zero(e.pi_exp_)) {
        sep();
        os << "pi^(" << e.pi_exp_.get_str() << ")";
    }
    for (const auto& [arg, exp] : e.gammas_) {
        if (exp > 0) {
            sep();
            os << "G(" << to_string(arg, var) << ")";
            if (exp > 1) os << "^" << exp;
        }
    }
    for (const auto& [arg, exp] : e.gammas_) {
        if (exp < 0) {
            os << "/G(" << to_string(arg, var) << ")";
            if (exp < -1) os << "^" << -exp;
            emitted = true;
        }
    }
    if (!emitted) return "1";
    return os.str();
}

}  // namespace riesz_forms
