#include <riesz_forms/semigroup.hpp>

#include <sstream>

namespace riesz_forms {

Poly2::Poly2(Rational c) {
    if (!riesz_forms::is_zero(c)) coeff_.emplace(std::make_pair(0, 0), std::move(c));
}

Poly2 Poly2::variable_l() {
    Poly2 p;
    p.coeff_.emplace(std::make_pair(1, 0), Rational(1));
    return p;
}

Poly2 Poly2::variable_v() {
    Poly2 p;
    p.coeff_.emplace(std::make_pair(0, 1), Rational(1));
    return p;
}

Poly2 Poly2::from_poly(const Poly& p, const Rational& cl, const Rational& cv, const Rational& c0) {
    Poly2 arg = Poly2(cl) * variable_l() + Poly2(cv) * variable_v() + Poly2(c0);
    Poly2 out;
    for (int k = p.degree(); k >= 0; --k) out = out * arg + Poly2(p.coefficient(k));
    return out;
}

void Poly2::add(int i, int j, const Rational& c) {
    auto key = std::make_pair(i, j);
    auto it = coeff_.find(key);
    if (it == coeff_.end()) {
        if (!riesz_forms::is_zero(c)) coeff_.emplace(key, c);
    } else {
        it->second += c;
        if (riesz_forms::is_zero(it->second)) coeff_.erase(it);
    }
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 r = *this;
    for (const auto& [k, c] : o.coeff_) r.add(k.first, k.second, c);
    return r;
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + (-o); }

Poly2 Poly2::operator-() const {
    Poly2 r = *this;
    for (auto& [k, c] : r.coeff_) c = -c;
    return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 r;
    for (const auto& [ka, ca] : coeff_)
        for (const auto& [kb, cb] : o.coeff_) r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

Rational Poly2::at(const Rational& l0, const Rational& v0) const {
    Rational acc(0);
    for (const auto& [k, c] : coeff_) {
        Rational t = c;
        for (int i = 0; i < k.first; ++i) t *= l0;
        for (int j = 0; j < k.second; ++j) t *= v0;
        acc += t;
    }
    return acc;
}

Poly Poly2::to_poly_in_l(const Rational& v0) const {
    std::vector<Rational> out;
    for (const auto& [k, c] : coeff_) {
        Rational t = c;
        for (int j = 0; j < k.second; ++j) t *= v0;
        if (static_cast<size_t>(k.first) >= out.size()) out.resize(static_cast<size_t>(k.first) + 1, Rational(0));
        out[static_cast<size_t>(k.first)] += t;
    }
    return Poly(std::move(out));
}

std::string Poly2::str() const {
    if (coeff_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeff_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        if (k.first > 0) os << "*l" << (k.first > 1 ? "^" + std::to_string(k.first) : "");
        if (k.second > 0) os << "*v" << (k.second > 1 ? "^" + std::to_string(k.second) : "");
    }
    return os.str();
}

SemigroupResult semigroup_compose(const RieszParams& params1, const RieszParams& params2) {
    if (params1.n != params2.n || params1.p != params2.p)
        throw std::invalid_argument("semigroup composition with mismatched shape");
    auto [C1, D1] = cd_coefficients(params1);
    auto [C2, D2] = cd_coefficients(params2);
    if (!C1.is_polynomial() || !D1.is_polynomial() || !C2.is_polynomial() || !D2.is_polynomial())
        throw std::invalid_argument("semigroup composition requires polynomial parameters");

    const int n = params1.n, p = params1.p;
    // C_{l-n}, D_{l-n}, C'_{v-n}, D'_{v-n}
    Poly2 Cl = Poly2::from_poly(C1.num(), Rational(1), Rational(0), Rational(-n));
    Poly2 Dl = Poly2::from_poly(D1.num(), Rational(1), Rational(0), Rational(-n));
    Poly2 Cv = Poly2::from_poly(C2.num(), Rational(0), Rational(1), Rational(-n));
    Poly2 Dv = Poly2::from_poly(D2.num(), Rational(0), Rational(1), Rational(-n));

    SemigroupResult out;
    out.C = Frac2{Cl * Cv, Poly2(Rational(1))};
    out.D = Frac2{Dl * Dv, Poly2(Rational(1))};

    Poly2 s = Poly2::variable_l() + Poly2::variable_v();  // l + v
    Poly2 denom = s * (s - Poly2(Rational(n)));
    out.A = Frac2{(s - Poly2(Rational(p))) * out.C.num + Poly2(Rational(p)) * out.D.num, denom};
    out.B = Frac2{Poly2(Rational(n - p)) * out.C.num + (s - Poly2(Rational(n - p))) * out.D.num, denom};

    // plug back into the coefficient map at argument l+v-n
    Frac2 arg{s - Poly2(Rational(n)), Poly2(Rational(1))};
    Frac2 Cback = (arg + Frac2{Poly2(Rational(p)), Poly2(Rational(1))}) * out.A -
                  Frac2{Poly2(Rational(p)), Poly2(Rational(1))} * out.B;
    Frac2 Dback = Frac2{Poly2(Rational(-(n - p))), Poly2(Rational(1))} * out.A +
                  (arg + Frac2{Poly2(Rational(n - p)), Poly2(Rational(1))}) * out.B;
    out.verified = Cback.equals(out.C) && Dback.equals(out.D);
    return out;
}

}  // namespace riesz_forms
