#include <riesz_forms/polynomial.hpp>

#include <sstream>
#include <stdexcept>

namespace riesz_forms {

void Poly::trim() {
    while (!coeff_.empty() && is_zero(coeff_.back())) coeff_.pop_back();
}

const Rational& Poly::leading() const {
    if (coeff_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeff_.back();
}

Rational Poly::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeff_.size())) return Rational(0);
    return coeff_[static_cast<size_t>(k)];
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> r(std::max(coeff_.size(), o.coeff_.size()), Rational(0));
    for (size_t i = 0; i < coeff_.size(); ++i) r[i] += coeff_[i];
    for (size_t i = 0; i < o.coeff_.size(); ++i) r[i] += o.coeff_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<Rational> r(coeff_);
    for (auto& c : r) c = -c;
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> r(coeff_.size() + o.coeff_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeff_.size(); ++i)
        for (size_t j = 0; j < o.coeff_.size(); ++j) r[i + j] += coeff_[i] * o.coeff_[j];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rational& c) const {
    std::vector<Rational> r(coeff_);
    for (auto& x : r) x *= c;
    return Poly(std::move(r));
}

Rational Poly::at(const Rational& x) const {
    Rational r(0);
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) r = r * x + *it;
    return r;
}

double Poly::at(double x) const {
    double r = 0.0;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) r = r * x + to_double(*it);
    return r;
}

Poly Poly::compose_affine(const Rational& s, const Rational& t) const {
    Poly arg(std::vector<Rational>{t, s});
    Poly r;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) r = r * arg + Poly(*it);
    return r;
}

std::pair<Poly, Poly> Poly::div_mod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    Poly rem = num;
    std::vector<Rational> q;
    int dq = num.degree() - den.degree();
    if (dq < 0) return {Poly(), rem};
    q.assign(static_cast<size_t>(dq) + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        int k = rem.degree() - den.degree();
        Rational c = rem.leading() / den.leading();
        q[static_cast<size_t>(k)] = c;
        std::vector<Rational> sub(static_cast<size_t>(k), Rational(0));
        sub.push_back(c);
        rem = rem - den * Poly(std::move(sub));
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = div_mod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

int Poly::root_multiplicity(const Rational& x0) const {
    if (is_zero()) throw std::logic_error("root multiplicity in zero polynomial");
    int m = 0;
    Poly p = *this;
    while (!p.is_zero() && is_zero(p.at(x0))) {
        p = p.deflate(x0, 1);
        ++m;
    }
    return m;
}

Poly Poly::deflate(const Rational& x0, int m) const {
    Poly p = *this;
    Poly lin(std::vector<Rational>{-x0, Rational(1)});
    for (int i = 0; i < m; ++i) {
        auto [q, r] = div_mod(p, lin);
        if (!r.is_zero()) throw std::logic_error("deflate: not divisible by (x - x0)");
        p = std::move(q);
    }
    return p;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading());
}

namespace {

std::string rat_factor_str(const Rational& c, bool lead) {
    std::string s;
    if (c < 0)
        s += lead ? "-" : " - ";
    else if (!lead)
        s += " + ";
    Rational a = abs(c);
    s += a.get_str();
    return s;
}

}  // namespace

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool lead = true;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coefficient(k);
        if (is_zero(c)) continue;
        if (k == 0) {
            os << rat_factor_str(c, lead);
        } else {
            Rational a = abs(c);
            if (c < 0)
                os << (lead ? "-" : " - ");
            else if (!lead)
                os << " + ";
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        lead = false;
    }
    return os.str();
}

std::string to_string(const Affine& f, const std::string& var) {
    // render as (p*l + q)/d with integer p, q
    mpz_class da = f.a.get_den(), db = f.b.get_den();
    mpz_class d;
    mpz_lcm(d.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
    Rational dr{d};
    Rational p = f.a * dr, q = f.b * dr;
    std::ostringstream os;
    bool paren = !is_zero(p) && !is_zero(q) && d != 1;
    if (paren) os << "(";
    if (is_zero(p)) {
        os << q.get_str();
    } else {
        if (p == -1)
            os << "-";
        else if (p != 1)
            os << p.get_str() << "*";
        os << var;
        if (q > 0) os << "+" << q.get_str();
        if (q < 0) os << "-" << abs(q).get_str();
    }
    if (paren) os << ")";
    if (d != 1) os << "/" << d.get_str();
    return os.str();
}

}  // namespace riesz_forms
