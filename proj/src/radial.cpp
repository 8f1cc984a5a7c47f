#include <riesz_forms/radial.hpp>

#include <cmath>
#include <sstream>

namespace riesz_forms {

RadialExpr RadialExpr::term(int n, Affine rpow, Monomial alpha, BasisForm basis, LambdaRational coeff) {
    RadialExpr e(n, basis.degree());
    e.add_term(rpow, alpha, basis, coeff);
    return e;
}

RadialExpr RadialExpr::constant_form(int n, const BasisForm& basis, LambdaRational coeff) {
    return term(n, Affine(), Monomial(static_cast<size_t>(n), 0), basis, std::move(coeff));
}

void RadialExpr::add_term(const Affine& rpow, const Monomial& alpha, const BasisForm& basis,
                          const LambdaRational& coeff) {
    if (coeff.is_zero()) return;
    if (basis.n() != n_ || basis.degree() != p_) throw std::invalid_argument("term of wrong shape");
    if (alpha.size() != static_cast<size_t>(n_)) throw std::invalid_argument("monomial of wrong arity");
    for (int d : alpha)
        if (d < 0) throw std::invalid_argument("negative monomial exponent");
    RadialKey key{rpow, alpha, basis};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), coeff);
    } else {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RadialExpr RadialExpr::operator+(const RadialExpr& o) const {
    if (n_ != o.n_ || p_ != o.p_) throw std::invalid_argument("radial expression shape mismatch");
    RadialExpr r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.rpow, k.alpha, k.basis, c);
    return r;
}

RadialExpr RadialExpr::operator-(const RadialExpr& o) const { return *this + o.scaled(Rational(-1)); }

RadialExpr RadialExpr::scaled(const LambdaRational& c) const {
    RadialExpr r(n_, p_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

RadialExpr RadialExpr::times_monomial(int axis, int power) const {
    detail::check_axis(axis, n_);
    RadialExpr r(n_, p_);
    for (const auto& [k, v] : terms_) {
        RadialKey key = k;
        key.alpha[static_cast<size_t>(axis - 1)] += power;
        r.terms_.emplace(std::move(key), v);
    }
    return r;
}

RadialExpr RadialExpr::times_rpow(const Affine& shift) const {
    RadialExpr r(n_, p_);
    for (const auto& [k, v] : terms_) {
        RadialKey key = k;
        key.rpow = key.rpow + shift;
        r.terms_.emplace(std::move(key), v);
    }
    return r;
}

bool RadialExpr::is_polynomial() const {
    for (const auto& [k, v] : terms_)
        if (!(k.rpow == Affine())) return false;
    return true;
}

std::string RadialExpr::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str(var) << ")";
        if (!(k.rpow == Affine())) os << "*r^(" << to_string(k.rpow, var) << ")";
        for (size_t i = 0; i < k.alpha.size(); ++i) {
            if (k.alpha[i] > 0) {
                os << "*x" << (i + 1);
                if (k.alpha[i] > 1) os << "^" << k.alpha[i];
            }
        }
        if (k.basis.degree() > 0) os << "*" << k.basis.str();
    }
    return os.str();
}

namespace {

// multiplies a monomial map by (sum_k x_k^2)^m
void expand_r2_power(int n, const Monomial& alpha, int m, std::map<Monomial, Rational>& out) {
    std::map<Monomial, Rational> cur;
    cur.emplace(alpha, Rational(1));
    for (int step = 0; step < m; ++step) {
        std::map<Monomial, Rational> next;
        for (const auto& [a, c] : cur) {
            for (int k = 0; k < n; ++k) {
                Monomial b = a;
                b[static_cast<size_t>(k)] += 2;
                next[b] += c;
            }
        }
        cur = std::move(next);
    }
    for (const auto& [a, c] : cur) out[a] += c;
}

}  // namespace

RadialExpr normalize(const RadialExpr& e) {
    // class key: (a, b mod 2); value: minimal b in the class
    std::map<std::pair<Rational, Rational>, Rational> minimal;
    auto class_of = [](const Affine& rpow) {
        Rational frac = rpow.b - 2 * rat_floor(rpow.b / 2);
        return std::make_pair(rpow.a, frac);
    };
    for (const auto& [k, c] : e.terms()) {
        auto key = class_of(k.rpow);
        auto it = minimal.find(key);
        if (it == minimal.end())
            minimal.emplace(key, k.rpow.b);
        else if (k.rpow.b < it->second)
            it->second = k.rpow.b;
    }
    RadialExpr out(e.n(), e.p());
    for (const auto& [k, c] : e.terms()) {
        Rational bmin = minimal.at(class_of(k.rpow));
        Rational diff = (k.rpow.b - bmin) / 2;
        int m = static_cast<int>(to_long(diff));
        if (m == 0) {
            out.add_term(Affine(k.rpow.a, bmin), k.alpha, k.basis, c);
        } else {
            std::map<Monomial, Rational> expanded;
            expand_r2_power(e.n(), k.alpha, m, expanded);
            for (const auto& [a, mult] : expanded)
                out.add_term(Affine(k.rpow.a, bmin), a, k.basis, c * LambdaRational(mult));
        }
    }
    return out;
}

bool is_zero(const RadialExpr& e) { return normalize(e).terms().empty(); }

bool equal(const RadialExpr& a, const RadialExpr& b) { return is_zero(a - b); }

RadialExpr partial(int axis, const RadialExpr& e) {
    detail::check_axis(axis, e.n());
    RadialExpr r(e.n(), e.p());
    size_t ax = static_cast<size_t>(axis - 1);
    for (const auto& [k, c] : e.terms()) {
        // d/dx_k r^s = s x_k r^(s-2)
        if (!(k.rpow == Affine())) {
            Monomial a = k.alpha;
            a[ax] += 1;
            r.add_term(k.rpow - Rational(2), a, k.basis, c * LambdaRational::affine(k.rpow));
        }
        if (k.alpha[ax] > 0) {
            Monomial a = k.alpha;
            a[ax] -= 1;
            r.add_term(k.rpow, a, k.basis, c * LambdaRational(Rational(k.alpha[ax])));
        }
    }
    return r;
}

RadialExpr exterior_d(const RadialExpr& e) {
    RadialExpr r(e.n(), e.p() + 1);
    for (int k = 1; k <= e.n(); ++k) {
        RadialExpr dk = partial(k, e);
        for (const auto& [key, c] : dk.terms()) {
            SignedBasis w = wedge_axis(k, key.basis);
            if (w.sign != 0) r.add_term(key.rpow, key.alpha, w.form, c * LambdaRational(Rational(w.sign)));
        }
    }
    return r;
}

RadialExpr codifferential(const RadialExpr& e) {
    RadialExpr r(e.n(), e.p() - 1);
    for (int k = 1; k <= e.n(); ++k) {
        RadialExpr dk = partial(k, e);
        for (const auto& [key, c] : dk.terms()) {
            SignedBasis w = contract_axis(k, key.basis);
            if (w.sign != 0) r.add_term(key.rpow, key.alpha, w.form, c * LambdaRational(Rational(-w.sign)));
        }
    }
    return r;
}

RadialExpr laplacian(const RadialExpr& e) {
    RadialExpr r(e.n(), e.p());
    for (int k = 1; k <= e.n(); ++k) r = r + partial(k, partial(k, e));
    return r;
}

RadialExpr interior_x(const RadialExpr& e) {
    RadialExpr r(e.n(), e.p() - 1);
    for (int k = 1; k <= e.n(); ++k) {
        for (const auto& [key, c] : e.terms()) {
            SignedBasis w = contract_axis(k, key.basis);
            if (w.sign != 0) {
                Monomial a = key.alpha;
                a[static_cast<size_t>(k - 1)] += 1;
                r.add_term(key.rpow, a, w.form, c * LambdaRational(Rational(w.sign)));
            }
        }
    }
    return r;
}

RadialExpr exterior_x(const RadialExpr& e) {
    RadialExpr r(e.n(), e.p() + 1);
    for (int k = 1; k <= e.n(); ++k) {
        for (const auto& [key, c] : e.terms()) {
            SignedBasis w = wedge_axis(k, key.basis);
            if (w.sign != 0) {
                Monomial a = key.alpha;
                a[static_cast<size_t>(k - 1)] += 1;
                r.add_term(key.rpow, a, w.form, c * LambdaRational(Rational(w.sign)));
            }
        }
    }
    return r;
}

RadialExpr ix_ex(const RadialExpr& e) { return interior_x(exterior_x(e)); }
RadialExpr ex_ix(const RadialExpr& e) { return exterior_x(interior_x(e)); }

RadialExpr algebraic(AlgebraicAction which, const RadialExpr& e) {
    switch (which) {
        case AlgebraicAction::ix_ex: return ix_ex(e);
        case AlgebraicAction::ex_ix: return ex_ix(e);
        case AlgebraicAction::ix: return interior_x(e);
        case AlgebraicAction::ex: return exterior_x(e);
    }
    throw std::logic_error("unreachable");
}

namespace {

// eps_{e_j} i_{e_k} - eps_{e_k} i_{e_j} applied to the basis part
RadialExpr form_rotation(int j, int k, const RadialExpr& e) {
    RadialExpr r(e.n(), e.p());
    for (const auto& [key, c] : e.terms()) {
        SignedBasis a = contract_axis(k, key.basis);
        if (a.sign != 0) {
            SignedBasis b = wedge_axis(j, a.form);
            if (b.sign != 0)
                r.add_term(key.rpow, key.alpha, b.form, c * LambdaRational(Rational(a.sign * b.sign)));
        }
        SignedBasis a2 = contract_axis(j, key.basis);
        if (a2.sign != 0) {
            SignedBasis b2 = wedge_axis(k, a2.form);
            if (b2.sign != 0)
                r.add_term(key.rpow, key.alpha, b2.form, c * LambdaRational(Rational(-a2.sign * b2.sign)));
        }
    }
    return r;
}

}  // namespace

RadialExpr dpi_plus(int axis, const LambdaRational& weight, const RadialExpr& e) {
    detail::check_axis(axis, e.n());
    if (!e.is_polynomial())
        throw std::invalid_argument("dpi_plus requires polynomial coefficients");
    RadialExpr dj = partial(axis, e);
    RadialExpr out(e.n(), e.p());
    // -1/2 sum_k x_k^2 d_j
    for (int k = 1; k <= e.n(); ++k)
        out = out + dj.times_monomial(k, 2).scaled(rat(-1, 2));
    // x_j (-weight + Euler)
    RadialExpr euler(e.n(), e.p());
    for (int k = 1; k <= e.n(); ++k) euler = euler + partial(k, e).times_monomial(k);
    out = out + (e.scaled(-weight) + euler).times_monomial(axis);
    // sum_k x_k (eps_j i_k - eps_k i_j)
    for (int k = 1; k <= e.n(); ++k)
        out = out + form_rotation(axis, k, e).times_monomial(k);
    return out;
}

RadialExpr fourier_side_d2(int axis, const LambdaRational& shifted_weight, const RadialExpr& e) {
    detail::check_axis(axis, e.n());
    RadialExpr out = laplacian(e).times_monomial(axis).scaled(rat(1, 2));
    RadialExpr dj = partial(axis, e);
    out = out - dj.scaled(shifted_weight);
    for (int k = 1; k <= e.n(); ++k) out = out - partial(k, dj).times_monomial(k);
    for (int k = 1; k <= e.n(); ++k) out = out + form_rotation(axis, k, partial(k, e));
    return out;
}

std::map<BasisForm, double> eval_at(const RadialExpr& e, const std::vector<double>& x, double l0) {
    if (x.size() != static_cast<size_t>(e.n())) throw std::invalid_argument("point of wrong arity");
    double r2 = 0;
    for (double v : x) r2 += v * v;
    std::map<BasisForm, double> out;
    for (const auto& [k, c] : e.terms()) {
        double v = c.at(l0);
        double s = k.rpow.at(l0);
        if (s != 0.0) v *= std::pow(r2, s / 2.0);
        for (size_t i = 0; i < k.alpha.size(); ++i)
            for (int j = 0; j < k.alpha[i]; ++j) v *= x[i];
        out[k.basis] += v;
    }
    return out;
}

VerifyReport verify_lemma_2_2(int n, int p) {
    VerifyReport rep;
    LambdaRational l = LambdaRational::variable();
    for (const BasisForm& beta : basis_forms(n, p)) {
        RadialExpr base = RadialExpr::constant_form(n, beta).times_rpow(Affine(Rational(1), Rational(2)));
        RadialExpr beta_l = RadialExpr::constant_form(n, beta).times_rpow(Affine(Rational(1), Rational(0)));
        RadialExpr beta_lm2 = RadialExpr::constant_form(n, beta).times_rpow(Affine(Rational(1), Rational(-2)));

        RadialExpr lhs1 = codifferential(exterior_d(base));
        RadialExpr rhs1 = beta_l.scaled(-(l + 2) * LambdaRational(Rational(n - p))) +
                          ix_ex(beta_lm2).scaled(-(l + 2) * l);
        if (!equal(lhs1, rhs1)) {
            rep.pass = false;
            rep.detail += "delta d identity fails for " + beta.str() + ": difference " +
                          normalize(lhs1 - rhs1).str() + "\n";
        }

        RadialExpr lhs2 = exterior_d(codifferential(base));
        RadialExpr rhs2 = beta_l.scaled(-(l + 2) * LambdaRational(Rational(p))) +
                          ex_ix(beta_lm2).scaled(-(l + 2) * l);
        if (!equal(lhs2, rhs2)) {
            rep.pass = false;
            rep.detail += "d delta identity fails for " + beta.str() + ": difference " +
                          normalize(lhs2 - rhs2).str() + "\n";
        }
    }
    if (rep.pass) rep.detail = "exact for all basis forms";
    return rep;
}

}  // namespace riesz_forms
