#include <riesz_forms/diff_op.hpp>
#include <riesz_forms/multiplier.hpp>

#include <sstream>

namespace riesz_forms {

std::string Multiplier::str(const std::string& var) const {
    std::ostringstream os;
    os << "r^(" << to_string(rpow, var) << ")*[(" << P.str(var) << ")*ie + (" << Q.str(var) << ")*ei]";
    return os.str();
}

Multiplier multiplier_compose(const Multiplier& m1, const Multiplier& m2) {
    if (m1.n != m2.n || m1.p != m2.p) throw std::invalid_argument("multiplier shape mismatch");
    return Multiplier{m1.n, m1.p, m1.rpow + m2.rpow + Rational(2), m1.P * m2.P, m1.Q * m2.Q};
}

RadialExpr apply_multiplier(const Multiplier& m, const RadialExpr& e) {
    if (m.n != e.n() || m.p != e.p()) throw std::invalid_argument("multiplier shape mismatch");
    RadialExpr out = ix_ex(e).scaled(m.P) + ex_ix(e).scaled(m.Q);
    return out.times_rpow(m.rpow);
}

void DiffOpLP::add_term(int power, const GammaExpr& dd_coeff, const GammaExpr& ddelta_coeff) {
    if (power < 0) throw std::invalid_argument("negative operator power");
    GammaExpr a = dd_coeff, b = ddelta_coeff;
    if (power >= 1) {
        // (d delta)^k kills 0-forms and (delta d)^k kills top forms
        if (p_ == 0) b = GammaExpr::zero();
        if (p_ == n_) a = GammaExpr::zero();
    }
    if (power == 0) {
        auto merged = a.try_add(b);
        if (!merged) throw std::invalid_argument("identity coefficients with incompatible Gamma parts");
        a = *merged;
        b = GammaExpr::zero();
    }
    auto it = terms_.find(power);
    if (it == terms_.end()) {
        if (!a.is_zero() || !b.is_zero()) terms_.emplace(power, std::make_pair(a, b));
        return;
    }
    auto sa = it->second.first.try_add(a);
    auto sb = it->second.second.try_add(b);
    if (!sa || !sb) throw std::invalid_argument("operator coefficients with incompatible Gamma parts");
    it->second = {*sa, *sb};
    if (it->second.first.is_zero() && it->second.second.is_zero()) terms_.erase(it);
}

DiffOpLP DiffOpLP::operator+(const DiffOpLP& o) const {
    if (n_ != o.n_ || p_ != o.p_) throw std::invalid_argument("operator shape mismatch");
    DiffOpLP r = *this;
    for (const auto& [k, ab] : o.terms_) r.add_term(k, ab.first, ab.second);
    return r;
}

DiffOpLP DiffOpLP::scaled(const GammaExpr& c) const {
    DiffOpLP r(n_, p_);
    if (c.is_zero()) return r;
    for (const auto& [k, ab] : terms_) r.add_term(k, ab.first * c, ab.second * c);
    return r;
}

bool DiffOpLP::operator==(const DiffOpLP& o) const {
    if (n_ != o.n_ || p_ != o.p_) return false;
    auto canon = [](const DiffOpLP& d) {
        std::map<int, std::pair<GammaExpr, GammaExpr>> out;
        for (const auto& [k, ab] : d.terms_) {
            GammaExpr a = ab.first.normalized(), b = ab.second.normalized();
            if (!a.is_zero() || !b.is_zero()) out.emplace(k, std::make_pair(a, b));
        }
        return out;
    };
    auto a = canon(*this), b = canon(o);
    if (a.size() != b.size()) return false;
    for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (!(ia->second.first == ib->second.first)) return false;
        if (!(ia->second.second == ib->second.second)) return false;
    }
    return true;
}

DiffOpLP DiffOpLP::compose(const DiffOpLP& a, const DiffOpLP& b) {
    if (a.n_ != b.n_ || a.p_ != b.p_) throw std::invalid_argument("operator shape mismatch");
    DiffOpLP r(a.n_, a.p_);
    for (const auto& [i, ab] : a.terms_) {
        for (const auto& [j, cd] : b.terms_) {
            if (i == 0) {
                r.add_term(j, ab.first * cd.first, ab.first * cd.second);
            } else if (j == 0) {
                r.add_term(i, ab.first * cd.first, ab.second * cd.first);
            } else {
                r.add_term(i + j, ab.first * cd.first, GammaExpr::zero());
                r.add_term(i + j, GammaExpr::zero(), ab.second * cd.second);
            }
        }
    }
    return r;
}

RadialExpr DiffOpLP::apply(const RadialExpr& omega) const {
    if (omega.n() != n_ || omega.p() != p_) throw std::invalid_argument("operator/form shape mismatch");
    int kmax = terms_.empty() ? 0 : terms_.rbegin()->first;
    RadialExpr out(n_, p_);
    RadialExpr dd = omega, ddelta = omega;  // (delta d)^k and (d delta)^k chains
    for (int k = 0; k <= kmax; ++k) {
        auto it = terms_.find(k);
        if (it != terms_.end()) {
            auto to_lr = [](const GammaExpr& g) {
                auto q = g.as_rational();
                if (!q) throw std::invalid_argument("cannot apply operator with Gamma coefficients");
                return *q;
            };
            if (!it->second.first.is_zero()) out = out + dd.scaled(to_lr(it->second.first));
            if (!it->second.second.is_zero()) out = out + ddelta.scaled(to_lr(it->second.second));
        }
        if (k < kmax) {
            dd = codifferential(exterior_d(dd));
            ddelta = exterior_d(codifferential(ddelta));
        }
    }
    return out;
}

ScaledMultiplier DiffOpLP::symbol() const {
    if (terms_.empty())
        return ScaledMultiplier{GammaExpr::zero(), Multiplier{n_, p_, Affine(), {}, {}}};
    if (terms_.size() != 1)
        throw std::invalid_argument("symbol of a mixed-order operator is not a single multiplier");
    const auto& [k, ab] = *terms_.begin();
    auto a = ab.first.as_rational();
    auto b = ab.second.as_rational();
    if (!a || !b) throw std::invalid_argument("symbol requires Gamma-free coefficients");
    if (k == 0)
        return ScaledMultiplier{GammaExpr::one(),
                                Multiplier{n_, p_, Affine(Rational(0), Rational(-2)), *a, *a}};
    return ScaledMultiplier{GammaExpr::one(),
                            Multiplier{n_, p_, Affine(Rational(0), Rational(2 * k - 2)), *a, *b}};
}

std::string DiffOpLP::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, ab] : terms_) {
        if (k == 0) {
            os << "(" << ab.first.str(var) << ")*Id";
            first = false;
            continue;
        }
        if (!ab.first.is_zero()) {
            if (!first) os << " + ";
            os << "(" << ab.first.str(var) << ")*(delta d)^" << k;
            first = false;
        }
        if (!ab.second.is_zero()) {
            if (!first) os << " + ";
            os << "(" << ab.second.str(var) << ")*(d delta)^" << k;
            first = false;
        }
    }
    return os.str();
}

}  // namespace riesz_forms
