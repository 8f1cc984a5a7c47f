#include <riesz_forms/conformal.hpp>

#include <sstream>

namespace riesz_forms {

DiffOpLP branson_gover(int n, int p, int N) {
    if (N < 0) throw std::invalid_argument("operator order must be non-negative");
    Rational alpha = rat(n, 2) - p + N;
    Rational beta = rat(n, 2) - p - N;
    DiffOpLP op(n, p);
    if (N == 0) {
        op.add_term(0, GammaExpr::from_rational(LambdaRational(alpha)), GammaExpr::zero());
    } else {
        op.add_term(N, GammaExpr::from_rational(LambdaRational(alpha)),
                    GammaExpr::from_rational(LambdaRational(beta)));
    }
    return op;
}

RadialExpr apply_diffop(const DiffOpLP& op, const RadialExpr& omega) { return op.apply(omega); }

std::vector<Monomial> monomials_up_to(int n, int degree) {
    std::vector<Monomial> out;
    Monomial cur(static_cast<size_t>(n), 0);
    // iterative enumeration in graded lexicographic blocks
    auto rec = [&](auto&& self, int axis, int remaining) -> void {
        if (axis == n) {
            out.push_back(cur);
            return;
        }
        for (int d = 0; d <= remaining; ++d) {
            cur[static_cast<size_t>(axis)] = d;
            self(self, axis + 1, remaining - d);
        }
        cur[static_cast<size_t>(axis)] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

CaseReport verify_recurrence(int n, int p, int N) {
    if (N < 1) throw std::invalid_argument("recurrence needs N >= 1");
    Rational a_prev = rat(n, 2) - p + (N - 1);
    Rational b_prev = rat(n, 2) - p - (N - 1);
    if (is_zero(a_prev) || is_zero(b_prev))
        return {CaseStatus::inapplicable, "zero denominator coefficient at order " + std::to_string(N - 1)};

    Rational a_N = rat(n, 2) - p + N;
    Rational b_N = rat(n, 2) - p - N;
    DiffOpLP lhs = branson_gover(n, p, N);
    DiffOpLP prev = branson_gover(n, p, N - 1);
    DiffOpLP step(n, p);
    step.add_term(1, GammaExpr::from_rational(LambdaRational(a_N / a_prev)),
                  GammaExpr::from_rational(LambdaRational(b_N / b_prev)));
    DiffOpLP rhs = DiffOpLP::compose(step, prev);
    if (lhs != rhs)
        return {CaseStatus::fail, "operator identity fails: " + lhs.str() + " vs " + rhs.str()};

    for (const Monomial& alpha : monomials_up_to(n, 2 * N)) {
        for (const BasisForm& b : basis_forms(n, p)) {
            RadialExpr omega = RadialExpr::term(n, Affine(), alpha, b);
            RadialExpr left = lhs.apply(omega);
            RadialExpr right = step.apply(prev.apply(omega));
            if (!equal(left, right))
                return {CaseStatus::fail, "application mismatch on " + omega.str()};
        }
    }
    return {CaseStatus::pass, "operator identity and all monomial applications exact"};
}

CaseReport verify_intertwining_bg(int n, int p, int N, int j) {
    DiffOpLP L = branson_gover(n, p, N);
    LambdaRational w_out{rat(-n, 2) - N};
    LambdaRational w_in{rat(-n, 2) + N};
    for (const Monomial& alpha : monomials_up_to(n, 2 * N + 1)) {
        for (const BasisForm& b : basis_forms(n, p)) {
            RadialExpr omega = RadialExpr::term(n, Affine(), alpha, b);
            RadialExpr lhs = dpi_plus(j, w_out, L.apply(omega));
            RadialExpr rhs = L.apply(dpi_plus(j, w_in, omega));
            if (!equal(lhs, rhs))
                return {CaseStatus::fail,
                        "difference " + normalize(lhs - rhs).str() + " on " + omega.str()};
        }
    }
    return {CaseStatus::pass, "exact on all monomial forms of degree <= " + std::to_string(2 * N + 1)};
}

CaseReport verify_intertwining_knapp_stein(int n, int p, int j) {
    // multiplier of the transformed kernel, with the spectral variable formal:
    // r^(-2v+n-2) ((n-p-v) i eps + (v-p) eps i)
    Multiplier M{n, p, Affine(Rational(-2), Rational(n - 2)),
                 LambdaRational::affine(Affine(Rational(-1), Rational(n - p))),
                 LambdaRational::affine(Affine(Rational(1), Rational(-p)))};
    LambdaRational shifted_out = LambdaRational::variable();                       // (v-n) + n
    LambdaRational shifted_in = LambdaRational::affine(Affine(Rational(-1), Rational(n)));  // -v + n
    for (const Monomial& alpha : monomials_up_to(n, 2)) {
        for (const BasisForm& b : basis_forms(n, p)) {
            RadialExpr omega = RadialExpr::term(n, Affine(), alpha, b);
            RadialExpr lhs = fourier_side_d2(j, shifted_out, apply_multiplier(M, omega));
            RadialExpr rhs = apply_multiplier(M, fourier_side_d2(j, shifted_in, omega));
            if (!equal(lhs, rhs))
                return {CaseStatus::fail,
                        "difference " + normalize(lhs - rhs).str("v") + " on " + omega.str("v")};
        }
    }
    return {CaseStatus::pass, "zero polynomial in the spectral parameter"};
}

ComplementaryInterval complementary_interval(int n, int p) {
    ComplementaryInterval out;
    Rational half = rat(n, 2) - p;
    if (half <= 0) {
        out.empty = true;
        out.scan_pass = true;
        out.detail = "empty interval (n/2 - p <= 0)";
        return out;
    }
    out.empty = false;
    out.lo = -half;
    out.hi = half;

    // prefactor 2^(2l) pi^(n/2) G(l) / G(n/2 + 1 - l)
    GammaExpr pref = GammaExpr::power_of_two(Affine(Rational(2), Rational(0))) *
                     GammaExpr::power_of_pi(rat(n, 2)) *
                     GammaExpr::gamma(Affine(Rational(1), Rational(0))) *
                     GammaExpr::gamma(Affine(Rational(-1), rat(n, 2) + 1), -1);
    double endpoint = to_double(half);
    bool ok = true;
    std::ostringstream detail;
    for (int i = 1;; ++i) {
        Rational l0(i, 64);
        if (l0 >= half + 1) break;
        double l0d = to_double(l0);
        double g = pref.evaluate(l0d);
        double hplus = g * (endpoint - l0d);   // coefficient on i eps
        double hminus = g * (endpoint + l0d);  // coefficient on eps i
        if (l0 == half) continue;              // exact zero of the i eps coefficient
        bool expect_plus_positive = l0 < half;
        if ((hplus > 0) != expect_plus_positive || hminus <= 0) {
            ok = false;
            detail << "unexpected sign at l = " << l0.get_str() << "; ";
        }
    }
    out.scan_pass = ok;
    out.detail = ok ? "sign changes only at the endpoints (step 1/64)" : detail.str();
    return out;
}

SpectralEigen z_eigenvalue(int n, int p, int j, int q) {
    if (j < 1) throw std::invalid_argument("j must be a positive integer");
    if (q != 0 && q != 1) throw std::invalid_argument("q must be 0 or 1");
    GammaExpr v = GammaExpr::gamma(Affine(Rational(1), rat(n, 2) + j)) *
                  GammaExpr::gamma(Affine(Rational(-1), rat(n, 2) + j), -1) *
                  GammaExpr::gamma(Affine(Rational(1), rat(n, 2) - p + q)) *
                  GammaExpr::gamma(Affine(Rational(-1), rat(n, 2) - p + q), -1);
    return {j, q, v};
}

GammaExpr z_eigenvalue_at(int n, int p, int j, int q, const Rational& l0) {
    return z_eigenvalue(n, p, j, q).value.substitute(l0);
}

CaseReport beurling_ahlfors_check(int n) {
    if (n % 2 != 0) throw std::invalid_argument("middle-degree operator needs even dimension");
    int p = n / 2;
    Multiplier refl{n, p, Affine(Rational(0), Rational(-2)), LambdaRational(Rational(1)),
                    LambdaRational(Rational(-1))};
    if (multiplier_compose(refl, refl) != Multiplier::identity(n, p))
        return {CaseStatus::fail, "double composition is not the identity multiplier"};

    // on 1-forms: (i_x eps_x - eps_x i_x) e_l = r^2 e_l - 2 x_l sum_k x_k e_k
    for (const BasisForm& el : basis_forms(n, 1)) {
        RadialExpr base = RadialExpr::constant_form(n, el);
        RadialExpr lhs = ix_ex(base) - ex_ix(base);
        RadialExpr rhs = base.times_rpow(Affine(Rational(0), Rational(2)));
        int l = el.indices()[0];
        for (int k = 1; k <= n; ++k) {
            SignedBasis ek = wedge_axis(k, BasisForm(n, std::vector<int>{}));
            RadialExpr term = RadialExpr::constant_form(n, ek.form, LambdaRational(Rational(-2)))
                                  .times_monomial(l)
                                  .times_monomial(k);
            rhs = rhs + term;
        }
        if (!equal(lhs, rhs))
            return {CaseStatus::fail, "reflection identity fails on " + el.str()};
    }
    return {CaseStatus::pass, "involution and reflection identities exact"};
}

}  // namespace riesz_forms
