// Symbolic calculus on finite sums  c(l) * r^(a*l+b)(x) * x^alpha * e_I.
// The class is closed under partial derivatives, d, the codifferential,
// the algebraic actions i_x / eps_x, and the conformal actions used for
// the intertwining checks. The sign convention makes delta d = -Laplacian
// on functions.
//
// Canonicalization expands powers of r^2 = sum x_k^2 down to a common
// exponent within each (a, b mod 2) class, so an expression is zero iff
// its canonical form has no terms.
#pragma once

#include <riesz_forms/exterior.hpp>
#include <riesz_forms/gamma_expr.hpp>
#include <riesz_forms/lambda_rational.hpp>

#include <map>

namespace riesz_forms {

using Monomial = std::vector<int>;  // exponent per axis, length n

struct RadialKey {
    Affine rpow;
    Monomial alpha;
    BasisForm basis;

    bool operator<(const RadialKey& o) const {
        if (!(rpow == o.rpow)) return rpow < o.rpow;
        if (alpha != o.alpha) return alpha < o.alpha;
        return basis < o.basis;
    }
    bool operator==(const RadialKey& o) const {
        return rpow == o.rpow && alpha == o.alpha && basis == o.basis;
    }
};

class RadialExpr {
  public:
    // degrees n+1 and -1 are permitted so that d / delta chains keep
    // consistent degrees; expressions there are necessarily zero
    RadialExpr(int n, int p) : n_(n), p_(p) {
        if (n < 1) throw std::invalid_argument("ambient dimension must be positive");
        if (p < -1 || p > n + 1) throw std::invalid_argument("form degree out of range");
    }

    static RadialExpr term(int n, Affine rpow, Monomial alpha, BasisForm basis,
                           LambdaRational coeff = LambdaRational(Rational(1)));
    static RadialExpr constant_form(int n, const BasisForm& basis,
                                    LambdaRational coeff = LambdaRational(Rational(1)));

    int n() const { return n_; }
    int p() const { return p_; }
    const std::map<RadialKey, LambdaRational>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }

    void add_term(const Affine& rpow, const Monomial& alpha, const BasisForm& basis,
                  const LambdaRational& coeff);

    RadialExpr operator+(const RadialExpr& o) const;
    RadialExpr operator-(const RadialExpr& o) const;
    RadialExpr scaled(const LambdaRational& c) const;
    RadialExpr times_monomial(int axis, int power = 1) const;
    RadialExpr times_rpow(const Affine& shift) const;

    // all rpow l-coefficients vanish and exponents are plain monomials
    bool is_polynomial() const;

    std::string str(const std::string& var = "l") const;

  private:
    int n_, p_;
    std::map<RadialKey, LambdaRational> terms_;
};

// canonical form: within each (a, b mod 2) class every term is pushed down
// to the minimal r-exponent by expanding r^2 = sum x_k^2
RadialExpr normalize(const RadialExpr& e);
bool is_zero(const RadialExpr& e);
bool equal(const RadialExpr& a, const RadialExpr& b);

RadialExpr partial(int axis, const RadialExpr& e);
RadialExpr exterior_d(const RadialExpr& e);
RadialExpr codifferential(const RadialExpr& e);
RadialExpr laplacian(const RadialExpr& e);

RadialExpr interior_x(const RadialExpr& e);   // i_x
RadialExpr exterior_x(const RadialExpr& e);   // eps_x
RadialExpr ix_ex(const RadialExpr& e);        // i_x eps_x
RadialExpr ex_ix(const RadialExpr& e);        // eps_x i_x

enum class AlgebraicAction { ix_ex, ex_ix, ix, ex };
RadialExpr algebraic(AlgebraicAction which, const RadialExpr& e);

// infinitesimal conformal action on polynomial-coefficient forms
RadialExpr dpi_plus(int axis, const LambdaRational& weight, const RadialExpr& e);

// Fourier image of dpi_plus with the global factor -i dropped;
// shifted_weight is (weight + n)
RadialExpr fourier_side_d2(int axis, const LambdaRational& shifted_weight, const RadialExpr& e);

// numeric evaluation at a point and parameter value
std::map<BasisForm, double> eval_at(const RadialExpr& e, const std::vector<double>& x, double l0);

struct VerifyReport {
    bool pass = true;
    std::string detail;
};

// both second-derivative identities for r^(l+2) times a constant p-form
VerifyReport verify_lemma_2_2(int n, int p);

}  // namespace riesz_forms
