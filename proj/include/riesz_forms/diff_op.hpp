// Weighted sums  sum_k a_k (delta d)^k + b_k (d delta)^k  with exact
// Gamma-expression coefficients. (delta d)(d delta) = 0 keeps the class
// closed under composition; order-0 terms are multiples of the identity
// and are merged.
#pragma once

#include <riesz_forms/gamma_expr.hpp>
#include <riesz_forms/multiplier.hpp>
#include <riesz_forms/radial.hpp>

#include <map>

namespace riesz_forms {

class DiffOpLP {
  public:
    DiffOpLP(int n, int p) : n_(n), p_(p) {}

    int n() const { return n_; }
    int p() const { return p_; }
    // power -> (coefficient of (delta d)^k, coefficient of (d delta)^k);
    // for power 0 the identity coefficient is stored in .first
    const std::map<int, std::pair<GammaExpr, GammaExpr>>& terms() const { return terms_; }

    void add_term(int power, const GammaExpr& dd_coeff, const GammaExpr& ddelta_coeff);

    DiffOpLP operator+(const DiffOpLP& o) const;
    DiffOpLP scaled(const GammaExpr& c) const;
    bool operator==(const DiffOpLP& o) const;
    bool operator!=(const DiffOpLP& o) const { return !(*this == o); }
    bool is_zero() const { return terms_.empty(); }

    static DiffOpLP compose(const DiffOpLP& a, const DiffOpLP& b);

    // exact application; requires Gamma-free coefficients
    RadialExpr apply(const RadialExpr& omega) const;

    // Fourier symbol: (delta d)^k -> r^(2k-2) i eps, (d delta)^k -> r^(2k-2) eps i;
    // defined for operators with a single power
    ScaledMultiplier symbol() const;

    std::string str(const std::string& var = "l") const;

  private:
    int n_, p_;
    std::map<int, std::pair<GammaExpr, GammaExpr>> terms_;
};

}  // namespace riesz_forms
