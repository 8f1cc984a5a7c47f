// Exact exterior algebra on the standard basis of p-forms: strictly
// increasing index lists (stored as bitmasks), with all signs derived from
// sorting permutations.
#pragma once

#include <riesz_forms/rational.hpp>

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace riesz_forms {

class BasisForm {
  public:
    BasisForm() = default;
    BasisForm(int n, uint32_t mask) : n_(n), mask_(mask) {
        if (n < 0 || n > 30) throw std::invalid_argument("ambient dimension out of range");
        if (mask >> n) throw std::invalid_argument("basis index exceeds ambient dimension");
    }
    // indices are 1-based and must be strictly increasing
    BasisForm(int n, const std::vector<int>& indices) : n_(n) {
        if (n < 0 || n > 30) throw std::invalid_argument("ambient dimension out of range");
        int prev = 0;
        for (int i : indices) {
            if (i <= prev || i > n) throw std::invalid_argument("indices must be strictly increasing in 1..n");
            mask_ |= 1u << (i - 1);
            prev = i;
        }
    }

    int n() const { return n_; }
    int degree() const { return std::popcount(mask_); }
    uint32_t mask() const { return mask_; }
    bool contains(int axis) const { return (mask_ >> (axis - 1)) & 1u; }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (int i = 1; i <= n_; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    bool operator==(const BasisForm& o) const { return n_ == o.n_ && mask_ == o.mask_; }
    bool operator!=(const BasisForm& o) const { return !(*this == o); }
    // lexicographic on the increasing index lists
    bool operator<(const BasisForm& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        uint32_t a = mask_, b = o.mask_;
        while (a && b) {
            int ia = std::countr_zero(a), ib = std::countr_zero(b);
            if (ia != ib) return ia < ib;
            a &= a - 1;
            b &= b - 1;
        }
        return a == 0 && b != 0;
    }

    std::string str() const {
        std::string s = "e_{";
        for (int i : indices()) s += std::to_string(i);
        return s + "}";
    }

  private:
    int n_ = 0;
    uint32_t mask_ = 0;
};

struct SignedBasis {
    int sign = 0;  // +1, -1 or 0
    BasisForm form; // meaningful only when sign != 0

    bool is_zero() const { return sign == 0; }
};

namespace detail {
inline void check_axis(int k, int n) {
    if (k < 1 || k > n) throw std::invalid_argument("axis out of range 1..n");
}
}  // namespace detail

// e_k ^ e_I with the sign of sorting k into I; 0 when k already occurs
inline SignedBasis wedge_axis(int k, const BasisForm& I) {
    detail::check_axis(k, I.n());
    uint32_t bit = 1u << (k - 1);
    if (I.mask() & bit) return {};
    int below = std::popcount(I.mask() & (bit - 1));
    return {(below % 2 == 0) ? 1 : -1, BasisForm(I.n(), I.mask() | bit)};
}

// interior product i_{e_k} e_I as an antiderivation; 0 when k is absent
inline SignedBasis contract_axis(int k, const BasisForm& I) {
    detail::check_axis(k, I.n());
    uint32_t bit = 1u << (k - 1);
    if (!(I.mask() & bit)) return {};
    int below = std::popcount(I.mask() & (bit - 1));
    return {(below % 2 == 0) ? 1 : -1, BasisForm(I.n(), I.mask() & ~bit)};
}

// all basis p-forms in canonical order
std::vector<BasisForm> basis_forms(int n, int p);

inline long binomial(int n, int p) {
    if (p < 0 || p > n) return 0;
    long r = 1;
    for (int i = 0; i < p; ++i) r = r * (n - i) / (i + 1);
    return r;
}

namespace scalar {
inline bool is_zero(const Rational& s) { return sgn(s) == 0; }
template <typename S>
bool is_zero(const S& s) {
    return s.is_zero();
}
inline bool is_zero(double s) { return s == 0.0; }
}  // namespace scalar

// Constant-coefficient p-form over an exact or numeric scalar ring.
template <typename S>
class FormVector {
  public:
    FormVector(int n, int p) : n_(n), p_(p) {
        if (p < 0 || p > n) throw std::invalid_argument("form degree out of range");
    }

    int n() const { return n_; }
    int p() const { return p_; }
    const std::map<BasisForm, S>& coefficients() const { return coeff_; }
    bool is_zero() const { return coeff_.empty(); }

    void add(const BasisForm& b, const S& c) {
        if (b.n() != n_ || b.degree() != p_) throw std::invalid_argument("basis form of wrong type");
        auto it = coeff_.find(b);
        if (it == coeff_.end()) {
            if (!scalar::is_zero(c)) coeff_.emplace(b, c);
        } else {
            it->second = it->second + c;
            if (scalar::is_zero(it->second)) coeff_.erase(it);
        }
    }

    S coefficient(const BasisForm& b) const {
        auto it = coeff_.find(b);
        return it == coeff_.end() ? S(0) : it->second;
    }

    FormVector operator+(const FormVector& o) const {
        require_same_shape(o);
        FormVector r = *this;
        for (const auto& [b, c] : o.coeff_) r.add(b, c);
        return r;
    }

    FormVector operator*(const S& s) const {
        FormVector r(n_, p_);
        if (scalar::is_zero(s)) return r;
        for (const auto& [b, c] : coeff_) r.add(b, c * s);
        return r;
    }

    bool operator==(const FormVector& o) const { return n_ == o.n_ && p_ == o.p_ && coeff_ == o.coeff_; }

  private:
    void require_same_shape(const FormVector& o) const {
        if (n_ != o.n_ || p_ != o.p_) throw std::invalid_argument("form shape mismatch");
    }
    int n_, p_;
    std::map<BasisForm, S> coeff_;
};

// orthonormal-basis pairing, bilinear
template <typename S>
S inner_product(const FormVector<S>& a, const FormVector<S>& b) {
    if (a.n() != b.n() || a.p() != b.p()) throw std::invalid_argument("inner product shape mismatch");
    S acc(0);
    for (const auto& [bf, c] : a.coefficients()) {
        auto it = b.coefficients().find(bf);
        if (it != b.coefficients().end()) acc = acc + c * it->second;
    }
    return acc;
}

}  // namespace riesz_forms
