// Exact rational scalars and affine forms a*l + b used throughout the
// symbolic layer. Rational is GMP-backed, so no overflow bookkeeping is
// needed anywhere else.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace riesz_forms {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// floor(q) as an exact integer-valued rational
inline Rational rat_floor(const Rational& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(f);
}

inline long to_long(const Rational& q) {
    if (!is_integer(q)) throw std::invalid_argument("rational is not an integer: " + q.get_str());
    if (!q.get_num().fits_slong_p()) throw std::overflow_error("rational too large for long");
    return q.get_num().get_si();
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("cannot parse rational: " + s);
    q.canonicalize();
    return q;
}

// Affine form a*l + b in the formal parameter l, with exact coefficients.
// Used for r-power exponents, 2-power exponents and Gamma arguments.
struct Affine {
    Rational a{0};
    Rational b{0};

    Affine() = default;
    Affine(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}
    static Affine constant(Rational c) { return Affine(Rational(0), std::move(c)); }

    bool is_constant() const { return is_zero(a); }

    Rational at(const Rational& l0) const { return a * l0 + b; }
    double at(double l0) const { return to_double(a) * l0 + to_double(b); }

    // value under l -> s*l + t
    Affine compose(const Rational& s, const Rational& t) const { return Affine(a * s, a * t + b); }

    Affine operator+(const Affine& o) const { return Affine(a + o.a, b + o.b); }
    Affine operator-(const Affine& o) const { return Affine(a - o.a, b - o.b); }
    Affine operator+(const Rational& c) const { return Affine(a, b + c); }
    Affine operator-(const Rational& c) const { return Affine(a, b - c); }
    Affine operator-() const { return Affine(-a, -b); }

    bool operator==(const Affine& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Affine& o) const { return !(*this == o); }
    bool operator<(const Affine& o) const {
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
};

// Renders e.g. (l+4)/2, -l/2, 3, l. Integerizes the common denominator.
std::string to_string(const Affine& f, const std::string& var = "l");

}  // namespace riesz_forms
