#pragma once
/**
 * @file rational.hpp
 * @brief Exact scalars: big rationals and Gaussian rationals.
 */

#include <boost/multiprecision/cpp_int.hpp>
#include <ostream>
#include <string>

#include "lagcell/errors.hpp"

namespace lagcell {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational rational_pow(const Rational& t, int e) {
    if (t == 0 && e < 0) throw domain_error("zero to a negative power");
    Rational base = e < 0 ? Rational(1) / t : t;
    Rational out = 1;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) out *= base;
    return out;
}

struct GaussianRational {
    Rational re = 0;
    Rational im = 0;

    GaussianRational() = default;
    GaussianRational(int r) : re(r) {}
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= inverse(o); }

    friend GaussianRational inverse(const GaussianRational& z) {
        if (z.is_zero()) throw domain_error("division by zero");
        const Rational d = z.norm();
        return {z.re / d, -z.im / d};
    }

    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
        os << z.re;
        if (z.im != 0) os << (z.im > 0 ? "+" : "-") << abs(z.im) << "i";
        return os;
    }
};

inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }

}  // namespace lagcell
