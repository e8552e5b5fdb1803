#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "homlie/errors.hpp"

namespace homlie {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Element of Q(i).  Componentwise canonical because cpp_rational is.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(long n) : re(n) {}
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend GaussianRational operator-(const GaussianRational& x) { return {-x.re, -x.im}; }
    friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    GaussianRational inverse() const {
        Rational n = re * re + im * im;
        if (n == 0) throw DivisionByZero();
        return {re / n, -im / n};
    }
    friend GaussianRational operator/(const GaussianRational& x, const GaussianRational& y) {
        return x * y.inverse();
    }
    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

    std::string str() const;
};

}  // namespace homlie
