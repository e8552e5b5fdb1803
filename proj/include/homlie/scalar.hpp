#pragma once

#include <optional>
#include <string>
#include <variant>

#include "homlie/poly.hpp"

namespace homlie {

// Bindings for substitution: slot 0/1/2 = a/b/c.
using Bindings = std::array<std::optional<GaussianRational>, kNumVars>;

// Exact field element: Q, Q(i), or Q(i)(a,b,c).  Arithmetic promotes to the
// widest level involved and demotes results that happen to be simpler, so
// equality is plain canonical-form identity across levels.
class Scalar {
  public:
    Scalar() : v_(Rational(0)) {}
    Scalar(long n) : v_(Rational(n)) {}
    Scalar(Rational r) : v_(std::move(r)) {}
    Scalar(GaussianRational g) : v_(std::move(g)) { demote(); }
    Scalar(RationalFunction f) : v_(std::move(f)) { demote(); }

    static Scalar i() { return Scalar(GaussianRational::i()); }
    static Scalar variable(int v) { return Scalar(RationalFunction(MultivarPoly::variable(v))); }
    static Scalar var(char name);  // 'a', 'b' or 'c'

    bool is_zero() const;
    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    bool is_numeric() const { return !std::holds_alternative<RationalFunction>(v_); }

    // Value as Q(i), requires is_numeric().
    GaussianRational numeric() const;
    const RationalFunction& function() const { return std::get<RationalFunction>(v_); }

    friend Scalar operator+(const Scalar&, const Scalar&);
    friend Scalar operator-(const Scalar&, const Scalar&);
    friend Scalar operator-(const Scalar&);
    friend Scalar operator*(const Scalar&, const Scalar&);
    friend Scalar operator/(const Scalar&, const Scalar&);  // throws DivisionByZero
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    friend bool operator==(const Scalar&, const Scalar&);

    Scalar inverse() const;  // throws DivisionByZero
    Scalar pow(int k) const;  // negative k allowed for nonzero values

    Scalar substitute(const Bindings&) const;  // throws DenominatorVanishes

    std::string str() const;

  private:
    void demote();
    std::variant<Rational, GaussianRational, RationalFunction> v_;
};

// Parses the CLI scalar grammar: integers, p/q, i, a/b/c, + - * / ^ ( ).
Scalar parse_scalar(const std::string& text);

}  // namespace homlie
