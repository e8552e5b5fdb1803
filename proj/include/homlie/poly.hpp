#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "homlie/gaussian.hpp"

namespace homlie {

// Sparse polynomials over Q(i) in the fixed variables a, b, c.
inline constexpr int kNumVars = 3;
inline constexpr char kVarNames[kNumVars] = {'a', 'b', 'c'};

using Expo = std::array<int, kNumVars>;

inline int total_degree(const Expo& e) { return e[0] + e[1] + e[2]; }

// Graded lexicographic order, a > b > c.  The spec fixes this as the
// canonical term order (denominators are normalized monic under it).
struct GrlexLess {
    bool operator()(const Expo& x, const Expo& y) const {
        int dx = total_degree(x), dy = total_degree(y);
        if (dx != dy) return dx < dy;
        return x < y;  // lexicographic on (a,b,c) exponents
    }
};

class MultivarPoly {
  public:
    MultivarPoly() = default;
    MultivarPoly(GaussianRational k) {
        if (!k.is_zero()) terms_[Expo{0, 0, 0}] = std::move(k);
    }
    MultivarPoly(long n) : MultivarPoly(GaussianRational(n)) {}

    static MultivarPoly variable(int v);

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    GaussianRational constant_value() const;  // requires is_constant()
    bool uses_variable(int v) const;
    int degree_in(int v) const;

    const std::map<Expo, GaussianRational, GrlexLess>& terms() const { return terms_; }
    const Expo& leading_monomial() const { return terms_.rbegin()->first; }
    const GaussianRational& leading_coeff() const { return terms_.rbegin()->second; }

    friend MultivarPoly operator+(const MultivarPoly&, const MultivarPoly&);
    friend MultivarPoly operator-(const MultivarPoly&, const MultivarPoly&);
    friend MultivarPoly operator-(const MultivarPoly&);
    friend MultivarPoly operator*(const MultivarPoly&, const MultivarPoly&);
    friend bool operator==(const MultivarPoly&, const MultivarPoly&) = default;

    MultivarPoly pow(int k) const;  // k >= 0

    // Quotient when the division is exact, nullopt otherwise.
    std::optional<MultivarPoly> divide_exact(const MultivarPoly& d) const;

    // Monic (leading grlex coefficient 1) greatest common divisor, via
    // content/primitive-part recursion with a primitive PRS.
    static MultivarPoly gcd(const MultivarPoly& f, const MultivarPoly& g);

    GaussianRational substitute(const std::array<std::optional<GaussianRational>, kNumVars>&) const;
    // Evaluates only the bound variables, keeping the rest symbolic.
    MultivarPoly substitute_partial(const std::array<std::optional<GaussianRational>, kNumVars>&) const;

    void add_term(const Expo& e, const GaussianRational& k);

    std::string str() const;  // reparseable, no spaces

  private:
    std::map<Expo, GaussianRational, GrlexLess> terms_;
};

// Element of Q(i)(a,b,c) in canonical form: gcd(num,den)=1, den monic.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(MultivarPoly n) : num_(std::move(n)), den_(1) {}
    RationalFunction(MultivarPoly n, MultivarPoly d);  // throws DivisionByZero if d=0

    const MultivarPoly& num() const { return num_; }
    const MultivarPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == MultivarPoly(1); }
    bool is_constant() const { return is_polynomial() && num_.is_constant(); }

    friend RationalFunction operator+(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator-(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator-(const RationalFunction&);
    friend RationalFunction operator*(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator/(const RationalFunction&, const RationalFunction&);
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    RationalFunction inverse() const;

    GaussianRational substitute(const std::array<std::optional<GaussianRational>, kNumVars>&) const;
    RationalFunction substitute_partial(const std::array<std::optional<GaussianRational>, kNumVars>&) const;

    std::string str() const;

  private:
    // Builds from an already-coprime num/den pair, only rescaling the
    // denominator monic.
    static RationalFunction reduced(MultivarPoly n, MultivarPoly d);
    void normalize();
    MultivarPoly num_;
    MultivarPoly den_;
};

}  // namespace homlie
