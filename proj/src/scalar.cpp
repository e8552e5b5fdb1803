#include "homlie/scalar.hpp"

#include <sstream>

namespace homlie {

namespace {

RationalFunction as_function(const Scalar& s) {
    if (s.is_numeric()) return RationalFunction(MultivarPoly(s.numeric()));
    return s.function();
}

}  // namespace

Scalar Scalar::var(char name) {
    for (int v = 0; v < kNumVars; ++v)
        if (kVarNames[v] == name) return variable(v);
    throw Error(std::string("unknown variable ") + name);
}

void Scalar::demote() {
    if (auto* f = std::get_if<RationalFunction>(&v_)) {
        if (f->is_constant()) v_ = f->num().constant_value();
    }
    if (auto* g = std::get_if<GaussianRational>(&v_)) {
        if (g->is_real()) v_ = g->re;
    }
}

bool Scalar::is_zero() const {
    if (auto* r = std::get_if<Rational>(&v_)) return *r == 0;
    if (auto* g = std::get_if<GaussianRational>(&v_)) return g->is_zero();
    return std::get<RationalFunction>(v_).is_zero();
}

GaussianRational Scalar::numeric() const {
    if (auto* r = std::get_if<Rational>(&v_)) return GaussianRational(*r);
    return std::get<GaussianRational>(v_);
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    if (x.is_rational() && y.is_rational())
        return Scalar(std::get<Rational>(x.v_) + std::get<Rational>(y.v_));
    if (x.is_numeric() && y.is_numeric()) return Scalar(x.numeric() + y.numeric());
    return Scalar(as_function(x) + as_function(y));
}

Scalar operator-(const Scalar& x, const Scalar& y) {
    if (x.is_rational() && y.is_rational())
        return Scalar(std::get<Rational>(x.v_) - std::get<Rational>(y.v_));
    if (x.is_numeric() && y.is_numeric()) return Scalar(x.numeric() - y.numeric());
    return Scalar(as_function(x) - as_function(y));
}

Scalar operator-(const Scalar& x) { return Scalar(0) - x; }

Scalar operator*(const Scalar& x, const Scalar& y) {
    if (x.is_rational() && y.is_rational())
        return Scalar(std::get<Rational>(x.v_) * std::get<Rational>(y.v_));
    if (x.is_numeric() && y.is_numeric()) return Scalar(x.numeric() * y.numeric());
    return Scalar(as_function(x) * as_function(y));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (auto* r = std::get_if<Rational>(&v_)) return Scalar(Rational(1) / *r);
    if (auto* g = std::get_if<GaussianRational>(&v_)) return Scalar(g->inverse());
    return Scalar(std::get<RationalFunction>(v_).inverse());
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

bool operator==(const Scalar& x, const Scalar& y) { return (x - y).is_zero(); }

Scalar Scalar::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar r(1);
    for (int n = 0; n < k; ++n) r = r * *this;
    return r;
}

Scalar Scalar::substitute(const Bindings& b) const {
    if (is_numeric()) return *this;
    // Partial semantics: unbound variables stay symbolic; the result demotes
    // to Q(i) (or Q) exactly when every variable of the value is bound.
    return Scalar(std::get<RationalFunction>(v_).substitute_partial(b));
}

std::string Scalar::str() const {
    if (auto* r = std::get_if<Rational>(&v_)) {
        std::ostringstream os;
        os << *r;
        return os.str();
    }
    if (auto* g = std::get_if<GaussianRational>(&v_)) return g->str();
    return std::get<RationalFunction>(v_).str();
}

}  // namespace homlie
