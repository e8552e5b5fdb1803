#include "homlie/sl2.hpp"

namespace homlie {

namespace {

constexpr std::size_t H = 0, XP = 1, XM = 2;

std::vector<std::string> sl2_names() { return {"H", "X+", "X-"}; }

Scalar geometric_sum(const Scalar& x, int n) {
    // sum_{i=0}^{n-1} x^i
    Scalar s(0), p(1);
    for (int i = 0; i < n; ++i) {
        s += p;
        p = p * x;
    }
    return s;
}

}  // namespace

HomLieAlgebra make_sl2() {
    std::vector<Scalar> c(27);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, long v) {
        c[(i * 3 + j) * 3 + k] = Scalar(v);
        c[(j * 3 + i) * 3 + k] = Scalar(-v);
    };
    set(H, XP, XP, 2);   // [H, X+] = 2 X+
    set(H, XM, XM, -2);  // [H, X-] = -2 X-
    set(XP, XM, H, 1);   // [X+, X-] = H
    return make_hom_lie(3, sl2_names(), std::move(c), LinearMap::identity(3));
}

Tensor2 standard_r() {
    Tensor2 r(3);
    r.at(XP, XM) = Scalar(1);
    r.at(H, H) = Scalar(Rational(1, 4));
    return r;
}

HomLieCoalgebra sl2_cobracket() {
    std::vector<Scalar> d(27);
    Scalar half(Rational(1, 2));
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
        d[(i * 3 + j) * 3 + k] = v;
        d[(i * 3 + k) * 3 + j] = -v;
    };
    set(XP, XP, H, half);  // Delta(X+) = 1/2 (X+ ox H - H ox X+)
    set(XM, XM, H, half);
    return make_hom_lie_coalgebra(3, sl2_names(), std::move(d), LinearMap::identity(3));
}

HomLieBialgebra sl2_bialgebra() { return make_bialgebra(make_sl2(), sl2_cobracket()); }

Tensor2 sl2_abs(std::size_t y, std::size_t z) {
    Tensor2 t(3);
    t.at(y, z) = Scalar(1);
    t.at(z, y) = Scalar(-1);
    return t;
}

Sl2Endo endo(int family, const Scalar& a, const Scalar& b, const Scalar& c) {
    LinearMap m(3, 3);
    auto col = [&](std::size_t j, Scalar h, Scalar xp, Scalar xm) {
        m.at(H, j) = std::move(h);
        m.at(XP, j) = std::move(xp);
        m.at(XM, j) = std::move(xm);
    };
    Scalar binv, two(2), four(4);
    switch (family) {
        case 1:
        case 2:
            if (b.is_zero()) throw ConstraintViolation("family 1/2 requires b != 0");
            if (!(a * c).is_zero()) throw ConstraintViolation("family 1/2 requires ac = 0");
            binv = b.inverse();
            if (family == 1) {
                col(H, Scalar(1), -two * a * b, -two * c * binv);
                col(XP, c, b, -c * c * binv);
                col(XM, a, -a * a * b, binv);
            } else {
                col(H, Scalar(-1), two * c * binv, two * a * b);
                col(XP, c, -c * c * binv, b);
                col(XM, a, binv, -a * a * b);
            }
            break;
        case 3: {
            if (a.is_zero() || b.is_zero())
                throw ConstraintViolation("family 3 requires ab != 0");
            Scalar cm1 = c - Scalar(1), cp1 = c + Scalar(1);
            if (cm1.is_zero() || cp1.is_zero())
                throw ConstraintViolation("family 3 requires c != +-1");
            binv = b.inverse();
            Scalar ainv = a.inverse();
            Scalar c2m1 = cm1 * cp1;
            col(H, c, b, -c2m1 * binv);
            col(XP, a, a * b / cm1, -a * cm1 * binv);
            col(XM, -c2m1 * ainv / four, -b * cm1 * ainv / four,
                cp1 * cp1 * cm1 * binv * ainv / four);
            break;
        }
        default:
            throw ConstraintViolation("unknown family");
    }
    AxiomReport rep = is_lie_morphism(make_sl2(), m);
    if (!rep.all_pass())
        throw ConstraintViolation("endomorphism is not a Lie algebra morphism: " +
                                  rep.summary());
    return {family, a, b, c, std::move(m)};
}

RecursionState recursion_coeffs(int family, const Scalar& a, const Scalar& b,
                                const Scalar& c, int n) {
    RecursionState st{family, n, {}, {}, {}, {}, {}, {}, {}, {}};
    switch (family) {
        case 1: {
            if (b.is_zero()) throw ConstraintViolation("family 1 requires b != 0");
            if (!(a * c).is_zero()) throw ConstraintViolation("family 1 requires ac = 0");
            if (n < 1) throw ConstraintViolation("family 1 sequences start at n = 1");
            // d_1 = e_1 = 0; d_{m+1} = b^2 d_m + sum_{i<m} b^i (and e with 1/b).
            Scalar binv = b.inverse();
            Scalar d(0), e(0);
            for (int m = 1; m < n; ++m) {
                d = b * b * d + geometric_sum(b, m);
                e = binv * binv * e + geometric_sum(binv, m);
            }
            st.d = d;
            st.e = e;
            break;
        }
        case 2: {
            if (b.is_zero()) throw ConstraintViolation("family 2 requires b != 0");
            if (!(a * c).is_zero()) throw ConstraintViolation("family 2 requires ac = 0");
            // Corrected uniform recursion (reduces to the printed one at a=0).
            Scalar binv = b.inverse(), half(Rational(1, 2));
            Scalar j(0), k(0), l(0);
            for (int m = 0; m < n; ++m) {
                Scalar j2 = Scalar(-1) - j + Scalar(2) * c * k - Scalar(2) * a * l;
                Scalar k2 = binv * (c * half + c * j - c * c * k - l);
                Scalar l2 = -b * (a * half + a * j + k + a * a * l);
                j = j2;
                k = k2;
                l = l2;
            }
            st.j = j;
            st.k = k;
            st.l = l;
            break;
        }
        case 3: {
            if (a.is_zero() || b.is_zero())
                throw ConstraintViolation("family 3 requires ab != 0");
            Scalar cm1 = c - Scalar(1), cp1 = c + Scalar(1);
            if (cm1.is_zero() || cp1.is_zero())
                throw ConstraintViolation("family 3 requires c != +-1");
            Scalar ainv = a.inverse(), binv = b.inverse();
            Scalar half(Rational(1, 2)), quarter(Rational(1, 4));
            Scalar c2m1 = cm1 * cp1;
            Scalar p(0), q(0), s(0);
            for (int m = 0; m < n; ++m) {
                Scalar p2 = cm1 * half + c * p + Scalar(2) * a * q + c2m1 * half * ainv * s;
                Scalar q2 = b * quarter *
                            (Scalar(1) + Scalar(2) * p + Scalar(4) * a * q / cm1 + cm1 * ainv * s);
                Scalar s2 = c2m1 * quarter * binv *
                            (Scalar(1) + Scalar(2) * p + Scalar(4) * a * q / cp1 + cp1 * ainv * s);
                p = p2;
                q = q2;
                s = s2;
            }
            st.p = p;
            st.q = q;
            st.s = s;
            break;
        }
        default:
            throw ConstraintViolation("unknown family");
    }
    return st;
}

Tensor2 closed_form_twisted_r(int family, const Scalar& a, const Scalar& b,
                              const Scalar& c, int n) {
    if (n < 0) throw ConstraintViolation("n must be non-negative");
    Tensor2 r = standard_r();
    switch (family) {
        case 1: {
            if (b.is_zero()) throw ConstraintViolation("family 1 requires b != 0");
            if (!(a * c).is_zero()) throw ConstraintViolation("family 1 requires ac = 0");
            Scalar binv = b.inverse(), half(Rational(1, 2));
            Scalar k = -(a * b * half) * geometric_sum(b, n);
            Scalar l = c * half * binv * geometric_sum(binv, n);
            return r + scale(k, sl2_abs(H, XP)) + scale(l, sl2_abs(H, XM));
        }
        case 2: {
            RecursionState st = recursion_coeffs(2, a, b, c, n);
            return r + scale(st.j, sl2_abs(XP, XM)) + scale(st.k, sl2_abs(H, XP)) +
                   scale(st.l, sl2_abs(H, XM));
        }
        case 3: {
            RecursionState st = recursion_coeffs(3, a, b, c, n);
            return r + scale(st.p, sl2_abs(XP, XM)) + scale(st.q, sl2_abs(H, XP)) +
                   scale(st.s, sl2_abs(H, XM));
        }
        default:
            throw ConstraintViolation("unknown family");
    }
}

HomLieBialgebra sl2_alpha_bialgebra(const Scalar& b) {
    if (b.is_zero()) throw ConstraintViolation("b must be nonzero");
    LinearMap f(3, 3);
    f.at(H, H) = Scalar(1);
    f.at(XP, XP) = b;
    f.at(XM, XM) = b.inverse();
    return bialgebra_twist(sl2_bialgebra(), f);
}

HomLieBialgebra sl2_alpha_dual(const Scalar& b) { return dualize(sl2_alpha_bialgebra(b)); }

bool sl2_iso_classifier(const Scalar& b, const Scalar& b2) {
    if (b.is_zero() || b2.is_zero()) throw ConstraintViolation("b must be nonzero");
    return b == b2;
}

}  // namespace homlie
