#include <doctest.h>

#include "testutil.hpp"

using namespace homlie;

namespace {

Vec basis_vec(std::size_t dim, std::size_t i) {
    Vec v(dim);
    v[i] = Scalar(1);
    return v;
}

HomLieAlgebra abelian(std::size_t dim) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
    return make_hom_lie(dim, names, std::vector<Scalar>(dim * dim * dim),
                        LinearMap::identity(dim));
}

}  // namespace

TEST_CASE("sl2 bracket table") {
    HomLieAlgebra L = make_sl2();
    Vec h = basis_vec(3, 0), xp = basis_vec(3, 1), xm = basis_vec(3, 2);
    CHECK(L.bracket(xp, xm) == h);
    CHECK(L.bracket(h, xp) == vec_scale(Scalar(2), xp));
    CHECK(L.bracket(h, xm) == vec_scale(Scalar(-2), xm));
    testutil::Rng rng;
    Vec x = rng.vec(3);
    CHECK(vec_is_zero(L.bracket(x, x)));
}

TEST_CASE("hom-Jacobi residuals") {
    CHECK(check_hom_lie(make_sl2()).all_pass());
    CHECK(check_hom_lie(abelian(3)).all_pass());

    // Tampering with one structure constant breaks Jacobi.
    HomLieAlgebra tampered = make_sl2();
    tampered.sc(1, 2, 1) = Scalar(1);  // [X+,X-] := H + X+
    tampered.sc(2, 1, 1) = Scalar(-1);
    auto res = hom_jacobi_residual(tampered);
    bool some_nonzero = false;
    for (const auto& v : res) some_nonzero = some_nonzero || !vec_is_zero(v);
    CHECK(some_nonzero);
}

TEST_CASE("is_lie_morphism") {
    HomLieAlgebra sl2 = make_sl2();
    CHECK(is_lie_morphism(sl2, LinearMap::identity(3)).all_pass());

    // Family 1, c = 0 branch, symbolically over Q(i)(a,b).
    Sl2Endo e = endo(1, Scalar::var('a'), Scalar::var('b'), Scalar(0));
    CHECK(is_lie_morphism(sl2, e.matrix).all_pass());

    LinearMap f(3, 3);
    f.at(0, 0) = Scalar(1);
    f.at(1, 1) = Scalar(1);  // X- |-> 0
    AxiomReport rep = is_lie_morphism(sl2, f);
    CHECK_FALSE(rep.all_pass());
    CHECK(rep.summary().find("X+,X-") != std::string::npos);
}

TEST_CASE("yau_twist") {
    HomLieAlgebra sl2 = make_sl2();
    CHECK(yau_twist(sl2, LinearMap::identity(3)).c == sl2.c);

    // Diagonal morphism: [H, X+-]_alpha = +-2 b^{+-1} X+-, [X+,X-]_alpha = H.
    Scalar b = Scalar::var('b');
    LinearMap f(3, 3);
    f.at(0, 0) = Scalar(1);
    f.at(1, 1) = b;
    f.at(2, 2) = b.inverse();
    HomLieAlgebra t = yau_twist(sl2, f);
    CHECK(t.sc(0, 1, 1) == Scalar(2) * b);
    CHECK(t.sc(0, 2, 2) == Scalar(-2) * b.inverse());
    CHECK(t.sc(1, 2, 0) == Scalar(1));
    CHECK(check_hom_lie(t).all_pass());  // symbolically in b

    LinearMap bad(3, 3);
    bad.at(0, 0) = Scalar(1);
    CHECK_THROWS_AS(yau_twist(sl2, bad), NotAMorphism);
}

TEST_CASE("adjoint reproduces the cobracket of the standard r") {
    HomLieAlgebra sl2 = make_sl2();
    Tensor2 r = standard_r();
    CHECK(adjoint(sl2, basis_vec(3, 0), r).is_zero());  // ad_H(r) = 0
    Tensor2 d = adjoint(sl2, basis_vec(3, 1), r);       // ad_{X+}(r)
    CHECK(d == scale(Scalar(Rational(1, 2)), sl2_abs(1, 0)));
    Tensor2 zero(3);
    CHECK(adjoint(sl2, basis_vec(3, 1), zero).is_zero());
}

TEST_CASE("mixed brackets and the CHYBE residual") {
    HomLieAlgebra sl2 = make_sl2();
    Tensor2 r = standard_r();

    MixedBrackets mb = mixed_brackets(sl2, r, r);
    CHECK((mb.b12_13 + mb.b12_23 + mb.b13_23).is_zero());
    CHECK(chybe_residual(sl2, r).is_zero());

    HomLieAlgebra ab = abelian(3);
    testutil::Rng rng;
    Tensor2 x = rng.tensor2(3);
    MixedBrackets mb0 = mixed_brackets(ab, x, x);
    CHECK(mb0.b12_13.is_zero());
    CHECK(mb0.b12_23.is_zero());
    CHECK(mb0.b13_23.is_zero());

    Tensor2 hh(3);
    hh.at(0, 0) = Scalar(1);
    MixedBrackets mbh = mixed_brackets(sl2, hh, hh);
    CHECK(mbh.b12_13.is_zero());
    CHECK(mbh.b12_23.is_zero());
    CHECK(mbh.b13_23.is_zero());

    Tensor2 bad(3);
    bad.at(1, 2) = Scalar(1);  // X+ ox X- alone fails the CYBE
    CHECK_FALSE(chybe_residual(sl2, bad).is_zero());
    CHECK(chybe_residual(sl2, Tensor2(3)).is_zero());
}

TEST_CASE("twisted_solution") {
    HomLieAlgebra sl2 = make_sl2();
    Tensor2 r = standard_r();
    Sl2Endo e = endo(1, Scalar(1), Scalar(2), Scalar(0));
    CHECK(twisted_solution(sl2, e.matrix, r, 0) == r);

    // Direct double application at a=1, b=2, c=0: r + 3|X+ ox H|.
    Tensor2 n2 = twisted_solution(sl2, e.matrix, r, 2);
    CHECK(n2 == r + scale(Scalar(3), sl2_abs(1, 0)));

    Tensor2 bad(3);
    bad.at(1, 2) = Scalar(1);
    CHECK_THROWS_AS(twisted_solution(sl2, e.matrix, bad, 1), NotAnRMatrix);
    LinearMap notmor(3, 3);
    notmor.at(0, 0) = Scalar(1);
    CHECK_THROWS_AS(twisted_solution(sl2, notmor, r, 1), NotAMorphism);
}

TEST_CASE("lemma: adjoint is a twisted derivation in x") {
    // ad_{[x,y]}(t) = ad_{alpha(x)}(ad_y(t)) - ad_{alpha(y)}(ad_x(t))
    // for (alpha ox alpha)-fixed t.
    testutil::Rng rng;
    HomLieBialgebra B = sl2_alpha_bialgebra(Scalar(rng.nonzero_gaussian()));
    const HomLieAlgebra& L = B.algebra;
    for (int trial = 0; trial < 25; ++trial) {
        Tensor2 t = rng.sl2_alpha_fixed_tensor();
        REQUIRE(tensor_power_apply(L.alpha, t) == t);
        for (std::size_t x = 0; x < 3; ++x)
            for (std::size_t y = 0; y < 3; ++y) {
                Vec ex = basis_vec(3, x), ey = basis_vec(3, y);
                Tensor2 lhs = adjoint(L, L.bracket(ex, ey), t);
                Tensor2 rhs = adjoint(L, apply_map(L.alpha, ex), adjoint(L, ey, t)) -
                              adjoint(L, apply_map(L.alpha, ey), adjoint(L, ex, t));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("lemma: cyclic identity for anti-symmetric fixed t") {
    // cyclic_sum((alpha ox ad(t))(ad_x(t))) = alpha^(ox3)(ad_x([[t,t]]))
    // where (alpha ox ad(t)) sends u ox v to alpha(u) ox ad_v(t).
    testutil::Rng rng;
    for (int trial = 0; trial < 20; ++trial) {
        HomLieBialgebra B = sl2_alpha_bialgebra(Scalar(rng.nonzero_gaussian()));
        const HomLieAlgebra& L = B.algebra;
        Tensor2 t = scale(rng.scalar(), sl2_abs(1, 2));  // anti-symmetric, alpha-fixed
        REQUIRE(tensor_power_apply(L.alpha, t) == t);
        REQUIRE(flip(t) == -t);
        for (std::size_t x = 0; x < 3; ++x) {
            Tensor2 adx = adjoint(L, basis_vec(3, x), t);
            // (alpha ox ad(t)) on u ox v: alpha(u) ox ad_v(t).
            Tensor3 lhs(3);
            for (std::size_t p = 0; p < 3; ++p)
                for (std::size_t q = 0; q < 3; ++q) {
                    if (adx.at(p, q).is_zero()) continue;
                    Tensor2 adv = adjoint(L, basis_vec(3, q), t);
                    for (std::size_t m = 0; m < 3; ++m)
                        for (std::size_t n = 0; n < 3; ++n)
                            for (std::size_t u = 0; u < 3; ++u)
                                lhs.at(m, n, u) +=
                                    adx.at(p, q) * L.alpha.at(m, p) * adv.at(n, u);
                }
            Tensor3 rhs = tensor_power_apply(
                L.alpha, adjoint(L, basis_vec(3, x), chybe_residual(L, t)));
            CHECK(cyclic_sum(lhs) == rhs);
        }
    }
}

TEST_CASE("hybe residual") {
    std::size_t d = 2;
    LinearMap tau(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) tau.at(j * d + i, i * d + j) = Scalar(1);
    testutil::Rng rng;
    LinearMap alpha = rng.map(d);
    CHECK(hybe_residual(tau, alpha).is_zero());
    CHECK(hybe_residual(LinearMap::identity(d * d), LinearMap::identity(d)).is_zero());
    CHECK(hybe_residual(scale_map(Scalar(2), tau), LinearMap::identity(d)).is_zero());
    // The identity on V ox V fails for non-scalar alpha: the two sides are
    // alpha^2 ox Id ox alpha and alpha ox Id ox alpha^2.
    LinearMap sk(d, d);
    sk.at(0, 0) = Scalar(1);
    sk.at(1, 1) = Scalar(2);
    CHECK_FALSE(hybe_residual(LinearMap::identity(d * d), sk).is_zero());

    // A map that fails to commute with alpha ox alpha is rejected.
    LinearMap skew(d, d);
    skew.at(0, 0) = Scalar(1);
    skew.at(1, 1) = Scalar(2);
    LinearMap bad(d * d, d * d);
    bad.at(0, 1) = Scalar(1);  // e1 ox e2 |-> e1 ox e1, others to 0
    CHECK_THROWS_AS(hybe_residual(bad, skew), NotAlphaCommuting);
}

TEST_CASE("validating constructor rejects bad structure constants") {
    std::vector<Scalar> c(27);
    c[(0 * 3 + 1) * 3 + 1] = Scalar(2);  // [H,X+] = 2X+ without the mirror
    CHECK_THROWS_AS(make_hom_lie(3, {"H", "X+", "X-"}, c, LinearMap::identity(3)),
                    ValidationError);
}
