#include <doctest.h>

#include "testutil.hpp"

using namespace homlie;

namespace {

Vec basis_vec(std::size_t dim, std::size_t i) {
    Vec v(dim);
    v[i] = Scalar(1);
    return v;
}

LinearMap diag3(const Scalar& x, const Scalar& y, const Scalar& z) {
    LinearMap f(3, 3);
    f.at(0, 0) = x;
    f.at(1, 1) = y;
    f.at(2, 2) = z;
    return f;
}

}  // namespace

TEST_CASE("classical sl2 bialgebra axioms") {
    HomLieBialgebra B = sl2_bialgebra();
    CHECK(check_hom_lie_coalgebra(B.coalgebra).all_pass());
    CHECK(check_hom_lie_bialgebra(B).all_pass());
    for (const Tensor2& res : compatibility_residual(B.algebra, B.coalgebra))
        CHECK(res.is_zero());
}

TEST_CASE("compatibility failure is localized") {
    HomLieBialgebra B = sl2_bialgebra();
    HomLieCoalgebra C = B.coalgebra;
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) C.dc(2, j, k) = Scalar(0);  // Delta(X-) := 0
    auto res = compatibility_residual(B.algebra, C);
    // The pair (X+, X-) sees the damage; Delta(H) = 0 makes it the only
    // witness involving X-'s cobracket through the bracket.
    CHECK_FALSE(res[1 * 3 + 2].is_zero());
    CHECK(res[0 * 3 + 1].is_zero());
    CHECK_FALSE(check_hom_lie_bialgebra({B.algebra, C}).all_pass());
}

TEST_CASE("bialgebra twist along diag(1, b, 1/b)") {
    Scalar b = Scalar::var('b');
    HomLieBialgebra B = sl2_alpha_bialgebra(b);
    CHECK(check_hom_lie_bialgebra(B).all_pass());

    // Bracket: [H,X+-] = +-2 b^{+-1} X+-; cobracket scales the same way.
    CHECK(B.algebra.sc(0, 1, 1) == Scalar(2) * b);
    CHECK(B.algebra.sc(0, 2, 2) == Scalar(-2) * b.inverse());
    CHECK(B.coalgebra.cobracket_basis(0).is_zero());
    CHECK(B.coalgebra.cobracket_basis(1) ==
          scale(b * Scalar(Rational(1, 2)), sl2_abs(1, 0)));
    CHECK(B.coalgebra.cobracket_basis(2) ==
          scale(b.inverse() * Scalar(Rational(1, 2)), sl2_abs(2, 0)));

    // The swap H |-> -H, X+ <-> X- preserves the bracket but flips the
    // cobracket, so it is not a bialgebra endomorphism.
    LinearMap omega(3, 3);
    omega.at(0, 0) = Scalar(-1);
    omega.at(2, 1) = Scalar(1);
    omega.at(1, 2) = Scalar(1);
    HomLieBialgebra cl = sl2_bialgebra();
    CHECK(is_lie_morphism(cl.algebra, omega).all_pass());
    CHECK_FALSE(is_bialgebra_morphism(cl, cl, omega).all_pass());
    CHECK_THROWS_AS(bialgebra_twist(cl, omega), NotABialgebraMorphism);
}

TEST_CASE("isomorphisms of the twisted family") {
    Scalar b = Scalar(3);
    HomLieBialgebra B = sl2_alpha_bialgebra(b);
    CHECK(verify_isomorphism(B, B, LinearMap::identity(3)).all_pass());
    // Rescaling X+- by u, 1/u is a bialgebra automorphism.
    Scalar u = Scalar(Rational(5, 2));
    CHECK(verify_isomorphism(B, B, diag3(Scalar(1), u, u.inverse())).all_pass());
    CHECK_THROWS_AS(verify_isomorphism(B, B, diag3(Scalar(1), Scalar(0), Scalar(1))),
                    NotInvertible);
    CHECK(sl2_iso_classifier(Scalar(3), Scalar(3)));
    CHECK_FALSE(sl2_iso_classifier(Scalar(3), Scalar(2)));
}

TEST_CASE("dual of the twisted bialgebra") {
    Scalar b = Scalar::var('b');
    HomLieBialgebra D = sl2_alpha_dual(b);
    CHECK(check_hom_lie_bialgebra(D).all_pass());
    CHECK(D.algebra.basis[0] == "H*");

    // Dual basis phi = H*, psi+- = X+-*.
    // [psi+-, phi] = (b^{+-1}/2) psi+-.
    CHECK(D.algebra.sc(1, 0, 1) == b * Scalar(Rational(1, 2)));
    CHECK(D.algebra.sc(2, 0, 2) == b.inverse() * Scalar(Rational(1, 2)));
    CHECK(D.algebra.sc(1, 2, 0).is_zero());
    // Delta*(phi) = psi+ ox psi- - psi- ox psi+.
    CHECK(D.coalgebra.cobracket_basis(0) == sl2_abs(1, 2));
    // Delta*(psi+-) = +-2 b^{+-1} (phi ox psi+- - psi+- ox phi).
    CHECK(D.coalgebra.cobracket_basis(1) == scale(Scalar(2) * b, sl2_abs(0, 1)));
    CHECK(D.coalgebra.cobracket_basis(2) ==
          scale(Scalar(-2) * b.inverse(), sl2_abs(0, 2)));
    // alpha* is the transpose of diag(1, b, 1/b), i.e. the same matrix.
    CHECK(D.algebra.alpha == diag3(Scalar(1), b, b.inverse()).transpose());
}

TEST_CASE("double dual returns the original constants") {
    HomLieBialgebra B = sl2_alpha_bialgebra(Scalar(2));
    HomLieBialgebra DD = dualize(dualize(B));
    CHECK(DD.algebra.c == B.algebra.c);
    CHECK(DD.coalgebra.d == B.coalgebra.d);
    CHECK(DD.algebra.alpha == B.algebra.alpha);
}

TEST_CASE("dualize commutes with the twist") {
    Scalar b = Scalar::var('b');
    LinearMap f = diag3(Scalar(1), b, b.inverse());
    HomLieBialgebra lhs = dualize(bialgebra_twist(sl2_bialgebra(), f));
    HomLieBialgebra rhs = bialgebra_twist(dualize(sl2_bialgebra()), f.transpose());
    CHECK(lhs.algebra.c == rhs.algebra.c);
    CHECK(lhs.coalgebra.d == rhs.coalgebra.d);
    CHECK(lhs.algebra.alpha == rhs.algebra.alpha);
}

TEST_CASE("delta0 requires a fixed r") {
    Scalar b = Scalar(2);
    HomLieBialgebra B = sl2_alpha_bialgebra(b);
    Cochain1 D = delta0(B.algebra, standard_r());
    // ad(r) of the standard r reproduces the twisted cobracket up to the
    // overall twist scale: ad_{X+}(r) = 1/2 |X+ ox H| in the twisted algebra
    // picks up the bracket's b factors.
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(D.apply_basis(i) == adjoint(B.algebra, basis_vec(3, i), standard_r()));

    Tensor2 unfixed(3);
    unfixed.at(0, 1) = Scalar(1);  // H ox X+ scales by b != 1
    CHECK_THROWS_AS(delta0(B.algebra, unfixed), NotAlphaFixed);
}

TEST_CASE("delta1 after delta0 vanishes") {
    testutil::Rng rng;
    for (int trial = 0; trial < 15; ++trial) {
        HomLieBialgebra B = sl2_alpha_bialgebra(Scalar(rng.nonzero_gaussian()));
        Tensor2 r = rng.sl2_alpha_fixed_tensor();
        Cochain1 D = delta0(B.algebra, r);
        for (const Tensor2& res : delta1(B.algebra, D)) CHECK(res.is_zero());
    }
}

TEST_CASE("delta1 rejects maps that do not commute with alpha") {
    HomLieBialgebra B = sl2_alpha_bialgebra(Scalar(2));
    Cochain1 D;
    D.dim = 3;
    D.d.assign(27, Scalar(0));
    D.d[(0 * 3 + 0) * 3 + 1] = Scalar(1);  // H |-> H ox X+
    CHECK_THROWS_AS(delta1(B.algebra, D), NotACochain);
}
