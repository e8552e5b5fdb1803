#pragma once

#include "homlie/homlie.hpp"

namespace homlie {

// Hom-Lie coalgebra by structure constants: d[i][j][k] is the coefficient of
// e_j ox e_k in Delta(e_i).
struct HomLieCoalgebra {
    std::size_t dim = 0;
    std::vector<std::string> basis;
    std::vector<Scalar> d;  // dim^3, index (i*dim + j)*dim + k
    LinearMap alpha;

    const Scalar& dc(std::size_t i, std::size_t j, std::size_t k) const {
        return d[(i * dim + j) * dim + k];
    }
    Scalar& dc(std::size_t i, std::size_t j, std::size_t k) {
        return d[(i * dim + j) * dim + k];
    }

    Tensor2 cobracket_basis(std::size_t i) const;
    Tensor2 cobracket(const Vec& x) const;
};

// Co-multiplicativity, co-anti-symmetry, Hom-co-Jacobi.
AxiomReport check_hom_lie_coalgebra(const HomLieCoalgebra& C);
HomLieCoalgebra make_hom_lie_coalgebra(std::size_t dim, std::vector<std::string> basis,
                                       std::vector<Scalar> d, LinearMap alpha);

struct HomLieBialgebra {
    HomLieAlgebra algebra;
    HomLieCoalgebra coalgebra;

    std::size_t dim() const { return algebra.dim; }
    const LinearMap& alpha() const { return algebra.alpha; }
};

// Delta([e_i,e_j]) - ad_{alpha(e_i)}(Delta(e_j)) + ad_{alpha(e_j)}(Delta(e_i))
// per basis pair (i,j).
std::vector<Tensor2> compatibility_residual(const HomLieAlgebra& L, const HomLieCoalgebra& C);

AxiomReport check_hom_lie_bialgebra(const HomLieBialgebra& B);
// Validates algebra, then coalgebra, then compatibility (in that order).
HomLieBialgebra make_bialgebra(HomLieAlgebra L, HomLieCoalgebra C);

// Yau twist of a Lie bialgebra (alpha = Id) along a bialgebra endomorphism:
// bracket f o [-,-], cobracket Delta o f, twist f.
HomLieBialgebra bialgebra_twist(const HomLieBialgebra& B, const LinearMap& f);

// alpha' f = f alpha, f [-,-] = [-,-]' f^(ox2), Delta' f = f^(ox2) Delta.
AxiomReport is_bialgebra_morphism(const HomLieBialgebra& B, const HomLieBialgebra& B2,
                                  const LinearMap& f);
// Same checks plus exact invertibility of gamma (throws NotInvertible).
AxiomReport verify_isomorphism(const HomLieBialgebra& B, const HomLieBialgebra& B2,
                               const LinearMap& gamma);

// Dual bialgebra on the dual basis: alpha* = transpose; the dual bracket
// pairs with Delta and the dual cobracket pairs with [-,-].
HomLieBialgebra dualize(const HomLieBialgebra& B);

// (alpha ox Delta)(t) and (Delta ox alpha)(t) for t in L ox L.
Tensor3 alpha_tensor_delta(const HomLieCoalgebra& C, const Tensor2& t);
Tensor3 delta_tensor_alpha(const HomLieCoalgebra& C, const Tensor2& t);

// Linear map L -> L ox L commuting with alpha (a 1-cochain).
struct Cochain1 {
    std::size_t dim = 0;
    std::vector<Scalar> d;  // same layout as cobracket constants

    Tensor2 apply_basis(std::size_t i) const;
};

// delta^0(r) = ad(r); requires (alpha ox alpha)(r) = r.
Cochain1 delta0(const HomLieAlgebra& L, const Tensor2& r);

// delta^1(D)(x,y) = D([x,y]) - ad_{alpha(x)}(D(y)) + ad_{alpha(y)}(D(x))
// per basis pair; requires D to commute with alpha.
std::vector<Tensor2> delta1(const HomLieAlgebra& L, const Cochain1& D);

}  // namespace homlie
