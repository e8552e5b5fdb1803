#pragma once

#include <string>
#include <vector>

#include "homlie/errors.hpp"
#include "homlie/multilinear.hpp"
#include "homlie/report.hpp"

namespace homlie {

// Hom-Lie algebra by structure constants: c[i][j][k] is the coefficient of
// e_k in [e_i, e_j]; alpha is the twisting endomorphism (alpha = Id gives an
// ordinary Lie algebra).
struct HomLieAlgebra {
    std::size_t dim = 0;
    std::vector<std::string> basis;
    std::vector<Scalar> c;  // dim^3, index (i*dim + j)*dim + k
    LinearMap alpha;

    const Scalar& sc(std::size_t i, std::size_t j, std::size_t k) const {
        return c[(i * dim + j) * dim + k];
    }
    Scalar& sc(std::size_t i, std::size_t j, std::size_t k) {
        return c[(i * dim + j) * dim + k];
    }

    Vec bracket_basis(std::size_t i, std::size_t j) const;
    Vec bracket(const Vec& x, const Vec& y) const;
    bool alpha_is_identity() const { return alpha == LinearMap::identity(dim); }
};

// Renders a vector / tensor in basis-name notation, e.g. "+3 X+(x)H".
std::string render_vec(const HomLieAlgebra& L, const Vec& v);
std::string render_tensor(const HomLieAlgebra& L, const Tensor2& t);
std::string render_tensor(const HomLieAlgebra& L, const Tensor3& t);

// Anti-symmetry, multiplicativity of alpha, Hom-Jacobi.
AxiomReport check_hom_lie(const HomLieAlgebra& L);

// Validating constructor; throws ValidationError carrying the first failure.
HomLieAlgebra make_hom_lie(std::size_t dim, std::vector<std::string> basis,
                           std::vector<Scalar> c, LinearMap alpha);

// Residual of [[x,y],alpha(z)] + [[z,x],alpha(y)] + [[y,z],alpha(x)] per
// basis triple (i,j,k); entry (i,j,k) is a vector in L.
std::vector<Vec> hom_jacobi_residual(const HomLieAlgebra& L);

// f([x,y]) = [f(x),f(y)] on all basis pairs (L must have alpha = Id).
AxiomReport is_lie_morphism(const HomLieAlgebra& L, const LinearMap& f);

// (L, f o [-,-], f); throws NotAMorphism.
HomLieAlgebra yau_twist(const HomLieAlgebra& L, const LinearMap& f);

// ad_x(y1 ox ... ox yn) = sum_i alpha(y1) ox ... ox [x,y_i] ox ... ox alpha(yn).
Tensor2 adjoint(const HomLieAlgebra& L, const Vec& x, const Tensor2& t);
Tensor3 adjoint(const HomLieAlgebra& L, const Vec& x, const Tensor3& t);

struct MixedBrackets {
    Tensor3 b12_13;  // [r12, s13]
    Tensor3 b12_23;  // [r12, s23]
    Tensor3 b13_23;  // [r13, s23]
};
MixedBrackets mixed_brackets(const HomLieAlgebra& L, const Tensor2& r, const Tensor2& s);

// [[r,s]]^alpha = [r12,s13] + [r12,s23] + [r13,s23].
Tensor3 mixed_chybe(const HomLieAlgebra& L, const Tensor2& r, const Tensor2& s);
Tensor3 chybe_residual(const HomLieAlgebra& L, const Tensor2& r);

// (f ox f)^n (r); by default verifies that f is a morphism of the Lie
// algebra L (alpha = Id) and that r solves the CYBE.
Tensor2 twisted_solution(const HomLieAlgebra& L, const LinearMap& f, const Tensor2& r,
                         int n, bool check = true);

// LHS - RHS of the operator form of the Hom-Yang-Baxter equation for
// B : V ox V -> V ox V; requires B (alpha ox alpha) = (alpha ox alpha) B.
LinearMap hybe_residual(const LinearMap& B, const LinearMap& alpha);

}  // namespace homlie
