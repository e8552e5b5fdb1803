#pragma once

#include "homlie/bialgebra.hpp"

namespace homlie {

// Bialgebra whose cobracket is ad(r) for an (alpha ox alpha)-fixed r.
// r is not required to be anti-symmetric here; anti-symmetry is demanded
// only by the constructions whose hypotheses say so.
struct CoboundaryStructure {
    HomLieBialgebra b;
    Tensor2 r;
};

struct QuasiTriangularStructure {
    CoboundaryStructure cb;
};

AxiomReport check_coboundary(const HomLieBialgebra& B, const Tensor2& r);
AxiomReport check_quasi_triangular(const HomLieBialgebra& B, const Tensor2& r);

// Validating constructors.
CoboundaryStructure make_coboundary(HomLieBialgebra B, Tensor2 r);
QuasiTriangularStructure make_quasi_triangular(HomLieBialgebra B, Tensor2 r);

struct TwistResult {
    CoboundaryStructure cb;
    bool quasi_triangular;  // true when the input r solved the CYBE
};

// Yau twist of a coboundary Lie bialgebra (alpha = Id) along a Lie algebra
// morphism that fixes r; quasi-triangularity is inherited.
TwistResult coboundary_twist(const CoboundaryStructure& classical, const LinearMap& f);

// Builds Delta := ad(r) from an anti-symmetric, alpha-fixed r with
// alpha^(ox3)(ad_x([[r,r]]^alpha)) = 0 for all basis x.
CoboundaryStructure build_coboundary(const HomLieAlgebra& L, const Tensor2& r);

struct RhoLambdaMaps {
    LinearMap rho1;     // phi |-> <phi, alpha(r1)> r2
    LinearMap rho2;     // phi |-> <phi, r1> alpha(r2)
    LinearMap lambda1;  // phi |-> alpha(r1) <phi, r2>
    LinearMap lambda2;  // phi |-> r1 <phi, alpha(r2)>
};
RhoLambdaMaps rho_lambda(const CoboundaryStructure& cb);

// The seven equivalent statements characterizing quasi-triangularity of a
// coboundary structure; the equivalence itself is what the tests assert.
struct QuasiCharacterizations {
    bool chybe;           // (1) [[r,r]]^alpha = 0
    bool alpha_delta;     // (2) (alpha ox Delta)(r) = -[r12,r13]
    bool delta_alpha;     // (3) (Delta ox alpha)(r) = [r13,r23]
    bool rho_bracket;     // (4) rho2 [-,-]* = [-,-] rho1^(ox2)
    bool lambda_bracket;  // (5) lambda1 [-,-]* = -[-,-] lambda2^(ox2)
    bool rho_delta;       // (6) rho2^(ox2) Delta* = -Delta rho1
    bool lambda_delta;    // (7) lambda1^(ox2) Delta* = Delta lambda2

    std::array<bool, 7> as_array() const {
        return {chybe, alpha_delta, delta_alpha, rho_bracket,
                lambda_bracket, rho_delta, lambda_delta};
    }
    bool all_equal() const {
        for (bool v : as_array())
            if (v != chybe) return false;
        return true;
    }
};
QuasiCharacterizations quasi_characterizations(const CoboundaryStructure& cb);

// Cobracket perturbation Delta_t = Delta + ad(t) for an anti-symmetric,
// alpha-fixed t satisfying the perturbation hypothesis
// alpha^(ox3)(ad_x([[t,t]]^alpha + cyclic_sum((alpha ox Delta)(t)))) = 0.
HomLieBialgebra perturb(const HomLieBialgebra& B, const Tensor2& t);

// Quasi-triangular perturbation (stronger hypotheses): additionally
// [[t,t]]^alpha + cyclic_sum((alpha ox Delta)(t)) = 0 and
// [[r,t]] + [[t,r]] + [[t,t]] = 0; the result carries r + t.
QuasiTriangularStructure perturb_quasi(const QuasiTriangularStructure& qt, const Tensor2& t);

bool is_triangular(const QuasiTriangularStructure& qt);

}  // namespace homlie
