#pragma once

#include "homlie/coboundary.hpp"

namespace homlie {

// Basis order: H = 0, X+ = 1, X- = 2 throughout.
HomLieAlgebra make_sl2();
Tensor2 standard_r();            // X+ ox X- + 1/4 H ox H
HomLieCoalgebra sl2_cobracket();  // Delta(H)=0, Delta(X+-) = 1/2 (X+- ox H - H ox X+-)
HomLieBialgebra sl2_bialgebra();  // the two above with alpha = Id

// |Y ox Z| = Y ox Z - Z ox Y on basis indices.
Tensor2 sl2_abs(std::size_t y, std::size_t z);

// The three endomorphism families of sl(2).  Families 1 and 2 need b != 0
// and ac = 0; family 3 needs ab != 0 and c != +-1.  The matrix is checked to
// be a Lie algebra morphism at construction.
struct Sl2Endo {
    int family;
    Scalar a, b, c;
    LinearMap matrix;
};
Sl2Endo endo(int family, const Scalar& a, const Scalar& b, const Scalar& c);

// Coefficient sequences of the closed-form twisted r-matrices.  Family 1
// carries (d_n, e_n) from the printed auxiliary recursion (they do not enter
// the corrected closed form); families 2 and 3 carry the coefficients of
// |X+ ox X-|, |H ox X+|, |H ox X-|.
struct RecursionState {
    int family;
    int n;
    Scalar d, e;     // family 1 (n >= 1)
    Scalar j, k, l;  // family 2 (n >= 0)
    Scalar p, q, s;  // family 3 (n >= 0)
};
RecursionState recursion_coeffs(int family, const Scalar& a, const Scalar& b,
                                const Scalar& c, int n);

// (alpha ox alpha)^n (r) in closed form.  For family 1 the printed closed
// form is inconsistent with its own matrix; the corrected form (validated
// against direct iteration) is
//   r - (ab/2)(sum b^i) |H ox X+| + (c/(2b))(sum b^-i) |H ox X-|.
Tensor2 closed_form_twisted_r(int family, const Scalar& a, const Scalar& b,
                              const Scalar& c, int n);

HomLieBialgebra sl2_alpha_bialgebra(const Scalar& b);  // twist along diag(1, b, 1/b)
HomLieBialgebra sl2_alpha_dual(const Scalar& b);

// sl(2)_alpha(b) and sl(2)_alpha(b') are isomorphic iff b = b'.
bool sl2_iso_classifier(const Scalar& b, const Scalar& b2);

}  // namespace homlie
