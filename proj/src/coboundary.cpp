#include "homlie/coboundary.hpp"

namespace homlie {

namespace {

Vec basis_vec(std::size_t dim, std::size_t i) {
    Vec v(dim);
    v[i] = Scalar(1);
    return v;
}

Vec map_col(const LinearMap& f, std::size_t j) {
    Vec v(f.rows);
    for (std::size_t i = 0; i < f.rows; ++i) v[i] = f.at(i, j);
    return v;
}

// Throws NotAntiSymmetric naming the first offending (i,j) pair.
void require_anti_symmetric(const HomLieAlgebra& L, const Tensor2& t, const char* what) {
    for (std::size_t i = 0; i < t.dim; ++i)
        for (std::size_t j = 0; j < t.dim; ++j) {
            Scalar res = t.at(i, j) + t.at(j, i);
            if (!res.is_zero())
                throw NotAntiSymmetric(std::string(what) + " is not anti-symmetric at (" +
                                       L.basis[i] + "," + L.basis[j] + "): " + res.str());
        }
}

}  // namespace

AxiomReport check_coboundary(const HomLieBialgebra& B, const Tensor2& r) {
    AxiomReport rep;
    const HomLieAlgebra& L = B.algebra;
    rep.add("alpha-fixed-r", tensor_power_apply(L.alpha, r) == r);
    bool ad_ok = true;
    std::string witness;
    for (std::size_t i = 0; i < L.dim; ++i) {
        Tensor2 res = B.coalgebra.cobracket_basis(i) - adjoint(L, basis_vec(L.dim, i), r);
        if (!res.is_zero()) {
            ad_ok = false;
            witness = "basis " + L.basis[i] + ": " + render_tensor(L, res);
            break;
        }
    }
    rep.add("cobracket-is-ad-r", ad_ok, witness);
    return rep;
}

AxiomReport check_quasi_triangular(const HomLieBialgebra& B, const Tensor2& r) {
    AxiomReport rep = check_coboundary(B, r);
    Tensor3 res = chybe_residual(B.algebra, r);
    rep.add("chybe", res.is_zero(),
            res.is_zero() ? "" : render_tensor(B.algebra, res));
    return rep;
}

CoboundaryStructure make_coboundary(HomLieBialgebra B, Tensor2 r) {
    AxiomReport rep = check_coboundary(B, r);
    if (!rep.all_pass()) throw ValidationError("not coboundary: " + rep.summary());
    return {std::move(B), std::move(r)};
}

QuasiTriangularStructure make_quasi_triangular(HomLieBialgebra B, Tensor2 r) {
    AxiomReport rep = check_quasi_triangular(B, r);
    if (!rep.all_pass()) throw ValidationError("not quasi-triangular: " + rep.summary());
    return {{std::move(B), std::move(r)}};
}

TwistResult coboundary_twist(const CoboundaryStructure& classical, const LinearMap& f) {
    const HomLieBialgebra& B = classical.b;
    if (!B.algebra.alpha_is_identity())
        throw NotAMorphism("coboundary twist input must have alpha = Id");
    AxiomReport rep = is_lie_morphism(B.algebra, f);
    if (!rep.all_pass())
        throw NotAMorphism("twist map is not a Lie algebra morphism: " + rep.summary());
    if (!(tensor_power_apply(f, classical.r) == classical.r))
        throw RNotFixed("(f ox f)(r) != r");
    bool quasi = chybe_residual(B.algebra, classical.r).is_zero();

    HomLieAlgebra alg = yau_twist(B.algebra, f);
    std::size_t n = B.dim();
    std::vector<Scalar> d(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        Tensor2 t = B.coalgebra.cobracket(map_col(f, i));  // Delta_alpha = Delta o f
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) d[(i * n + j) * n + k] = t.at(j, k);
    }
    HomLieCoalgebra coalg = make_hom_lie_coalgebra(n, B.coalgebra.basis, std::move(d), f);
    HomLieBialgebra twisted = make_bialgebra(std::move(alg), std::move(coalg));
    if (quasi) {
        QuasiTriangularStructure qt = make_quasi_triangular(std::move(twisted), classical.r);
        return {std::move(qt.cb), true};
    }
    return {make_coboundary(std::move(twisted), classical.r), false};
}

CoboundaryStructure build_coboundary(const HomLieAlgebra& L, const Tensor2& r) {
    if (!(tensor_power_apply(L.alpha, r) == r))
        throw NotAlphaFixed("r is not fixed by alpha ox alpha");
    require_anti_symmetric(L, r, "r");
    Tensor3 rr = chybe_residual(L, r);
    for (std::size_t i = 0; i < L.dim; ++i) {
        Tensor3 obst = tensor_power_apply(L.alpha, adjoint(L, basis_vec(L.dim, i), rr));
        if (!obst.is_zero())
            throw CoboundObstruction("coboundary hypothesis fails", L.basis[i],
                                     render_tensor(L, obst));
    }
    std::size_t n = L.dim;
    std::vector<Scalar> d(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        Tensor2 t = adjoint(L, basis_vec(n, i), r);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) d[(i * n + j) * n + k] = t.at(j, k);
    }
    HomLieCoalgebra coalg = make_hom_lie_coalgebra(n, L.basis, std::move(d), L.alpha);
    HomLieBialgebra B = make_bialgebra(L, std::move(coalg));
    return make_coboundary(std::move(B), r);
}

RhoLambdaMaps rho_lambda(const CoboundaryStructure& cb) {
    const HomLieAlgebra& L = cb.b.algebra;
    const Tensor2& r = cb.r;
    std::size_t n = L.dim;
    RhoLambdaMaps maps{LinearMap(n, n), LinearMap(n, n), LinearMap(n, n), LinearMap(n, n)};
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t m = 0; m < n; ++m) {
            Scalar r1, r2, l1, l2;
            for (std::size_t p = 0; p < n; ++p) {
                r1 += L.alpha.at(j, p) * r.at(p, m);   // <phi_j, alpha(e_p)> r(p,m)
                r2 += r.at(j, p) * L.alpha.at(m, p);   // <phi_j, e_p> alpha(e_p')...
                l1 += r.at(p, j) * L.alpha.at(m, p);   // alpha(r1) <phi_j, r2>
                l2 += r.at(m, p) * L.alpha.at(j, p);   // r1 <phi_j, alpha(r2)>
            }
            maps.rho1.at(m, j) = r1;
            maps.rho2.at(m, j) = r2;
            maps.lambda1.at(m, j) = l1;
            maps.lambda2.at(m, j) = l2;
        }
    return maps;
}

QuasiCharacterizations quasi_characterizations(const CoboundaryStructure& cb) {
    const HomLieAlgebra& L = cb.b.algebra;
    const HomLieCoalgebra& C = cb.b.coalgebra;
    const Tensor2& r = cb.r;
    MixedBrackets mb = mixed_brackets(L, r, r);

    QuasiCharacterizations q{};
    q.chybe = (mb.b12_13 + mb.b12_23 + mb.b13_23).is_zero();
    q.alpha_delta = alpha_tensor_delta(C, r) == -mb.b12_13;
    q.delta_alpha = delta_tensor_alpha(C, r) == mb.b13_23;

    HomLieBialgebra dual = dualize(cb.b);
    RhoLambdaMaps maps = rho_lambda(cb);
    std::size_t n = L.dim;

    q.rho_bracket = true;
    q.lambda_bracket = true;
    for (std::size_t i = 0; i < n && (q.rho_bracket || q.lambda_bracket); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec dual_br = dual.algebra.bracket_basis(i, j);
            Vec lhs4 = apply_map(maps.rho2, dual_br);
            Vec rhs4 = L.bracket(map_col(maps.rho1, i), map_col(maps.rho1, j));
            if (!vec_is_zero(vec_sub(lhs4, rhs4))) q.rho_bracket = false;
            Vec lhs5 = apply_map(maps.lambda1, dual_br);
            Vec rhs5 = L.bracket(map_col(maps.lambda2, i), map_col(maps.lambda2, j));
            if (!vec_is_zero(vec_add(lhs5, rhs5))) q.lambda_bracket = false;
        }

    q.rho_delta = true;
    q.lambda_delta = true;
    for (std::size_t i = 0; i < n; ++i) {
        Tensor2 dual_cb = dual.coalgebra.cobracket_basis(i);
        Tensor2 lhs6 = tensor_power_apply(maps.rho2, dual_cb);
        Tensor2 rhs6 = C.cobracket(map_col(maps.rho1, i));
        if (!(lhs6 + rhs6).is_zero()) q.rho_delta = false;
        Tensor2 lhs7 = tensor_power_apply(maps.lambda1, dual_cb);
        Tensor2 rhs7 = C.cobracket(map_col(maps.lambda2, i));
        if (!(lhs7 == rhs7)) q.lambda_delta = false;
    }
    return q;
}

HomLieBialgebra perturb(const HomLieBialgebra& B, const Tensor2& t) {
    const HomLieAlgebra& L = B.algebra;
    if (!(tensor_power_apply(L.alpha, t) == t))
        throw NotAlphaFixed("t is not fixed by alpha ox alpha");
    require_anti_symmetric(L, t, "t");
    Tensor3 core = mixed_chybe(L, t, t) + cyclic_sum(alpha_tensor_delta(B.coalgebra, t));
    for (std::size_t i = 0; i < L.dim; ++i) {
        Tensor3 obst = tensor_power_apply(L.alpha, adjoint(L, basis_vec(L.dim, i), core));
        if (!obst.is_zero())
            throw PerturbObstruction("perturbation hypothesis fails", L.basis[i],
                                     render_tensor(L, obst));
    }
    std::size_t n = L.dim;
    std::vector<Scalar> d = B.coalgebra.d;
    for (std::size_t i = 0; i < n; ++i) {
        Tensor2 a = adjoint(L, basis_vec(n, i), t);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) d[(i * n + j) * n + k] += a.at(j, k);
    }
    HomLieCoalgebra coalg = make_hom_lie_coalgebra(n, B.coalgebra.basis, std::move(d), L.alpha);
    return make_bialgebra(L, std::move(coalg));
}

QuasiTriangularStructure perturb_quasi(const QuasiTriangularStructure& qt, const Tensor2& t) {
    const HomLieBialgebra& B = qt.cb.b;
    const HomLieAlgebra& L = B.algebra;
    if (!(tensor_power_apply(L.alpha, t) == t))
        throw NotAlphaFixed("t is not fixed by alpha ox alpha");
    require_anti_symmetric(L, t, "t");
    Tensor3 strong = mixed_chybe(L, t, t) + cyclic_sum(alpha_tensor_delta(B.coalgebra, t));
    if (!strong.is_zero())
        throw PerturbObstruction("strengthened perturbation hypothesis fails", "(global)",
                                 render_tensor(L, strong));
    Tensor3 mixed = mixed_chybe(L, qt.cb.r, t) + mixed_chybe(L, t, qt.cb.r) +
                    mixed_chybe(L, t, t);
    if (!mixed.is_zero())
        throw MixedChybeObstruction("mixed CHYBE obstruction", "(global)",
                                    render_tensor(L, mixed));
    HomLieBialgebra perturbed = perturb(B, t);
    return make_quasi_triangular(std::move(perturbed), qt.cb.r + t);
}

bool is_triangular(const QuasiTriangularStructure& qt) { return flip(qt.cb.r) == -qt.cb.r; }

}  // namespace homlie
