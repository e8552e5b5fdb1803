#include "homlie/bialgebra.hpp"

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

}  // namespace

Tensor3 alpha_tensor_delta(const HomLieCoalgebra& C, const Tensor2& t) {
    Tensor3 out(t.dim);
    for (std::size_t p = 0; p < t.dim; ++p)
        for (std::size_t q = 0; q < t.dim; ++q) {
            if (t.at(p, q).is_zero()) continue;
            for (std::size_t m = 0; m < t.dim; ++m) {
                if (C.alpha.at(m, p).is_zero()) continue;
                for (std::size_t n = 0; n < t.dim; ++n)
                    for (std::size_t u = 0; u < t.dim; ++u)
                        out.at(m, n, u) += t.at(p, q) * C.alpha.at(m, p) * C.dc(q, n, u);
            }
        }
    return out;
}

Tensor3 delta_tensor_alpha(const HomLieCoalgebra& C, const Tensor2& t) {
    Tensor3 out(t.dim);
    for (std::size_t p = 0; p < t.dim; ++p)
        for (std::size_t q = 0; q < t.dim; ++q) {
            if (t.at(p, q).is_zero()) continue;
            for (std::size_t u = 0; u < t.dim; ++u) {
                if (C.alpha.at(u, q).is_zero()) continue;
                for (std::size_t m = 0; m < t.dim; ++m)
                    for (std::size_t n = 0; n < t.dim; ++n)
                        out.at(m, n, u) += t.at(p, q) * C.dc(p, m, n) * C.alpha.at(u, q);
            }
        }
    return out;
}

Tensor2 HomLieCoalgebra::cobracket_basis(std::size_t i) const {
    Tensor2 t(dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) t.at(j, k) = dc(i, j, k);
    return t;
}

Tensor2 HomLieCoalgebra::cobracket(const Vec& x) const {
    if (x.size() != dim) throw DimensionMismatch("cobracket operand dimension differs");
    Tensor2 t(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) t.at(j, k) += x[i] * dc(i, j, k);
    }
    return t;
}

AxiomReport check_hom_lie_coalgebra(const HomLieCoalgebra& C) {
    AxiomReport rep;

    bool anti = true;
    std::string anti_witness;
    for (std::size_t i = 0; i < C.dim && anti; ++i)
        for (std::size_t j = 0; j < C.dim && anti; ++j)
            for (std::size_t k = 0; k < C.dim; ++k) {
                Scalar res = C.dc(i, j, k) + C.dc(i, k, j);
                if (!res.is_zero()) {
                    anti = false;
                    anti_witness = "Delta(" + C.basis[i] + ") entry (" + C.basis[j] + "," +
                                   C.basis[k] + "): " + res.str();
                    break;
                }
            }
    rep.add("co-anti-symmetry", anti, anti_witness);

    bool mult = true;
    std::string mult_witness;
    for (std::size_t i = 0; i < C.dim; ++i) {
        Tensor2 lhs = C.cobracket(map_col(C.alpha, i));
        Tensor2 rhs = tensor_power_apply(C.alpha, C.cobracket_basis(i));
        if (!(lhs == rhs)) {
            mult = false;
            mult_witness = "basis " + C.basis[i];
            break;
        }
    }
    rep.add("co-multiplicativity", mult, mult_witness);

    bool jac = true;
    std::string jac_witness;
    for (std::size_t i = 0; i < C.dim; ++i) {
        Tensor3 t = cyclic_sum(alpha_tensor_delta(C, C.cobracket_basis(i)));
        if (!t.is_zero()) {
            jac = false;
            jac_witness = "basis " + C.basis[i];
            break;
        }
    }
    rep.add("hom-co-Jacobi", jac, jac_witness);
    return rep;
}

HomLieCoalgebra make_hom_lie_coalgebra(std::size_t dim, std::vector<std::string> basis,
                                       std::vector<Scalar> d, LinearMap alpha) {
    if (basis.size() != dim || d.size() != dim * dim * dim || alpha.rows != dim ||
        alpha.cols != dim)
        throw DimensionMismatch("coalgebra data sizes inconsistent");
    HomLieCoalgebra C{dim, std::move(basis), std::move(d), std::move(alpha)};
    AxiomReport rep = check_hom_lie_coalgebra(C);
    if (!rep.all_pass()) throw ValidationError("not a Hom-Lie coalgebra: " + rep.summary());
    return C;
}

std::vector<Tensor2> compatibility_residual(const HomLieAlgebra& L, const HomLieCoalgebra& C) {
    if (L.dim != C.dim) throw DimensionMismatch("algebra/coalgebra dims differ");
    std::vector<Tensor2> out(L.dim * L.dim);
    for (std::size_t i = 0; i < L.dim; ++i)
        for (std::size_t j = 0; j < L.dim; ++j) {
            Tensor2 lhs = C.cobracket(L.bracket_basis(i, j));
            Tensor2 t1 = adjoint(L, apply_map(L.alpha, basis_vec(L.dim, i)), C.cobracket_basis(j));
            Tensor2 t2 = adjoint(L, apply_map(L.alpha, basis_vec(L.dim, j)), C.cobracket_basis(i));
            out[i * L.dim + j] = lhs - t1 + t2;
        }
    return out;
}

AxiomReport check_hom_lie_bialgebra(const HomLieBialgebra& B) {
    AxiomReport rep = check_hom_lie(B.algebra);
    AxiomReport crep = check_hom_lie_coalgebra(B.coalgebra);
    rep.items.insert(rep.items.end(), crep.items.begin(), crep.items.end());
    rep.add("shared-alpha", B.algebra.alpha == B.coalgebra.alpha);
    bool compat = true;
    std::string witness;
    auto res = compatibility_residual(B.algebra, B.coalgebra);
    for (std::size_t i = 0; i < B.dim() && compat; ++i)
        for (std::size_t j = 0; j < B.dim(); ++j) {
            if (!res[i * B.dim() + j].is_zero()) {
                compat = false;
                witness = "pair (" + B.algebra.basis[i] + "," + B.algebra.basis[j] +
                          "): " + render_tensor(B.algebra, res[i * B.dim() + j]);
                break;
            }
        }
    rep.add("compatibility", compat, witness);
    return rep;
}

HomLieBialgebra make_bialgebra(HomLieAlgebra L, HomLieCoalgebra C) {
    HomLieBialgebra B{std::move(L), std::move(C)};
    AxiomReport rep = check_hom_lie_bialgebra(B);
    if (!rep.all_pass()) throw ValidationError("not a Hom-Lie bialgebra: " + rep.summary());
    return B;
}

HomLieBialgebra bialgebra_twist(const HomLieBialgebra& B, const LinearMap& f) {
    if (!B.algebra.alpha_is_identity())
        throw NotABialgebraMorphism("twist input must be a Lie bialgebra (alpha = Id)");
    AxiomReport rep = is_lie_morphism(B.algebra, f);
    if (!rep.all_pass())
        throw NotABialgebraMorphism("not a Lie algebra morphism: " + rep.summary());
    for (std::size_t i = 0; i < B.dim(); ++i) {
        Tensor2 lhs = B.coalgebra.cobracket(map_col(f, i));
        Tensor2 rhs = tensor_power_apply(f, B.coalgebra.cobracket_basis(i));
        if (!(lhs == rhs))
            throw NotABialgebraMorphism("map does not commute with the cobracket at basis " +
                                        B.algebra.basis[i]);
    }
    HomLieAlgebra alg = yau_twist(B.algebra, f);
    std::vector<Scalar> d(B.dim() * B.dim() * B.dim());
    for (std::size_t i = 0; i < B.dim(); ++i) {
        Tensor2 t = B.coalgebra.cobracket(map_col(f, i));  // Delta_alpha = Delta o f
        for (std::size_t j = 0; j < B.dim(); ++j)
            for (std::size_t k = 0; k < B.dim(); ++k)
                d[(i * B.dim() + j) * B.dim() + k] = t.at(j, k);
    }
    HomLieCoalgebra coalg = make_hom_lie_coalgebra(B.dim(), B.coalgebra.basis, std::move(d), f);
    return make_bialgebra(std::move(alg), std::move(coalg));
}

AxiomReport is_bialgebra_morphism(const HomLieBialgebra& B, const HomLieBialgebra& B2,
                                  const LinearMap& f) {
    AxiomReport rep;
    if (B.dim() != B2.dim() || f.rows != B2.dim() || f.cols != B.dim())
        throw DimensionMismatch("morphism dimensions inconsistent");

    rep.add("alpha-compatibility", compose(B2.alpha(), f) == compose(f, B.alpha()));

    bool br = true;
    std::string br_witness;
    for (std::size_t i = 0; i < B.dim() && br; ++i)
        for (std::size_t j = 0; j < B.dim(); ++j) {
            Vec lhs = apply_map(f, B.algebra.bracket_basis(i, j));
            Vec rhs = B2.algebra.bracket(map_col(f, i), map_col(f, j));
            if (!vec_is_zero(vec_sub(lhs, rhs))) {
                br = false;
                br_witness = "[" + B.algebra.basis[i] + "," + B.algebra.basis[j] + "]";
                break;
            }
        }
    rep.add("bracket-morphism", br, br_witness);

    bool co = true;
    std::string co_witness;
    for (std::size_t i = 0; i < B.dim(); ++i) {
        Tensor2 lhs = B2.coalgebra.cobracket(map_col(f, i));
        Tensor2 rhs = tensor_power_apply(f, B.coalgebra.cobracket_basis(i));
        if (!(lhs == rhs)) {
            co = false;
            co_witness = "Delta(" + B.algebra.basis[i] + ")";
            break;
        }
    }
    rep.add("cobracket-morphism", co, co_witness);
    return rep;
}

AxiomReport verify_isomorphism(const HomLieBialgebra& B, const HomLieBialgebra& B2,
                               const LinearMap& gamma) {
    if (determinant(gamma).is_zero()) throw NotInvertible("gamma has determinant 0");
    return is_bialgebra_morphism(B, B2, gamma);
}

HomLieBialgebra dualize(const HomLieBialgebra& B) {
    std::size_t n = B.dim();
    std::vector<std::string> basis;
    basis.reserve(n);
    for (const auto& name : B.algebra.basis) basis.push_back(name + "*");
    LinearMap alpha_dual = B.alpha().transpose();

    // <[phi_i, phi_j], e_k> = <phi_i ox phi_j, Delta(e_k)>
    std::vector<Scalar> c(n * n * n);
    // <Delta(phi_i), e_j ox e_k> = <phi_i, [e_j, e_k]>
    std::vector<Scalar> d(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                c[(i * n + j) * n + k] = B.coalgebra.dc(k, i, j);
                d[(i * n + j) * n + k] = B.algebra.sc(j, k, i);
            }
    HomLieAlgebra alg = make_hom_lie(n, basis, std::move(c), alpha_dual);
    HomLieCoalgebra coalg = make_hom_lie_coalgebra(n, basis, std::move(d), alpha_dual);
    return make_bialgebra(std::move(alg), std::move(coalg));
}

Tensor2 Cochain1::apply_basis(std::size_t i) const {
    Tensor2 t(dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) t.at(j, k) = d[(i * dim + j) * dim + k];
    return t;
}

Cochain1 delta0(const HomLieAlgebra& L, const Tensor2& r) {
    if (!(tensor_power_apply(L.alpha, r) == r))
        throw NotAlphaFixed("r is not fixed by alpha ox alpha");
    Cochain1 D{L.dim, std::vector<Scalar>(L.dim * L.dim * L.dim)};
    for (std::size_t i = 0; i < L.dim; ++i) {
        Tensor2 t = adjoint(L, basis_vec(L.dim, i), r);
        for (std::size_t j = 0; j < L.dim; ++j)
            for (std::size_t k = 0; k < L.dim; ++k)
                D.d[(i * L.dim + j) * L.dim + k] = t.at(j, k);
    }
    return D;
}

std::vector<Tensor2> delta1(const HomLieAlgebra& L, const Cochain1& D) {
    if (D.dim != L.dim) throw DimensionMismatch("cochain dim differs from algebra");
    for (std::size_t i = 0; i < L.dim; ++i) {
        // D(alpha(e_i)) must equal (alpha ox alpha)(D(e_i)).
        Tensor2 lhs(L.dim);
        for (std::size_t p = 0; p < L.dim; ++p) {
            if (L.alpha.at(p, i).is_zero()) continue;
            lhs = lhs + scale(L.alpha.at(p, i), D.apply_basis(p));
        }
        if (!(lhs == tensor_power_apply(L.alpha, D.apply_basis(i))))
            throw NotACochain("map does not commute with alpha at basis index " +
                              std::to_string(i));
    }
    std::vector<Tensor2> out(L.dim * L.dim);
    for (std::size_t i = 0; i < L.dim; ++i)
        for (std::size_t j = 0; j < L.dim; ++j) {
            Vec bij = L.bracket_basis(i, j);
            Tensor2 lhs(L.dim);
            for (std::size_t p = 0; p < L.dim; ++p) {
                if (bij[p].is_zero()) continue;
                lhs = lhs + scale(bij[p], D.apply_basis(p));
            }
            Tensor2 t1 = adjoint(L, apply_map(L.alpha, basis_vec(L.dim, i)), D.apply_basis(j));
            Tensor2 t2 = adjoint(L, apply_map(L.alpha, basis_vec(L.dim, j)), D.apply_basis(i));
            out[i * L.dim + j] = lhs - t1 + t2;
        }
    return out;
}

}  // namespace homlie
