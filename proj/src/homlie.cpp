#include "homlie/homlie.hpp"

namespace homlie {

Vec HomLieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    Vec v(dim);
    for (std::size_t k = 0; k < dim; ++k) v[k] = sc(i, j, k);
    return v;
}

Vec HomLieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim || y.size() != dim)
        throw DimensionMismatch("bracket operand dimension differs from algebra");
    Vec v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Scalar m = x[i] * y[j];
            for (std::size_t k = 0; k < dim; ++k) v[k] += m * sc(i, j, k);
        }
    }
    return v;
}

namespace {

std::string render_terms(const std::vector<std::pair<Scalar, std::string>>& terms) {
    std::string out;
    for (const auto& [k, name] : terms) {
        if (k.is_zero()) continue;
        out += out.empty() ? "" : " ";
        out += "+" + k.str() + " " + name;
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string render_vec(const HomLieAlgebra& L, const Vec& v) {
    std::vector<std::pair<Scalar, std::string>> terms;
    for (std::size_t i = 0; i < L.dim; ++i) terms.emplace_back(v[i], L.basis[i]);
    return render_terms(terms);
}

std::string render_tensor(const HomLieAlgebra& L, const Tensor2& t) {
    std::vector<std::pair<Scalar, std::string>> terms;
    for (std::size_t i = 0; i < L.dim; ++i)
        for (std::size_t j = 0; j < L.dim; ++j)
            terms.emplace_back(t.at(i, j), L.basis[i] + "(x)" + L.basis[j]);
    return render_terms(terms);
}

std::string render_tensor(const HomLieAlgebra& L, const Tensor3& t) {
    std::vector<std::pair<Scalar, std::string>> terms;
    for (std::size_t i = 0; i < L.dim; ++i)
        for (std::size_t j = 0; j < L.dim; ++j)
            for (std::size_t k = 0; k < L.dim; ++k)
                terms.emplace_back(t.at(i, j, k),
                                   L.basis[i] + "(x)" + L.basis[j] + "(x)" + L.basis[k]);
    return render_terms(terms);
}

AxiomReport check_hom_lie(const HomLieAlgebra& L) {
    AxiomReport rep;
    bool anti = true;
    std::string anti_witness;
    for (std::size_t i = 0; i < L.dim && anti; ++i)
        for (std::size_t j = 0; j < L.dim && anti; ++j)
            for (std::size_t k = 0; k < L.dim; ++k) {
                Scalar res = L.sc(i, j, k) + L.sc(j, i, k);
                if (!res.is_zero()) {
                    anti = false;
                    anti_witness = "pair (" + L.basis[i] + "," + L.basis[j] + "), coefficient of " +
                                   L.basis[k] + ": " + res.str();
                    break;
                }
            }
    rep.add("anti-symmetry", anti, anti_witness);

    bool mult = true;
    std::string mult_witness;
    for (std::size_t i = 0; i < L.dim && mult; ++i)
        for (std::size_t j = 0; j < L.dim; ++j) {
            Vec lhs = apply_map(L.alpha, L.bracket_basis(i, j));
            Vec ai(L.dim), aj(L.dim);
            for (std::size_t k = 0; k < L.dim; ++k) {
                ai[k] = L.alpha.at(k, i);
                aj[k] = L.alpha.at(k, j);
            }
            Vec rhs = L.bracket(ai, aj);
            Vec res = vec_sub(lhs, rhs);
            if (!vec_is_zero(res)) {
                mult = false;
                mult_witness = "pair (" + L.basis[i] + "," + L.basis[j] + "): " + render_vec(L, res);
                break;
            }
        }
    rep.add("multiplicativity", mult, mult_witness);

    bool jac = true;
    std::string jac_witness;
    auto res = hom_jacobi_residual(L);
    for (std::size_t i = 0; i < L.dim && jac; ++i)
        for (std::size_t j = 0; j < L.dim && jac; ++j)
            for (std::size_t k = 0; k < L.dim; ++k) {
                const Vec& v = res[(i * L.dim + j) * L.dim + k];
                if (!vec_is_zero(v)) {
                    jac = false;
                    jac_witness = "triple (" + L.basis[i] + "," + L.basis[j] + "," + L.basis[k] +
                                  "): " + render_vec(L, v);
                    break;
                }
            }
    rep.add("hom-Jacobi", jac, jac_witness);
    return rep;
}

HomLieAlgebra make_hom_lie(std::size_t dim, std::vector<std::string> basis,
                           std::vector<Scalar> c, LinearMap alpha) {
    if (basis.size() != dim || c.size() != dim * dim * dim || alpha.rows != dim ||
        alpha.cols != dim)
        throw DimensionMismatch("algebra data sizes inconsistent");
    HomLieAlgebra L{dim, std::move(basis), std::move(c), std::move(alpha)};
    AxiomReport rep = check_hom_lie(L);
    if (!rep.all_pass()) throw ValidationError("not a Hom-Lie algebra: " + rep.summary());
    return L;
}

std::vector<Vec> hom_jacobi_residual(const HomLieAlgebra& L) {
    std::vector<Vec> out(L.dim * L.dim * L.dim);
    auto alpha_col = [&](std::size_t j) {
        Vec v(L.dim);
        for (std::size_t k = 0; k < L.dim; ++k) v[k] = L.alpha.at(k, j);
        return v;
    };
    std::vector<Vec> acols(L.dim);
    for (std::size_t j = 0; j < L.dim; ++j) acols[j] = alpha_col(j);
    for (std::size_t i = 0; i < L.dim; ++i)
        for (std::size_t j = 0; j < L.dim; ++j)
            for (std::size_t k = 0; k < L.dim; ++k) {
                Vec t1 = L.bracket(L.bracket_basis(i, j), acols[k]);
                Vec t2 = L.bracket(L.bracket_basis(k, i), acols[j]);
                Vec t3 = L.bracket(L.bracket_basis(j, k), acols[i]);
                out[(i * L.dim + j) * L.dim + k] = vec_add(vec_add(t1, t2), t3);
            }
    return out;
}

AxiomReport is_lie_morphism(const HomLieAlgebra& L, const LinearMap& f) {
    AxiomReport rep;
    if (!L.alpha_is_identity()) {
        rep.add("lie-algebra-input", false, "input algebra has alpha != Id");
        return rep;
    }
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < L.dim && ok; ++i)
        for (std::size_t j = 0; j < L.dim; ++j) {
            Vec lhs = apply_map(f, L.bracket_basis(i, j));
            Vec fi(L.dim), fj(L.dim);
            for (std::size_t k = 0; k < L.dim; ++k) {
                fi[k] = f.at(k, i);
                fj[k] = f.at(k, j);
            }
            Vec res = vec_sub(lhs, L.bracket(fi, fj));
            if (!vec_is_zero(res)) {
                ok = false;
                witness = "[" + L.basis[i] + "," + L.basis[j] + "]: " + render_vec(L, res);
                break;
            }
        }
    rep.add("bracket-morphism", ok, witness);
    return rep;
}

HomLieAlgebra yau_twist(const HomLieAlgebra& L, const LinearMap& f) {
    AxiomReport rep = is_lie_morphism(L, f);
    if (!rep.all_pass()) throw NotAMorphism("twist map is not a Lie algebra morphism: " + rep.summary());
    std::vector<Scalar> c(L.dim * L.dim * L.dim);
    for (std::size_t i = 0; i < L.dim; ++i)
        for (std::size_t j = 0; j < L.dim; ++j) {
            Vec v = apply_map(f, L.bracket_basis(i, j));
            for (std::size_t k = 0; k < L.dim; ++k) c[(i * L.dim + j) * L.dim + k] = v[k];
        }
    return make_hom_lie(L.dim, L.basis, std::move(c), f);
}

Tensor2 adjoint(const HomLieAlgebra& L, const Vec& x, const Tensor2& t) {
    if (t.dim != L.dim) throw DimensionMismatch("tensor dim differs from algebra");
    Tensor2 out(L.dim);
    for (std::size_t p = 0; p < L.dim; ++p)
        for (std::size_t q = 0; q < L.dim; ++q) {
            if (t.at(p, q).is_zero()) continue;
            Vec ep(L.dim), eq(L.dim);
            ep[p] = Scalar(1);
            eq[q] = Scalar(1);
            Vec bp = L.bracket(x, ep);
            Vec bq = L.bracket(x, eq);
            for (std::size_t m = 0; m < L.dim; ++m)
                for (std::size_t n = 0; n < L.dim; ++n)
                    out.at(m, n) += t.at(p, q) *
                                    (bp[m] * L.alpha.at(n, q) + L.alpha.at(m, p) * bq[n]);
        }
    return out;
}

Tensor3 adjoint(const HomLieAlgebra& L, const Vec& x, const Tensor3& t) {
    if (t.dim != L.dim) throw DimensionMismatch("tensor dim differs from algebra");
    Tensor3 out(L.dim);
    std::vector<Vec> bcol(L.dim);
    for (std::size_t p = 0; p < L.dim; ++p) {
        Vec ep(L.dim);
        ep[p] = Scalar(1);
        bcol[p] = L.bracket(x, ep);
    }
    const LinearMap& A = L.alpha;
    for (std::size_t p = 0; p < L.dim; ++p)
        for (std::size_t q = 0; q < L.dim; ++q)
            for (std::size_t s = 0; s < L.dim; ++s) {
                const Scalar& k = t.at(p, q, s);
                if (k.is_zero()) continue;
                for (std::size_t m = 0; m < L.dim; ++m)
                    for (std::size_t n = 0; n < L.dim; ++n)
                        for (std::size_t u = 0; u < L.dim; ++u)
                            out.at(m, n, u) +=
                                k * (bcol[p][m] * A.at(n, q) * A.at(u, s) +
                                     A.at(m, p) * bcol[q][n] * A.at(u, s) +
                                     A.at(m, p) * A.at(n, q) * bcol[s][u]);
            }
    return out;
}

namespace {

// Folds the polynomial denominator of x into the running lcm.
void fold_den(MultivarPoly& acc, const Scalar& x) {
    if (x.is_numeric()) return;
    const MultivarPoly& d = x.function().den();
    if (d.is_constant()) return;
    MultivarPoly g = MultivarPoly::gcd(acc, d);
    acc = acc * *d.divide_exact(g);
}

// acc += x*y without materializing the product.
void add_mul(MultivarPoly& acc, const MultivarPoly& x, const MultivarPoly& y) {
    for (const auto& [ex, kx] : x.terms())
        for (const auto& [ey, ky] : y.terms())
            acc.add_term({ex[0] + ey[0], ex[1] + ey[1], ex[2] + ey[2]}, kx * ky);
}

MultivarPoly mul(const MultivarPoly& x, const MultivarPoly& y) {
    MultivarPoly r;
    add_mul(r, x, y);
    return r;
}

// x scaled by D with x's denominator (an exact divisor of D) cleared.
MultivarPoly lift(const Scalar& x, const MultivarPoly& D) {
    if (x.is_zero()) return MultivarPoly();
    if (x.is_numeric()) return mul(MultivarPoly(x.numeric()), D);
    const RationalFunction& f = x.function();
    return mul(f.num(), *D.divide_exact(f.den()));
}

// Symbolic-input path.  Every term accumulated is a product of one bracket
// constant, one r entry, one s entry, and two alpha entries, so scaling each
// of those four input families by the lcm of its polynomial denominators
// multiplies all three brackets by one common factor.  The sums then run in
// plain polynomial arithmetic — fused multiply-adds into the accumulators,
// with partial products hoisted out of the inner loops — and the factor is
// divided back out once per output entry.
MixedBrackets mixed_brackets_symbolic(const HomLieAlgebra& L, const Tensor2& r,
                                      const Tensor2& s) {
    const std::size_t d = L.dim;
    MultivarPoly dc(1), da(1), dr(1), ds(1);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            fold_den(dr, r.at(i, j));
            fold_den(ds, s.at(i, j));
            fold_den(da, L.alpha.at(i, j));
            for (std::size_t k = 0; k < d; ++k) fold_den(dc, L.sc(i, j, k));
        }

    std::vector<MultivarPoly> rp(d * d), sp(d * d), ap(d * d), cp(d * d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            rp[i * d + j] = lift(r.at(i, j), dr);
            sp[i * d + j] = lift(s.at(i, j), ds);
            ap[i * d + j] = lift(L.alpha.at(i, j), da);
            for (std::size_t k = 0; k < d; ++k)
                cp[(i * d + j) * d + k] = lift(L.sc(i, j, k), dc);
        }

    std::vector<MultivarPoly> o1(d * d * d), o2(d * d * d), o3(d * d * d);
    auto at3 = [d](std::vector<MultivarPoly>& t, std::size_t m, std::size_t n,
                   std::size_t w) -> MultivarPoly& { return t[(m * d + n) * d + w]; };
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
            if (rp[p * d + q].is_zero()) continue;
            for (std::size_t u = 0; u < d; ++u)
                for (std::size_t v = 0; v < d; ++v) {
                    if (sp[u * d + v].is_zero()) continue;
                    MultivarPoly k = mul(rp[p * d + q], sp[u * d + v]);
                    // [r12,s13] = [r1,s1] ox alpha(r2) ox alpha(s2)
                    for (std::size_t m = 0; m < d; ++m) {
                        if (cp[(p * d + u) * d + m].is_zero()) continue;
                        MultivarPoly t1 = mul(k, cp[(p * d + u) * d + m]);
                        for (std::size_t n = 0; n < d; ++n) {
                            if (ap[n * d + q].is_zero()) continue;
                            MultivarPoly t2 = mul(t1, ap[n * d + q]);
                            for (std::size_t w = 0; w < d; ++w)
                                if (!ap[w * d + v].is_zero())
                                    add_mul(at3(o1, m, n, w), t2, ap[w * d + v]);
                        }
                    }
                    for (std::size_t m = 0; m < d; ++m) {
                        if (ap[m * d + p].is_zero()) continue;
                        MultivarPoly t1 = mul(k, ap[m * d + p]);
                        // [r12,s23] = alpha(r1) ox [r2,s1] ox alpha(s2)
                        for (std::size_t n = 0; n < d; ++n) {
                            if (cp[(q * d + u) * d + n].is_zero()) continue;
                            MultivarPoly t2 = mul(t1, cp[(q * d + u) * d + n]);
                            for (std::size_t w = 0; w < d; ++w)
                                if (!ap[w * d + v].is_zero())
                                    add_mul(at3(o2, m, n, w), t2, ap[w * d + v]);
                        }
                        // [r13,s23] = alpha(r1) ox alpha(s1) ox [r2,s2]
                        for (std::size_t n = 0; n < d; ++n) {
                            if (ap[n * d + u].is_zero()) continue;
                            MultivarPoly t2 = mul(t1, ap[n * d + u]);
                            for (std::size_t w = 0; w < d; ++w)
                                if (!cp[(q * d + v) * d + w].is_zero())
                                    add_mul(at3(o3, m, n, w), t2, cp[(q * d + v) * d + w]);
                        }
                    }
                }
        }

    MultivarPoly factor = dc * dr * ds * da * da;
    MixedBrackets out{Tensor3(d), Tensor3(d), Tensor3(d)};
    for (std::size_t i = 0; i < d * d * d; ++i) {
        out.b12_13.c[i] = Scalar(RationalFunction(std::move(o1[i]), factor));
        out.b12_23.c[i] = Scalar(RationalFunction(std::move(o2[i]), factor));
        out.b13_23.c[i] = Scalar(RationalFunction(std::move(o3[i]), factor));
    }
    return out;
}

}  // namespace

MixedBrackets mixed_brackets(const HomLieAlgebra& L, const Tensor2& r, const Tensor2& s) {
    if (r.dim != L.dim || s.dim != L.dim)
        throw DimensionMismatch("tensor dim differs from algebra");
    bool symbolic = false;
    for (const Scalar& x : r.c) symbolic = symbolic || !x.is_numeric();
    for (const Scalar& x : s.c) symbolic = symbolic || !x.is_numeric();
    for (const Scalar& x : L.c) symbolic = symbolic || !x.is_numeric();
    for (const Scalar& x : L.alpha.a) symbolic = symbolic || !x.is_numeric();
    if (symbolic) return mixed_brackets_symbolic(L, r, s);

    MixedBrackets out{Tensor3(L.dim), Tensor3(L.dim), Tensor3(L.dim)};
    const LinearMap& A = L.alpha;
    for (std::size_t p = 0; p < L.dim; ++p)
        for (std::size_t q = 0; q < L.dim; ++q) {
            if (r.at(p, q).is_zero()) continue;
            for (std::size_t u = 0; u < L.dim; ++u)
                for (std::size_t v = 0; v < L.dim; ++v) {
                    Scalar k = r.at(p, q) * s.at(u, v);
                    if (k.is_zero()) continue;
                    Vec bpu = L.bracket_basis(p, u);
                    Vec bqu = L.bracket_basis(q, u);
                    Vec bqv = L.bracket_basis(q, v);
                    for (std::size_t m = 0; m < L.dim; ++m)
                        for (std::size_t n = 0; n < L.dim; ++n)
                            for (std::size_t w = 0; w < L.dim; ++w) {
                                // [r12,s13] = [r1,s1] ox alpha(r2) ox alpha(s2)
                                out.b12_13.at(m, n, w) += k * bpu[m] * A.at(n, q) * A.at(w, v);
                                // [r12,s23] = alpha(r1) ox [r2,s1] ox alpha(s2)
                                out.b12_23.at(m, n, w) += k * A.at(m, p) * bqu[n] * A.at(w, v);
                                // [r13,s23] = alpha(r1) ox alpha(s1) ox [r2,s2]
                                out.b13_23.at(m, n, w) += k * A.at(m, p) * A.at(n, u) * bqv[w];
                            }
                }
        }
    return out;
}

Tensor3 mixed_chybe(const HomLieAlgebra& L, const Tensor2& r, const Tensor2& s) {
    MixedBrackets b = mixed_brackets(L, r, s);
    return b.b12_13 + b.b12_23 + b.b13_23;
}

Tensor3 chybe_residual(const HomLieAlgebra& L, const Tensor2& r) {
    return mixed_chybe(L, r, r);
}

Tensor2 twisted_solution(const HomLieAlgebra& L, const LinearMap& f, const Tensor2& r,
                         int n, bool check) {
    if (check) {
        AxiomReport rep = is_lie_morphism(L, f);
        if (!rep.all_pass())
            throw NotAMorphism("twist map is not a Lie algebra morphism: " + rep.summary());
        if (!chybe_residual(L, r).is_zero())
            throw NotAnRMatrix("r does not solve the CYBE in the untwisted algebra");
    }
    Tensor2 out = r;
    for (int s = 0; s < n; ++s) out = tensor_power_apply(f, out);
    return out;
}

LinearMap hybe_residual(const LinearMap& B, const LinearMap& alpha) {
    std::size_t d = alpha.rows;
    if (alpha.cols != d || B.rows != d * d || B.cols != d * d)
        throw DimensionMismatch("B must act on V ox V");
    LinearMap a2 = kron(alpha, alpha);
    if (!(compose(B, a2) == compose(a2, B)))
        throw NotAlphaCommuting("B does not commute with alpha ox alpha");
    LinearMap aB = kron(alpha, B);   // alpha ox B on V ox (V ox V)
    LinearMap Ba = kron(B, alpha);   // B ox alpha
    LinearMap lhs = compose(aB, compose(Ba, aB));
    LinearMap rhs = compose(Ba, compose(aB, Ba));
    return lhs - rhs;
}

}  // namespace homlie
