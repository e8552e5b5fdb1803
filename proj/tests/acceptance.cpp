// End-to-end verification of the headline guarantees, one line per
// criterion.  Exit status 0 iff every criterion passes.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "homlie/sl2.hpp"

using namespace homlie;

namespace {

std::mt19937 gen{987654321};

Rational rand_rational() {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    return Rational(num(gen), den(gen));
}

GaussianRational rand_gaussian_nonzero() {
    for (;;) {
        GaussianRational g{rand_rational(), rand_rational()};
        if (!g.is_zero()) return g;
    }
}

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

// Random element of the (alpha ox alpha)-fixed subspace of sl(2)_alpha(b),
// generic b: span{H ox H, X+ ox X-, X- ox X+}.
Tensor2 rand_fixed_tensor() {
    Tensor2 t(3);
    t.at(0, 0) = Scalar(GaussianRational{rand_rational(), rand_rational()});
    t.at(1, 2) = Scalar(GaussianRational{rand_rational(), rand_rational()});
    t.at(2, 1) = Scalar(GaussianRational{rand_rational(), rand_rational()});
    return t;
}

struct Branch {
    int family;
    Scalar a, b, c;
};

std::vector<Branch> catalog_branches() {
    Scalar A = Scalar::var('a'), B = Scalar::var('b'), C = Scalar::var('c');
    return {
        {1, A, B, Scalar(0)}, {1, Scalar(0), B, C},
        {2, A, B, Scalar(0)}, {2, Scalar(0), B, C},
        {3, A, B, C},
    };
}

bool criterion1(std::string& detail) {
    HomLieAlgebra L = make_sl2();
    HomLieBialgebra B = sl2_bialgebra();
    for (const Vec& res : hom_jacobi_residual(L))
        if (!vec_is_zero(res)) return false;
    for (const Tensor2& res : compatibility_residual(B.algebra, B.coalgebra))
        if (!res.is_zero()) return false;
    if (!chybe_residual(L, standard_r()).is_zero()) return false;
    detail = "Jacobi, compatibility and CYBE residuals all zero";
    return true;
}

bool criterion2(std::string& detail) {
    HomLieAlgebra sl2 = make_sl2();
    Tensor2 r = standard_r();
    int checked = 0;
    for (const Branch& br : catalog_branches()) {
        Sl2Endo e = endo(br.family, br.a, br.b, br.c);
        HomLieAlgebra twisted = yau_twist(sl2, e.matrix);
        for (int n = 0; n <= 4; ++n) {
            Tensor2 rn = twisted_solution(sl2, e.matrix, r, n, /*check=*/false);
            if (!chybe_residual(twisted, rn).is_zero()) {
                detail = "family " + std::to_string(br.family) + ", n=" + std::to_string(n);
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " symbolic branch/n combinations";
    return true;
}

bool criterion3(std::string& detail) {
    HomLieAlgebra sl2 = make_sl2();
    Tensor2 r = standard_r();
    int checked = 0;
    for (const Branch& br : catalog_branches()) {
        Sl2Endo e = endo(br.family, br.a, br.b, br.c);
        for (int n = 0; n <= 5; ++n) {
            Tensor2 direct = twisted_solution(sl2, e.matrix, r, n, /*check=*/false);
            if (!(closed_form_twisted_r(br.family, br.a, br.b, br.c, n) == direct)) {
                detail = "family " + std::to_string(br.family) + ", n=" + std::to_string(n);
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " closed-form vs iterated values, symbolic";
    return true;
}

bool criterion4(std::string& detail) {
    Scalar b = Scalar::var('b');
    HomLieBialgebra got =
        bialgebra_twist(sl2_bialgebra(), diag3(Scalar(1), b, b.inverse()));
    HomLieBialgebra want = sl2_alpha_bialgebra(b);
    if (got.algebra.c != want.algebra.c) return false;
    if (got.coalgebra.d != want.coalgebra.d) return false;
    if (!(got.algebra.alpha == want.algebra.alpha)) return false;
    detail = "diagonal twist reproduces the twisted constants, symbolic in b";
    return true;
}

bool criterion5(std::string& detail) {
    Scalar b = Scalar::var('b');
    HomLieBialgebra D = sl2_alpha_dual(b);
    // Expected dual constants on phi = H*, psi+- = X+-*.
    if (!(D.algebra.sc(1, 0, 1) == b * Scalar(Rational(1, 2)))) return false;
    if (!(D.algebra.sc(0, 1, 1) == -b * Scalar(Rational(1, 2)))) return false;
    if (!(D.algebra.sc(2, 0, 2) == b.inverse() * Scalar(Rational(1, 2)))) return false;
    if (!D.algebra.sc(1, 2, 0).is_zero()) return false;
    if (!(D.coalgebra.cobracket_basis(0) == sl2_abs(1, 2))) return false;
    if (!(D.coalgebra.cobracket_basis(1) == scale(Scalar(2) * b, sl2_abs(0, 1)))) return false;
    if (!(D.coalgebra.cobracket_basis(2) ==
          scale(Scalar(-2) * b.inverse(), sl2_abs(0, 2))))
        return false;
    if (!check_hom_lie_bialgebra(D).all_pass()) return false;

    HomLieBialgebra B = sl2_alpha_bialgebra(b);
    HomLieBialgebra DD = dualize(dualize(B));
    if (DD.algebra.c != B.algebra.c || DD.coalgebra.d != B.coalgebra.d) return false;
    detail = "dual constants match and double dual is the identity, symbolic in b";
    return true;
}

bool criterion6(std::string& detail) {
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        HomLieBialgebra B = sl2_alpha_bialgebra(Scalar(rand_gaussian_nonzero()));
        Cochain1 D = delta0(B.algebra, rand_fixed_tensor());
        for (const Tensor2& res : delta1(B.algebra, D))
            if (!res.is_zero()) return false;
        ++checked;
    }
    HomLieAlgebra ab{3, {"e1", "e2", "e3"}, std::vector<Scalar>(27),
                     LinearMap::identity(3)};
    for (int trial = 0; trial < 20; ++trial) {
        Tensor2 r(3);
        for (auto& s : r.c) s = Scalar(GaussianRational{rand_rational(), rand_rational()});
        Cochain1 D = delta0(ab, r);
        for (const Tensor2& res : delta1(ab, D))
            if (!res.is_zero()) return false;
        ++checked;
    }
    detail = std::to_string(checked) + " randomized coboundaries annihilated";
    return true;
}

bool criterion7(std::string& detail) {
    int corpus = 0, all_true = 0, all_false = 0;
    auto probe = [&](const CoboundaryStructure& cb) -> bool {
        QuasiCharacterizations q = quasi_characterizations(cb);
        if (!q.all_equal()) return false;
        ++corpus;
        (q.chybe ? all_true : all_false)++;
        return true;
    };
    for (int trial = 0; trial < 20; ++trial) {
        Scalar b = Scalar(rand_gaussian_nonzero());
        if (!probe(make_coboundary(sl2_alpha_bialgebra(b), standard_r()))) return false;
    }
    // Skew r failing the classical equation but passing the coboundary
    // hypothesis: every nonzero multiple of |X+ ox X-| except -1.
    for (int trial = 0; trial < 20; ++trial) {
        Scalar b = Scalar(rand_gaussian_nonzero());
        std::uniform_int_distribution<long> lam(2, 9);
        Tensor2 t = scale(Scalar(lam(gen)), sl2_abs(1, 2));
        HomLieAlgebra L = sl2_alpha_bialgebra(b).algebra;
        CoboundaryStructure cb = build_coboundary(L, t);
        QuasiCharacterizations q = quasi_characterizations(cb);
        if (!q.all_equal() || q.chybe) return false;
        ++corpus;
        ++all_false;
    }
    for (int trial = 0; trial < 10; ++trial) {
        Scalar b = Scalar(rand_gaussian_nonzero());
        HomLieAlgebra L = sl2_alpha_bialgebra(b).algebra;
        if (!probe(build_coboundary(L, Tensor2(3)))) return false;
    }
    std::ostringstream os;
    os << corpus << " structures (" << all_true << " all-true, " << all_false
       << " all-false), seven booleans agree on each";
    detail = os.str();
    return corpus >= 50 && all_false > 0;
}

bool criterion8(std::string& detail) {
    int checked = 0;
    // Adjoint cocycle identity on fixed tensors.
    for (int trial = 0; trial < 60; ++trial) {
        HomLieBialgebra B = sl2_alpha_bialgebra(Scalar(rand_gaussian_nonzero()));
        const HomLieAlgebra& L = B.algebra;
        Tensor2 t = rand_fixed_tensor();
        for (std::size_t x = 0; x < 3; ++x)
            for (std::size_t y = 0; y < 3; ++y) {
                Vec ex = basis_vec(3, x), ey = basis_vec(3, y);
                Tensor2 lhs = adjoint(L, L.bracket(ex, ey), t);
                Tensor2 rhs = adjoint(L, apply_map(L.alpha, ex), adjoint(L, ey, t)) -
                              adjoint(L, apply_map(L.alpha, ey), adjoint(L, ex, t));
                if (!(lhs == rhs)) return false;
            }
        ++checked;
    }
    // Cyclic identity for anti-symmetric fixed tensors.
    for (int trial = 0; trial < 60; ++trial) {
        HomLieBialgebra B = sl2_alpha_bialgebra(Scalar(rand_gaussian_nonzero()));
        const HomLieAlgebra& L = B.algebra;
        Tensor2 t = scale(Scalar(GaussianRational{rand_rational(), rand_rational()}),
                          sl2_abs(1, 2));
        for (std::size_t x = 0; x < 3; ++x) {
            Tensor2 adx = adjoint(L, basis_vec(3, x), t);
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
            if (!(cyclic_sum(lhs) == rhs)) return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " randomized instances of both identities";
    return true;
}

bool criterion9(std::string& detail) {
    Scalar b = Scalar::var('b');
    HomLieBialgebra B = sl2_alpha_bialgebra(b);
    if (perturb(B, Tensor2(3)).coalgebra.d != B.coalgebra.d) return false;

    // Scan multiples of the skew invariant direction for the strengthened
    // perturbation hypothesis, symbolically in b.
    std::vector<Rational> scan = {Rational(1),      Rational(-1),     Rational(1, 2),
                                  Rational(-1, 2),  Rational(1, 4),   Rational(-1, 4)};
    QuasiTriangularStructure qt = make_quasi_triangular(B, standard_r());
    std::vector<std::string> admissible;
    for (const Rational& lam : scan) {
        Tensor2 t = scale(Scalar(lam), sl2_abs(1, 2));
        try {
            QuasiTriangularStructure out = perturb_quasi(qt, t);
            if (!check_quasi_triangular(out.cb.b, out.cb.r).all_pass()) return false;
            if (!check_hom_lie_bialgebra(perturb(B, t)).all_pass()) return false;
            admissible.push_back(Scalar(lam).str());
        } catch (const Obstruction&) {
            // Inadmissible multiple; part of the scan result.
        }
    }
    if (admissible.empty()) {
        detail = "scan over {+-1, +-1/2, +-1/4} |X+ ox X-|: no admissible multiple";
        return true;  // certified-empty is acceptable, but must be reported
    }
    std::string list;
    for (const auto& s : admissible) list += (list.empty() ? "" : ", ") + s;
    detail = "scan over {+-1, +-1/2, +-1/4} |X+ ox X-|: admissible multiples {" + list +
             "}, outputs pass the full suites (symbolic in b)";
    return true;
}

bool criterion10(std::string& detail) {
    HomLieBialgebra cl = sl2_bialgebra();
    // Numeric representatives of each branch; only the diagonal rescaling
    // (family 1, a=c=0) should preserve the cobracket.
    struct Cand {
        const char* name;
        Sl2Endo e;
        bool expect;
    };
    std::vector<Cand> cands = {
        {"1(a=1,b=2,c=0)", endo(1, Scalar(1), Scalar(2), Scalar(0)), false},
        {"1(a=0,b=2,c=1)", endo(1, Scalar(0), Scalar(2), Scalar(1)), false},
        {"1(a=0,b=2,c=0)", endo(1, Scalar(0), Scalar(2), Scalar(0)), true},
        {"2(a=1,b=2,c=0)", endo(2, Scalar(1), Scalar(2), Scalar(0)), false},
        {"2(a=0,b=2,c=1)", endo(2, Scalar(0), Scalar(2), Scalar(1)), false},
        {"2(a=0,b=2,c=0)", endo(2, Scalar(0), Scalar(2), Scalar(0)), false},
        {"3(a=1,b=1,c=2)", endo(3, Scalar(1), Scalar(1), Scalar(2)), false},
    };
    for (const Cand& c : cands) {
        bool got = is_bialgebra_morphism(cl, cl, c.e.matrix).all_pass();
        if (got != c.expect) {
            detail = std::string("family ") + c.name + " unexpectedly " +
                     (got ? "passed" : "failed");
            return false;
        }
    }

    int agreements = 0;
    for (int trial = 0; trial < 20; ++trial) {
        Scalar b = Scalar(rand_gaussian_nonzero());
        Scalar b2 = (trial % 4 == 0) ? b : Scalar(rand_gaussian_nonzero());
        HomLieBialgebra B1 = sl2_alpha_bialgebra(b);
        HomLieBialgebra B2 = sl2_alpha_bialgebra(b2);
        // Diagonal candidates: the identity, a generic rescaling of X+-,
        // and the bracket-derived scale b/b' in the H slot.
        std::vector<LinearMap> cands2 = {
            LinearMap::identity(3),
            diag3(Scalar(1), Scalar(rand_gaussian_nonzero()), Scalar(rand_gaussian_nonzero())),
            diag3(b * b2.inverse(), Scalar(1), b * b2.inverse()),
        };
        bool found = false;
        for (const LinearMap& g : cands2) {
            try {
                if (verify_isomorphism(B1, B2, g).all_pass()) found = true;
            } catch (const NotInvertible&) {
            }
        }
        if (found != sl2_iso_classifier(b, b2)) return false;
        ++agreements;
    }
    detail = "morphism census matches; classifier agreed on " +
             std::to_string(agreements) + " random (b,b') pairs";
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<bool(std::string&)> run;
    };
    std::vector<Criterion> criteria = {
        {"sl(2) sanity residuals", criterion1},
        {"twisted r solves the twisted equation (n<=4, symbolic)", criterion2},
        {"closed forms equal direct iteration (n<=5, symbolic)", criterion3},
        {"diagonal twist reproduces the twisted bialgebra", criterion4},
        {"dual constants and double dual", criterion5},
        {"composite of the coboundary differentials vanishes", criterion6},
        {"seven quasi-triangularity characterizations agree", criterion7},
        {"adjoint cocycle and cyclic identities", criterion8},
        {"perturbation pipeline and admissibility scan", criterion9},
        {"morphism census and isomorphism classifier", criterion10},
    };
    bool ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool pass = false;
        try {
            pass = criteria[i].run(detail);
        } catch (const Error& e) {
            detail = std::string("unexpected error: ") + e.what();
        }
        ok = ok && pass;
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << criteria[i].name;
        if (!detail.empty()) std::cout << " — " << detail;
        std::cout << "\n";
    }
    return ok ? 0 : 1;
}
