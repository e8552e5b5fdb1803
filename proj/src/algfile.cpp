#include "homlie/algfile.hpp"

#include <fstream>
#include <sstream>

namespace homlie {

std::size_t AlgebraFile::basis_index(const std::string& name) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == name) return i;
    throw ValidationError("unknown basis name: " + name);
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

// Splits tokens after the ':' into ';'-separated groups.
std::vector<std::vector<std::string>> term_groups(const std::vector<std::string>& toks,
                                                  std::size_t start, int line_no) {
    if (start >= toks.size() || toks[start] != ":")
        throw ParseError("expected ':'", line_no);
    std::vector<std::vector<std::string>> groups(1);
    for (std::size_t i = start + 1; i < toks.size(); ++i) {
        if (toks[i] == ";") groups.emplace_back();
        else groups.back().push_back(toks[i]);
    }
    return groups;
}

int var_slot(const std::string& name) {
    if (name.size() == 1)
        for (int v = 0; v < kNumVars; ++v)
            if (kVarNames[v] == name[0]) return v;
    return -1;
}

}  // namespace

AlgebraFile parse_algebra_file(std::istream& in) {
    AlgebraFile f;
    bool saw_dim = false, saw_version = false;
    std::string line;
    int line_no = 0;
    auto need_basis = [&](int ln) {
        if (f.basis.empty()) throw ParseError("basis must be declared first", ln);
    };
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        try {
            if (kw == "schema_version") {
                if (toks.size() != 2) throw ParseError("schema_version takes one value", line_no);
                f.schema_version = std::stoi(toks[1]);
                if (f.schema_version != 1)
                    throw ParseError("unsupported schema_version " + toks[1], line_no);
                saw_version = true;
            } else if (kw == "dim") {
                if (toks.size() != 2) throw ParseError("dim takes one value", line_no);
                f.dim = static_cast<std::size_t>(std::stoul(toks[1]));
                if (f.dim == 0) throw ParseError("dim must be positive", line_no);
                saw_dim = true;
            } else if (kw == "basis") {
                if (!saw_dim) throw ParseError("dim must precede basis", line_no);
                f.basis.assign(toks.begin() + 1, toks.end());
                if (f.basis.size() != f.dim)
                    throw ParseError("basis has wrong number of names", line_no);
                f.bracket.assign(f.dim * f.dim * f.dim, Scalar(0));
                f.bracket_given.assign(f.dim * f.dim, false);
                f.cobracket.assign(f.dim * f.dim * f.dim, Scalar(0));
                f.alpha = LinearMap::identity(f.dim);
                f.r = std::nullopt;
                f.t = std::nullopt;
            } else if (kw == "bracket") {
                need_basis(line_no);
                if (toks.size() < 4) throw ParseError("malformed bracket line", line_no);
                std::size_t i = f.basis_index(toks[1]);
                std::size_t j = f.basis_index(toks[2]);
                if (f.bracket_given[i * f.dim + j])
                    throw ParseError("duplicate bracket entry (" + toks[1] + "," + toks[2] + ")",
                                     line_no);
                f.bracket_given[i * f.dim + j] = true;
                for (auto& g : term_groups(toks, 3, line_no)) {
                    if (g.empty()) continue;  // explicit zero: `bracket H H : `
                    if (g.size() != 2) throw ParseError("bracket term needs coeff and name", line_no);
                    f.bracket[(i * f.dim + j) * f.dim + f.basis_index(g[1])] += parse_scalar(g[0]);
                }
            } else if (kw == "cobracket") {
                need_basis(line_no);
                if (toks.size() < 3) throw ParseError("malformed cobracket line", line_no);
                std::size_t i = f.basis_index(toks[1]);
                f.has_cobracket = true;
                for (auto& g : term_groups(toks, 2, line_no)) {
                    if (g.empty()) continue;
                    if (g.size() != 3)
                        throw ParseError("cobracket term needs coeff and two names", line_no);
                    std::size_t j = f.basis_index(g[1]), k = f.basis_index(g[2]);
                    f.cobracket[(i * f.dim + j) * f.dim + k] += parse_scalar(g[0]);
                }
            } else if (kw == "alpha") {
                need_basis(line_no);
                if (toks.size() < 3) throw ParseError("malformed alpha line", line_no);
                std::size_t j = f.basis_index(toks[1]);
                if (!f.has_alpha) {
                    // First alpha line replaces the identity default.
                    f.alpha = LinearMap(f.dim, f.dim);
                    f.has_alpha = true;
                }
                for (auto& g : term_groups(toks, 2, line_no)) {
                    if (g.empty()) continue;
                    if (g.size() != 2) throw ParseError("alpha term needs coeff and name", line_no);
                    f.alpha.at(f.basis_index(g[1]), j) += parse_scalar(g[0]);
                }
            } else if (kw == "r" || kw == "t") {
                need_basis(line_no);
                if (toks.size() != 5 || toks[3] != ":")
                    throw ParseError("malformed " + kw + " line (want: " + kw +
                                         " <i> <j> : <coeff>)",
                                     line_no);
                std::size_t i = f.basis_index(toks[1]);
                std::size_t j = f.basis_index(toks[2]);
                auto& slot = (kw == "r") ? f.r : f.t;
                if (!slot) slot = Tensor2(f.dim);
                slot->at(i, j) += parse_scalar(toks[4]);
            } else if (kw == "param") {
                if (toks.size() != 4 || toks[2] != "=")
                    throw ParseError("malformed param line (want: param <var> = <value>)", line_no);
                int v = var_slot(toks[1]);
                if (v < 0) throw ParseError("unknown parameter " + toks[1], line_no);
                Scalar val = parse_scalar(toks[3]);
                if (!val.is_numeric())
                    throw ParseError("param value must be numeric", line_no);
                f.params[v] = val.numeric();
            } else {
                throw ParseError("unknown keyword " + kw, line_no);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    if (!saw_version) throw ParseError("missing schema_version", line_no);
    if (!saw_dim || f.basis.empty()) throw ParseError("missing dim/basis", line_no);
    return f;
}

AlgebraFile parse_algebra_text(const std::string& text) {
    std::istringstream is(text);
    return parse_algebra_file(is);
}

AlgebraFile load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file " + path);
    return parse_algebra_file(in);
}

void apply_params(AlgebraFile& f, const Bindings& extra) {
    Bindings b = f.params;
    for (int v = 0; v < kNumVars; ++v)
        if (extra[v]) b[v] = extra[v];
    bool any = false;
    for (int v = 0; v < kNumVars; ++v) any = any || b[v].has_value();
    if (!any) return;
    auto subst = [&](Scalar& s) { s = s.substitute(b); };
    for (auto& s : f.bracket) subst(s);
    for (auto& s : f.cobracket) subst(s);
    for (auto& s : f.alpha.a) subst(s);
    if (f.r)
        for (auto& s : f.r->c) subst(s);
    if (f.t)
        for (auto& s : f.t->c) subst(s);
    f.params = b;
}

HomLieAlgebra to_algebra(const AlgebraFile& f) {
    for (std::size_t i = 0; i < f.dim; ++i)
        for (std::size_t j = 0; j < f.dim; ++j) {
            if (i == j) continue;
            if (f.bracket_given[i * f.dim + j] && !f.bracket_given[j * f.dim + i])
                throw ValidationError("bracket (" + f.basis[i] + "," + f.basis[j] +
                                      ") is missing its anti-symmetric mirror (" + f.basis[j] +
                                      "," + f.basis[i] + ")");
        }
    return HomLieAlgebra{f.dim, f.basis, f.bracket, f.alpha};
}

HomLieCoalgebra to_coalgebra(const AlgebraFile& f) {
    if (!f.has_cobracket) throw ValidationError("file has no cobracket");
    return HomLieCoalgebra{f.dim, f.basis, f.cobracket, f.alpha};
}

namespace {

void emit_tensor_lines(std::ostringstream& os, const char* kw,
                       const std::vector<std::string>& basis, const Tensor2& t) {
    for (std::size_t i = 0; i < t.dim; ++i)
        for (std::size_t j = 0; j < t.dim; ++j)
            if (!t.at(i, j).is_zero())
                os << kw << " " << basis[i] << " " << basis[j] << " : " << t.at(i, j).str()
                   << "\n";
}

}  // namespace

std::string emit_algebra_file(const AlgebraFile& f) {
    std::ostringstream os;
    os << "schema_version " << f.schema_version << "\n";
    os << "dim " << f.dim << "\n";
    os << "basis";
    for (const auto& name : f.basis) os << " " << name;
    os << "\n";
    for (int v = 0; v < kNumVars; ++v)
        if (f.params[v])
            os << "param " << kVarNames[v] << " = " << Scalar(*f.params[v]).str() << "\n";
    for (std::size_t i = 0; i < f.dim; ++i)
        for (std::size_t j = 0; j < f.dim; ++j) {
            bool nonzero = false;
            for (std::size_t k = 0; k < f.dim; ++k)
                nonzero = nonzero || !f.bracket[(i * f.dim + j) * f.dim + k].is_zero();
            if (!nonzero) continue;
            os << "bracket " << f.basis[i] << " " << f.basis[j] << " :";
            bool first = true;
            for (std::size_t k = 0; k < f.dim; ++k) {
                const Scalar& s = f.bracket[(i * f.dim + j) * f.dim + k];
                if (s.is_zero()) continue;
                os << (first ? " " : " ; ") << s.str() << " " << f.basis[k];
                first = false;
            }
            os << "\n";
        }
    if (f.has_alpha)
        for (std::size_t j = 0; j < f.dim; ++j) {
            os << "alpha " << f.basis[j] << " :";
            bool first = true;
            for (std::size_t i = 0; i < f.dim; ++i) {
                if (f.alpha.at(i, j).is_zero()) continue;
                os << (first ? " " : " ; ") << f.alpha.at(i, j).str() << " " << f.basis[i];
                first = false;
            }
            os << "\n";
        }
    if (f.has_cobracket)
        for (std::size_t i = 0; i < f.dim; ++i) {
            bool nonzero = false;
            for (std::size_t jk = 0; jk < f.dim * f.dim; ++jk)
                nonzero = nonzero || !f.cobracket[i * f.dim * f.dim + jk].is_zero();
            if (!nonzero) continue;
            os << "cobracket " << f.basis[i] << " :";
            bool first = true;
            for (std::size_t j = 0; j < f.dim; ++j)
                for (std::size_t k = 0; k < f.dim; ++k) {
                    const Scalar& s = f.cobracket[(i * f.dim + j) * f.dim + k];
                    if (s.is_zero()) continue;
                    os << (first ? " " : " ; ") << s.str() << " " << f.basis[j] << " "
                       << f.basis[k];
                    first = false;
                }
            os << "\n";
        }
    if (f.r) emit_tensor_lines(os, "r", f.basis, *f.r);
    if (f.t) emit_tensor_lines(os, "t", f.basis, *f.t);
    return os.str();
}

AlgebraFile from_parts(const HomLieAlgebra& L, const HomLieCoalgebra* C,
                       const Tensor2* r, const Tensor2* t) {
    AlgebraFile f;
    f.dim = L.dim;
    f.basis = L.basis;
    f.bracket = L.c;
    f.bracket_given.assign(L.dim * L.dim, false);
    for (std::size_t i = 0; i < L.dim; ++i)
        for (std::size_t j = 0; j < L.dim; ++j) {
            bool nonzero = false;
            for (std::size_t k = 0; k < L.dim; ++k)
                nonzero = nonzero || !L.sc(i, j, k).is_zero();
            if (nonzero) {
                f.bracket_given[i * L.dim + j] = true;
                f.bracket_given[j * L.dim + i] = true;
            }
        }
    f.alpha = L.alpha;
    f.has_alpha = true;
    if (C) {
        f.has_cobracket = true;
        f.cobracket = C->d;
    } else {
        f.cobracket.assign(L.dim * L.dim * L.dim, Scalar(0));
    }
    if (r) f.r = *r;
    if (t) f.t = *t;
    return f;
}

}  // namespace homlie
