// Command-line front end: parse algebra files or builtin catalog names, run
// check suites, twist/perturb/dualize structures, and emit the results.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "homlie/algfile.hpp"
#include "homlie/sl2.hpp"

using namespace homlie;

namespace {

struct Report {
    std::vector<CheckItem> items;
    void add(const std::string& suite, const CheckItem& it) {
        items.push_back({suite + "/" + it.name, it.pass, it.witness});
    }
    void add(const std::string& suite, const AxiomReport& rep) {
        for (const auto& it : rep.items) add(suite, it);
    }
    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
};

struct Options {
    std::string format = "human";
    std::string params;
    std::string out;
    int n = 1;
};

bool machine_format(const Options& o) { return o.format == "machine"; }

Bindings parse_params(const std::string& text) {
    Bindings b{};
    if (text.empty()) return b;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto eq = part.find('=');
        if (eq == std::string::npos || eq != 1 || part.find_first_of("abc") != 0)
            throw ParseError("--params expects a=...,b=...,c=... entries, got '" + part + "'");
        Scalar v = parse_scalar(part.substr(2));
        if (!v.is_numeric())
            throw ParseError("--params value for '" + part.substr(0, 1) +
                             "' must be numeric, got '" + part.substr(2) + "'");
        b[part[0] - 'a'] = v.numeric();
    }
    return b;
}

// A resolved target: either a structure (AlgebraFile) or a catalog
// endomorphism.
struct Target {
    std::string name;
    std::optional<AlgebraFile> file;
    std::optional<Sl2Endo> endo;
};

std::vector<Scalar> parse_args(const std::string& inside) {
    std::vector<Scalar> out;
    std::stringstream ss(inside);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(parse_scalar(part));
    return out;
}

AlgebraFile classical_sl2_file() {
    HomLieCoalgebra C = sl2_cobracket();
    Tensor2 r = standard_r();
    return from_parts(make_sl2(), &C, &r, nullptr);
}

Target resolve_target(const std::string& spec) {
    std::string head = spec;
    std::vector<Scalar> args;
    if (auto p = spec.find('('); p != std::string::npos && spec.back() == ')') {
        head = spec.substr(0, p);
        args = parse_args(spec.substr(p + 1, spec.size() - p - 2));
    }
    auto arg = [&](std::size_t i, const Scalar& dflt) {
        return i < args.size() ? args[i] : dflt;
    };
    if (head == "sl2" || head == "sl2.r") return {spec, classical_sl2_file(), {}};
    if (head == "sl2.bialg" || head == "sl2.dual") {
        HomLieBialgebra B = sl2_alpha_bialgebra(arg(0, Scalar::var('b')));
        if (head == "sl2.dual") {
            B = dualize(B);
            return {spec, from_parts(B.algebra, &B.coalgebra, nullptr, nullptr), {}};
        }
        Tensor2 r = standard_r();
        return {spec, from_parts(B.algebra, &B.coalgebra, &r, nullptr), {}};
    }
    if (head == "sl2.alpha1" || head == "sl2.alpha2" || head == "sl2.alpha3") {
        int family = head.back() - '0';
        // families 1-2 require ac = 0, so their symbolic default sets c = 0
        Scalar c0 = family == 3 ? Scalar::var('c') : Scalar(0);
        return {spec, {},
                endo(family, arg(0, Scalar::var('a')), arg(1, Scalar::var('b')),
                     arg(2, c0))};
    }
    return {spec, load_algebra_file(spec), {}};
}

Target resolve_structure(const std::string& spec, const Options& opt) {
    Target t = resolve_target(spec);
    if (!t.file) throw ValidationError("'" + spec + "' names an endomorphism, not a structure");
    apply_params(*t.file, parse_params(opt.params));
    return t;
}

void require_cobracket(const AlgebraFile& f, const std::string& what) {
    if (!f.has_cobracket) throw ValidationError(what + " needs a cobracket");
}

void require_r(const AlgebraFile& f, const std::string& what) {
    if (!f.r) throw ValidationError(what + " needs an r tensor");
}

void run_suite(const AlgebraFile& f, const std::string& suite, Report& rep) {
    HomLieAlgebra L = to_algebra(f);
    bool all = suite == "all";
    if (all || suite == "algebra") rep.add("algebra", check_hom_lie(L));
    if (suite == "coalgebra" || suite == "bialgebra" || suite == "coboundary" ||
        suite == "quasitriangular")
        require_cobracket(f, "suite '" + suite + "'");
    if (f.has_cobracket) {
        HomLieBialgebra B{L, to_coalgebra(f)};
        if (all || suite == "coalgebra")
            rep.add("coalgebra", check_hom_lie_coalgebra(B.coalgebra));
        if (all || suite == "bialgebra") rep.add("bialgebra", check_hom_lie_bialgebra(B));
        if (suite == "coboundary" || suite == "quasitriangular")
            require_r(f, "suite '" + suite + "'");
        if (f.r) {
            if (all || suite == "coboundary")
                rep.add("coboundary", check_coboundary(B, *f.r));
            if (all || suite == "quasitriangular")
                rep.add("quasitriangular", check_quasi_triangular(B, *f.r));
        }
    }
}

void emit_result(const AlgebraFile& f, const Options& opt) {
    std::string text = emit_algebra_file(f);
    if (!opt.out.empty()) {
        std::ofstream os(opt.out);
        if (!os) throw Error("cannot write to " + opt.out);
        os << text;
        return;
    }
    if (machine_format(opt)) std::cout << "emit-begin\n" << text << "emit-end\n";
    else std::cout << "\n" << text;
}

int print_report(const std::string& command, const Target& t, const std::string& suite,
                 const Report& rep, const Options& opt,
                 std::chrono::steady_clock::time_point t0) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    bool pass = rep.all_pass();
    if (machine_format(opt)) {
        std::cout << "schema=1\ncommand=" << command << "\ntarget=" << t.name << "\n";
        if (!suite.empty()) std::cout << "suite=" << suite << "\n";
        for (const auto& it : rep.items) {
            std::cout << "check." << it.name << "=" << (it.pass ? "pass" : "fail") << "\n";
            if (!it.pass && !it.witness.empty())
                std::cout << "witness." << it.name << "=" << it.witness << "\n";
        }
        std::cout << "status=" << (pass ? "pass" : "fail") << "\nelapsed_ms=" << ms << "\n";
    } else {
        std::cout << command << " " << t.name;
        if (!suite.empty()) std::cout << " suite=" << suite;
        std::cout << "\n";
        int failures = 0;
        for (const auto& it : rep.items) {
            if (it.pass) {
                std::cout << "  ok   " << it.name << "\n";
            } else {
                ++failures;
                std::cout << "  FAIL " << it.name;
                if (!it.witness.empty()) std::cout << " -- " << it.witness;
                std::cout << "\n";
            }
        }
        std::cout << rep.items.size() << " checks, " << failures << " failure"
                  << (failures == 1 ? "" : "s") << " (" << ms << " ms)\n";
    }
    return pass ? 0 : 1;
}

int cmd_check(const std::string& spec, const std::string& suite, const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    Target t = resolve_target(spec);
    Report rep;
    if (t.endo) {
        // endomorphism targets: report the morphism property of the matrix
        rep.add("endo", is_lie_morphism(make_sl2(), t.endo->matrix));
    } else {
        apply_params(*t.file, parse_params(opt.params));
        run_suite(*t.file, suite, rep);
    }
    return print_report("check", t, t.endo ? "" : suite, rep, opt, t0);
}

int cmd_twist(const std::string& spec, const std::string& endo_spec, const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    Target t = resolve_structure(spec, opt);
    Target e = resolve_target(endo_spec);
    LinearMap fm;
    if (e.endo) {
        fm = e.endo->matrix;
        Bindings b = parse_params(opt.params);
        for (Scalar& x : fm.a) x = x.substitute(b);
    } else {
        // a file target supplies the morphism through its alpha matrix
        if (!e.file->has_alpha)
            throw ValidationError("'" + endo_spec + "' has no alpha matrix to twist along");
        apply_params(*e.file, parse_params(opt.params));
        fm = e.file->alpha;
    }

    const AlgebraFile& f = *t.file;
    HomLieAlgebra L = to_algebra(f);
    Report rep;
    HomLieAlgebra Lt = yau_twist(L, fm);  // NotAMorphism on a bad map
    rep.add("twist", {"morphism", true, ""});
    rep.add("twist", check_hom_lie(Lt));

    std::optional<HomLieCoalgebra> Ct;
    if (f.has_cobracket) {
        // The cobracket only twists along a map that commutes with it; for a
        // plain Lie morphism the output carries the twisted algebra and r
        // without a cobracket.
        HomLieCoalgebra C = to_coalgebra(f);
        bool commutes = true;
        for (std::size_t i = 0; i < L.dim && commutes; ++i) {
            Vec img(L.dim);
            for (std::size_t m = 0; m < L.dim; ++m) img[m] = fm.at(m, i);
            commutes = tensor_power_apply(fm, C.cobracket_basis(i)) == C.cobracket(img);
        }
        if (commutes) {
            HomLieBialgebra Bt = bialgebra_twist({L, C}, fm);
            Ct = Bt.coalgebra;
            rep.add("twist-bialgebra", check_hom_lie_bialgebra(Bt));
        } else {
            rep.add("twist", {"cobracket-dropped", true,
                              "map is not a cobracket morphism"});
        }
    }
    std::optional<Tensor2> rt;
    if (f.r) {
        rt = twisted_solution(L, fm, *f.r, opt.n);
        Tensor3 res = chybe_residual(Lt, *rt);
        rep.add("twist", {"twisted-chybe", res.is_zero(),
                          res.is_zero() ? "" : render_tensor(Lt, res)});
    }
    int code = print_report("twist", t, "", rep, opt, t0);
    emit_result(from_parts(Lt, Ct ? &*Ct : nullptr, rt ? &*rt : nullptr, nullptr), opt);
    return code;
}

int cmd_perturb(const std::string& spec, const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    Target t = resolve_structure(spec, opt);
    const AlgebraFile& f = *t.file;
    require_cobracket(f, "perturb");
    if (!f.t) throw ValidationError("perturb needs a t tensor in the input");
    HomLieBialgebra B{to_algebra(f), to_coalgebra(f)};

    Report rep;
    std::optional<Tensor2> r_out;
    HomLieBialgebra out = B;
    if (f.r) {
        QuasiTriangularStructure qt = perturb_quasi(make_quasi_triangular(B, *f.r), *f.t);
        out = qt.cb.b;
        r_out = qt.cb.r;
        rep.add("perturb", check_quasi_triangular(out, *r_out));
    } else {
        out = perturb(B, *f.t);
        rep.add("perturb", check_hom_lie_bialgebra(out));
    }
    int code = print_report("perturb", t, "", rep, opt, t0);
    emit_result(from_parts(out.algebra, &out.coalgebra, r_out ? &*r_out : nullptr, nullptr),
                opt);
    return code;
}

int cmd_dualize(const std::string& spec, const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    Target t = resolve_structure(spec, opt);
    require_cobracket(*t.file, "dualize");
    HomLieBialgebra D = dualize({to_algebra(*t.file), to_coalgebra(*t.file)});
    Report rep;
    rep.add("dual", check_hom_lie_bialgebra(D));
    int code = print_report("dualize", t, "", rep, opt, t0);
    emit_result(from_parts(D.algebra, &D.coalgebra, nullptr, nullptr), opt);
    return code;
}

int cmd_catalog() {
    std::cout << "sl2                     classical sl(2) bialgebra with the standard r\n"
              << "sl2.r                   same structure; r = X+ ox X- + 1/4 H ox H\n"
              << "sl2.alpha1(a,b,c)       endomorphism family 1 (b != 0, ac = 0)\n"
              << "sl2.alpha2(a,b,c)       endomorphism family 2 (b != 0, ac = 0)\n"
              << "sl2.alpha3(a,b,c)       endomorphism family 3 (ab != 0, c != +-1)\n"
              << "sl2.bialg(b)            twisted bialgebra along diag(1, b, 1/b)\n"
              << "sl2.dual(b)             dual of sl2.bialg(b)\n"
              << "Arguments default to the symbolic variables; any target also accepts\n"
              << "--params a=...,b=...,c=... for numeric evaluation.\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification kernel for Hom-Lie bialgebras"};
    app.require_subcommand(1);

    Options opt;
    std::string target, suite = "all", endo_spec;

    auto add_common = [&](CLI::App* cmd, bool takes_output) {
        cmd->add_option("target", target, "algebra file path or catalog name")->required();
        cmd->add_option("--params", opt.params, "numeric bindings a=...,b=...,c=...");
        cmd->add_option("--format", opt.format, "human or machine")
            ->check(CLI::IsMember({"human", "machine"}));
        if (takes_output)
            cmd->add_option("-o,--output", opt.out, "write the emitted file here");
    };

    CLI::App* check = app.add_subcommand("check", "run an invariant suite");
    add_common(check, false);
    check->add_option("--suite", suite, "which checks to run")
        ->check(CLI::IsMember(
            {"algebra", "coalgebra", "bialgebra", "coboundary", "quasitriangular", "all"}));

    CLI::App* twist = app.add_subcommand("twist", "Yau twist along a morphism");
    add_common(twist, true);
    twist->add_option("--endo", endo_spec, "catalog endomorphism or file with alpha")
        ->required();
    twist->add_option("--n", opt.n, "apply (alpha ox alpha)^n to r")
        ->check(CLI::NonNegativeNumber);

    CLI::App* perturb = app.add_subcommand("perturb", "perturb the cobracket by ad(t)");
    add_common(perturb, true);

    CLI::App* dual = app.add_subcommand("dualize", "dual bialgebra on the dual basis");
    add_common(dual, true);

    CLI::App* catalog = app.add_subcommand("catalog", "list builtin structures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (catalog->parsed()) return cmd_catalog();
        if (check->parsed()) return cmd_check(target, suite, opt);
        if (twist->parsed()) return cmd_twist(target, endo_spec, opt);
        if (perturb->parsed()) return cmd_perturb(target, opt);
        return cmd_dualize(target, opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error";
        if (e.line) std::cerr << " (line " << e.line << ")";
        std::cerr << ": " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const ConstraintViolation& e) {
        std::cerr << "constraint violation: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
